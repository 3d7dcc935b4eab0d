#include "torfan/linalg.hpp"

#include "torfan/error.hpp"

#include <sstream>

namespace torfan {

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> x) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !x[i].is_zero()) s += Rational(a[i]) * x[i];
    return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> x) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !x[i].is_zero()) s += a[i] * x[i];
    return s;
}

bool is_zero(std::span<const Integer> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Integer content(std::span<const Integer> v) {
    Integer g;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        g = gcd(g, x);
        if (g.is_one()) break;
    }
    return g;
}

void make_primitive(IntVector& v) {
    Integer g = content(v);
    if (g.is_zero() || g.is_one()) return;
    for (auto& x : v) x = exact_div(x, g);
}

IntVector combine(const Integer& a, std::span<const Integer> x, const Integer& b, std::span<const Integer> y) {
    IntVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] - b * y[i];
    return out;
}

RatVector to_rational(std::span<const Integer> v) { return RatVector(v.begin(), v.end()); }

IntVector clear_denominators(std::span<const Rational> v, Integer* multiplier) {
    Integer l = 1;
    for (const auto& x : v) l = lcm(l, x.den());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].num() * exact_div(l, v[i].den());
    if (multiplier) *multiplier = l;
    return out;
}

IntVector primitive(std::span<const Rational> v) {
    IntVector out = clear_denominators(v);
    if (is_zero(out)) throw PreconditionError("primitive: zero vector has no ray");
    make_primitive(out);
    return out;
}

IntVector primitive(std::span<const Integer> v) {
    if (is_zero(v)) throw PreconditionError("primitive: zero vector has no ray");
    IntVector out(v.begin(), v.end());
    make_primitive(out);
    return out;
}

template <class T>
static std::string join(std::span<const T> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(std::span<const Integer> v) { return join(v); }
std::string to_string(std::span<const Rational> v) { return join(v); }

namespace {

// Column operation on columns p, j of a and u: (col_p, col_j) <- (s col_p + t col_j, x col_p + y col_j),
// with the inverse applied to the rows of u_inv. Requires s*y - x*t = ±1.
struct ColumnOps {
    IntMatrix& a;
    IntMatrix& u;
    IntMatrix& u_inv;

    void mix(std::size_t p, std::size_t j, const Integer& s, const Integer& t, const Integer& x, const Integer& y) {
        auto apply_cols = [&](IntMatrix& m) {
            for (std::size_t i = 0; i < m.rows(); ++i) {
                Integer cp = m(i, p);
                Integer cj = m(i, j);
                m(i, p) = s * cp + t * cj;
                m(i, j) = x * cp + y * cj;
            }
        };
        apply_cols(a);
        apply_cols(u);
        const Integer det = s * y - x * t;
        // inverse block = det * [[y, -x], [-t, s]] since det = ±1
        for (std::size_t k = 0; k < u_inv.cols(); ++k) {
            Integer rp = u_inv(p, k);
            Integer rj = u_inv(j, k);
            u_inv(p, k) = det * (y * rp - x * rj);
            u_inv(j, k) = det * (s * rj - t * rp);
        }
    }

    void negate(std::size_t p) {
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, p) = -a(i, p);
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, p) = -u(i, p);
        for (std::size_t k = 0; k < u_inv.cols(); ++k) u_inv(p, k) = -u_inv(p, k);
    }

    // col_k -= q col_p
    void subtract(std::size_t k, std::size_t p, const Integer& q) {
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, k) -= q * a(i, p);
        for (std::size_t i = 0; i < u.rows(); ++i) u(i, k) -= q * u(i, p);
        for (std::size_t c = 0; c < u_inv.cols(); ++c) u_inv(p, c) += q * u_inv(k, c);
    }
};

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t n = m.cols();
    HermiteResult res{m, IntMatrix::identity(n), IntMatrix::identity(n), 0, {}};
    ColumnOps ops{res.h, res.u, res.u_inv};
    std::size_t pc = 0;
    for (std::size_t i = 0; i < r && pc < n; ++i) {
        for (std::size_t j = pc + 1; j < n; ++j) {
            if (res.h(i, j).is_zero()) continue;
            const Integer a = res.h(i, pc);
            const Integer b = res.h(i, j);
            auto [g, s, t] = extended_gcd(a, b);
            ops.mix(pc, j, s, t, -exact_div(b, g), exact_div(a, g));
        }
        if (res.h(i, pc).is_zero()) continue;
        if (res.h(i, pc).sign() < 0) ops.negate(pc);
        for (std::size_t k = 0; k < pc; ++k) {
            Integer q = floor_div(res.h(i, k), res.h(i, pc));
            if (!q.is_zero()) ops.subtract(k, pc, q);
        }
        res.pivot_rows.push_back(i);
        ++pc;
    }
    res.rank = pc;
    return res;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
    HermiteResult hnf = hermite_normal_form(m);
    std::vector<IntVector> basis;
    for (std::size_t j = hnf.rank; j < m.cols(); ++j) basis.push_back(hnf.u.column(j));
    return basis;
}

std::optional<IntVector> integral_preimage(const IntMatrix& m, std::span<const Integer> rhs) {
    HermiteResult hnf = hermite_normal_form(m);
    IntVector y(m.cols());
    std::size_t next = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer s;
        for (std::size_t k = 0; k < next; ++k) s += hnf.h(i, k) * y[k];
        if (next < hnf.rank && hnf.pivot_rows[next] == i) {
            Integer diff = rhs[i] - s;
            if (!divides(hnf.h(i, next), diff)) return std::nullopt;
            y[next] = exact_div(diff, hnf.h(i, next));
            ++next;
        } else if (s != rhs[i]) {
            return std::nullopt;
        }
    }
    return hnf.u.apply(y);
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

IntMatrix rows_to_matrix(std::size_t cols, std::span<const IntVector> rows) {
    return IntMatrix::from_rows(cols, rows);
}

std::size_t rank(std::size_t dim, std::span<const IntVector> vectors) {
    if (vectors.empty()) return 0;
    return rank(rows_to_matrix(dim, vectors));
}

std::vector<IntVector> lattice_basis(std::size_t dim, std::span<const IntVector> generators) {
    if (generators.empty()) return {};
    IntMatrix cols = rows_to_matrix(dim, generators).transpose();
    HermiteResult hnf = hermite_normal_form(cols);
    std::vector<IntVector> out;
    for (std::size_t k = 0; k < hnf.rank; ++k) out.push_back(hnf.h.column(k));
    return out;
}

bool in_lattice(std::size_t dim, std::span<const IntVector> basis, std::span<const Integer> v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    return integral_preimage(rows_to_matrix(dim, basis).transpose(), v).has_value();
}

std::vector<IntVector> saturated_basis(std::size_t dim, std::span<const IntVector> vectors) {
    std::vector<IntVector> nonzero;
    for (const auto& v : vectors)
        if (!is_zero(v)) nonzero.push_back(v);
    if (nonzero.empty()) return {};
    std::vector<IntVector> ann = kernel_basis(rows_to_matrix(dim, nonzero));
    std::vector<IntVector> sat;
    if (ann.empty()) {
        IntMatrix id = IntMatrix::identity(dim);
        for (std::size_t i = 0; i < dim; ++i) sat.push_back(id.row(i));
    } else {
        sat = kernel_basis(rows_to_matrix(dim, ann));
    }
    return lattice_basis(dim, sat);
}

std::vector<IntVector> annihilator(std::size_t dim, std::span<const IntVector> vectors) {
    std::vector<IntVector> nonzero;
    for (const auto& v : vectors)
        if (!is_zero(v)) nonzero.push_back(v);
    if (nonzero.empty()) {
        IntMatrix id = IntMatrix::identity(dim);
        std::vector<IntVector> out;
        for (std::size_t i = 0; i < dim; ++i) out.push_back(id.row(i));
        return out;
    }
    return lattice_basis(dim, kernel_basis(rows_to_matrix(dim, nonzero)));
}

std::vector<IntVector> subspace_intersection(std::size_t dim, std::span<const IntVector> a,
                                             std::span<const IntVector> b) {
    if (a.empty() || b.empty()) return {};
    std::vector<IntVector> ann = annihilator(dim, a);
    std::vector<IntVector> ann_b = annihilator(dim, b);
    ann.insert(ann.end(), ann_b.begin(), ann_b.end());
    if (ann.empty()) return saturated_basis(dim, a);
    return annihilator(dim, ann);
}

IntVector reduce_modulo(std::span<const Integer> v, std::span<const IntVector> basis) {
    IntVector out(v.begin(), v.end());
    for (const auto& b : basis) {
        std::size_t p = 0;
        while (b[p].is_zero()) ++p;
        if (out[p].is_zero()) continue;
        Integer coeff = out[p];
        const Integer& h = b[p];
        if (divides(h, coeff)) {
            Integer q = exact_div(coeff, h);
            for (std::size_t i = 0; i < out.size(); ++i)
                if (!b[i].is_zero()) out[i] -= q * b[i];
        } else {
            out = combine(h, out, coeff, b);
        }
    }
    return out;
}

bool in_span(std::size_t dim, std::span<const IntVector> basis, std::span<const Integer> v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    std::vector<IntVector> all(basis.begin(), basis.end());
    std::size_t r0 = rank(dim, all);
    all.emplace_back(v.begin(), v.end());
    return rank(dim, all) == r0;
}

std::optional<RatVector> solve(const RatMatrix& a, std::span<const Rational> b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    RatMatrix aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && aug(sel, col).is_zero()) ++sel;
        if (sel == m) continue;
        if (sel != row)
            for (std::size_t j = 0; j <= n; ++j) std::swap(aug(sel, j), aug(row, j));
        Rational inv = Rational(1) / aug(row, col);
        for (std::size_t j = col; j <= n; ++j) aug(row, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || aug(i, col).is_zero()) continue;
            Rational f = aug(i, col);
            for (std::size_t j = col; j <= n; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!aug(i, n).is_zero()) return std::nullopt;
    RatVector x(n);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, n);
    return x;
}

}  // namespace torfan
