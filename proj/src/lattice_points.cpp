#include "torfan/lattice_points.hpp"

#include "torfan/error.hpp"

#include <algorithm>
#include <optional>

namespace torfan {

namespace {

struct Row {
    IntVector a;
    Integer b;  // a.z >= b
};

enum class Mode { all_points, hull_candidates };

struct Enumerator {
    Mode mode;
    std::size_t budget;
    std::size_t counted = 0;
    std::vector<IntVector> out;

    void charge(const Integer& n) {
        if (n.sign() <= 0) return;
        const auto room = static_cast<std::int64_t>(budget - std::min(budget, counted));
        auto small = n.to_int64();
        if (!small || *small > room)
            throw BudgetExceeded("lattice point enumeration exceeded the budget of " + std::to_string(budget) +
                                 " points");
        counted += static_cast<std::size_t>(*small);
    }

    static std::optional<std::vector<Row>> substitute(const std::vector<Row>& rows, const Integer& value) {
        std::vector<Row> next;
        next.reserve(rows.size());
        for (const auto& r : rows) {
            Row s{IntVector(r.a.begin() + 1, r.a.end()), r.b - r.a[0] * value};
            if (is_zero(s.a)) {
                if (s.b.sign() > 0) return std::nullopt;
                continue;
            }
            next.push_back(std::move(s));
        }
        return next;
    }

    // Integer interval of the single remaining coordinate.
    static std::optional<std::pair<Integer, Integer>> interval(const std::vector<Row>& rows) {
        std::optional<Integer> lo, hi;
        for (const auto& r : rows) {
            const int s = r.a[0].sign();
            if (s > 0) {
                Integer v = ceil_div(r.b, r.a[0]);
                if (!lo || v > *lo) lo = v;
            } else if (s < 0) {
                Integer v = floor_div(r.b, r.a[0]);
                if (!hi || v < *hi) hi = v;
            } else if (r.b.sign() > 0) {
                return std::nullopt;
            }
        }
        if (!lo || !hi) throw InvariantViolation("lattice enumeration over an unbounded region");
        if (*lo > *hi) return std::nullopt;
        return std::make_pair(*lo, *hi);
    }

    // Range of the first of two remaining coordinates, by exact Fourier-Motzkin elimination of the second.
    static std::optional<std::pair<Integer, Integer>> planar_range(const std::vector<Row>& rows) {
        std::vector<Row> projected;
        for (const auto& r : rows)
            if (r.a[1].is_zero()) projected.push_back(Row{IntVector{r.a[0]}, r.b});
        for (const auto& p : rows) {
            if (p.a[1].sign() <= 0) continue;
            for (const auto& n : rows) {
                if (n.a[1].sign() >= 0) continue;
                const Integer wp = -n.a[1], wn = p.a[1];
                projected.push_back(Row{IntVector{wp * p.a[0] + wn * n.a[0]}, wp * p.b + wn * n.b});
            }
        }
        return interval(projected);
    }

    static std::optional<std::pair<Integer, Integer>> first_coordinate_range(const std::vector<Row>& rows,
                                                                            std::size_t r) {
        std::vector<AffineConstraint> cons;
        cons.reserve(rows.size());
        for (const auto& row : rows) cons.push_back(AffineConstraint{to_rational(row.a), Rational(row.b)});
        Polyhedron slice = Polyhedron::from_inequalities(r, cons);
        if (slice.is_empty()) return std::nullopt;
        if (!slice.is_bounded()) throw InvariantViolation("lattice enumeration over an unbounded region");
        Rational lo = slice.vertices().front()[0], hi = lo;
        for (const auto& v : slice.vertices()) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        Integer a = lo.ceil(), b = hi.floor();
        if (a > b) return std::nullopt;
        return std::make_pair(a, b);
    }

    void emit(IntVector& prefix, std::initializer_list<Integer> tail) {
        IntVector p = prefix;
        p.insert(p.end(), tail.begin(), tail.end());
        out.push_back(std::move(p));
    }

    void run(const std::vector<Row>& rows, std::size_t r, IntVector& prefix) {
        if (r == 1) {
            auto iv = interval(rows);
            if (!iv) return;
            charge(iv->second - iv->first + Integer(1));
            if (mode == Mode::hull_candidates) {
                emit(prefix, {iv->first});
                if (iv->second != iv->first) emit(prefix, {iv->second});
            } else {
                for (Integer x = iv->first; x <= iv->second; x += Integer(1)) emit(prefix, {x});
            }
            return;
        }
        if (r == 2) {
            planar(rows, prefix);
            return;
        }
        auto range = first_coordinate_range(rows, r);
        if (!range) return;
        for (Integer x = range->first; x <= range->second; x += Integer(1)) {
            auto next = substitute(rows, x);
            if (!next) continue;
            prefix.push_back(x);
            run(*next, r - 1, prefix);
            prefix.pop_back();
        }
    }

    void planar(const std::vector<Row>& rows, IntVector& prefix) {
        auto range = planar_range(rows);
        if (!range) return;
        std::vector<std::pair<Integer, Integer>> pts;
        for (Integer x = range->first; x <= range->second; x += Integer(1)) {
            auto next = substitute(rows, x);
            if (!next) continue;
            auto iv = interval(*next);
            if (!iv) continue;
            charge(iv->second - iv->first + Integer(1));
            if (mode == Mode::hull_candidates) {
                pts.emplace_back(x, iv->first);
                if (iv->second != iv->first) pts.emplace_back(x, iv->second);
            } else {
                for (Integer y = iv->first; y <= iv->second; y += Integer(1)) emit(prefix, {x, y});
            }
        }
        if (mode == Mode::hull_candidates)
            for (const auto& [x, y] : convex_hull_2d(std::move(pts))) emit(prefix, {x, y});
    }

    // Andrew's monotone chain; strictly convex vertices only.
    static std::vector<std::pair<Integer, Integer>> convex_hull_2d(std::vector<std::pair<Integer, Integer>> pts) {
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() <= 2) return pts;
        auto cross = [](const auto& o, const auto& a, const auto& b) {
            return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
        };
        std::vector<std::pair<Integer, Integer>> hull(2 * pts.size());
        std::size_t k = 0;
        for (const auto& p : pts) {
            while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
            hull[k++] = p;
        }
        for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
            while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
            hull[k++] = pts[i];
        }
        hull.resize(k - 1);
        return hull;
    }
};

// Affine lattice parametrization x = x0 + K W [z; w], with w spanning the lattice part of the lineality.
struct Parametrization {
    IntVector x0;
    std::vector<IntVector> k_cols;  // basis of the direction lattice, as x-vectors
    std::vector<IntVector> w_cols;  // unimodular change of basis in y-space, bounded coordinates first
    std::size_t bounded = 0;        // number of z coordinates
    std::vector<Row> rows;          // constraints on z
    bool feasible = true;

    [[nodiscard]] IntVector to_x(std::span<const Integer> z) const {
        const std::size_t k = k_cols.size();
        IntVector y(k);
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t c = 0; c < k; ++c) y[c] += z[i] * w_cols[i][c];
        IntVector x = x0;
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[c] * k_cols[c][i];
        return x;
    }
};

IntVector to_integer(const RatVector& v) {
    IntVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_integer()) throw InvariantViolation("expected an integral constraint row");
        out.push_back(x.num());
    }
    return out;
}

Parametrization parametrize(const Polyhedron& p) {
    const std::size_t d = p.ambient_dim();
    Parametrization par;
    std::vector<IntVector> eq_rows;
    IntVector eq_rhs;
    for (const auto& e : p.equations()) {
        if (!e.b.is_integer()) {
            par.feasible = false;
            return par;
        }
        eq_rows.push_back(to_integer(e.a));
        eq_rhs.push_back(e.b.num());
    }
    if (eq_rows.empty()) {
        par.x0 = IntVector(d);
        for (std::size_t i = 0; i < d; ++i) {
            IntVector e(d);
            e[i] = 1;
            par.k_cols.push_back(std::move(e));
        }
    } else {
        IntMatrix m = rows_to_matrix(d, eq_rows);
        auto x0 = integral_preimage(m, eq_rhs);
        if (!x0) {
            par.feasible = false;
            return par;
        }
        par.x0 = std::move(*x0);
        par.k_cols = kernel_basis(m);
    }
    const std::size_t k = par.k_cols.size();

    // Lineality in y-coordinates.
    std::vector<IntVector> lin_y;
    if (!p.lineality().empty()) {
        RatMatrix kmat(d, k);
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t i = 0; i < d; ++i) kmat(i, c) = Rational(par.k_cols[c][i]);
        for (const auto& l : p.lineality()) {
            auto y = solve(kmat, to_rational(l));
            if (!y) throw InvariantViolation("lineality direction outside the equation space");
            lin_y.push_back(clear_denominators(*y));
        }
        lin_y = saturated_basis(k, lin_y);
    }
    const std::size_t j = lin_y.size();
    par.bounded = k - j;
    if (j == 0) {
        for (std::size_t i = 0; i < k; ++i) {
            IntVector e(k);
            e[i] = 1;
            par.w_cols.push_back(std::move(e));
        }
    } else {
        auto h = hermite_normal_form(rows_to_matrix(k, lin_y));
        for (std::size_t i = j; i < k; ++i) par.w_cols.push_back(h.u_inv.row(i));
        for (std::size_t i = 0; i < j; ++i) par.w_cols.push_back(h.u_inv.row(i));
    }

    // Constraint a.x >= b becomes (a K W).z >= b - a.x0.
    for (const auto& c : p.inequalities()) {
        IntVector a = to_integer(c.a);
        IntVector ak(k);
        for (std::size_t col = 0; col < k; ++col) ak[col] = dot(a, par.k_cols[col]);
        IntVector az(k);
        for (std::size_t i = 0; i < k; ++i) az[i] = dot(ak, par.w_cols[i]);
        for (std::size_t i = par.bounded; i < k; ++i)
            if (!az[i].is_zero()) throw InvariantViolation("constraint not constant along the lineality");
        az.resize(par.bounded);
        Rational rhs = c.b - dot(a, std::span<const Rational>(to_rational(par.x0)));
        par.rows.push_back(Row{std::move(az), rhs.ceil()});
    }
    return par;
}

std::vector<IntVector> enumerate(const Polyhedron& p, Mode mode, std::size_t budget) {
    if (p.is_empty()) return {};
    Parametrization par = parametrize(p);
    if (!par.feasible) return {};
    const std::size_t m = par.bounded;
    Enumerator en{mode, budget, 0, {}};
    if (m == 0) {
        bool ok = std::all_of(par.rows.begin(), par.rows.end(), [](const Row& r) { return r.b.sign() <= 0; });
        if (ok) en.out.emplace_back();
    } else {
        std::vector<AffineConstraint> cons;
        for (const auto& r : par.rows) cons.push_back(AffineConstraint{to_rational(r.a), Rational(r.b)});
        Polyhedron q = Polyhedron::from_inequalities(m, cons);
        if (q.is_empty()) return {};
        if (!q.lineality().empty()) throw InvariantViolation("reparametrized polyhedron is not pointed");
        std::vector<Row> rows;
        for (const auto& c : q.inequalities()) rows.push_back(Row{to_integer(c.a), c.b.ceil()});
        for (std::size_t i = 0; i < m; ++i) {
            Rational lo = q.vertices().front()[i], hi = lo;
            for (const auto& v : q.vertices()) {
                lo = std::min(lo, v[i]);
                hi = std::max(hi, v[i]);
            }
            Integer lo_i = lo.floor(), hi_i = hi.ceil();
            for (const auto& r : q.rays()) {
                if (r[i].sign() < 0) lo_i += r[i];
                if (r[i].sign() > 0) hi_i += r[i];
            }
            IntVector e(m);
            e[i] = 1;
            rows.push_back(Row{e, lo_i});
            e[i] = -1;
            rows.push_back(Row{e, -hi_i});
        }
        IntVector prefix;
        en.run(rows, m, prefix);
    }
    std::vector<IntVector> xs;
    xs.reserve(en.out.size());
    for (const auto& z : en.out) xs.push_back(par.to_x(z));
    return xs;
}

}  // namespace

std::vector<IntVector> lattice_points(const Polyhedron& p, std::size_t budget) {
    if (!p.is_bounded()) throw PreconditionError("lattice_points: polyhedron is unbounded");
    auto pts = enumerate(p, Mode::all_points, budget);
    std::sort(pts.begin(), pts.end());
    return pts;
}

Polyhedron integer_hull(const Polyhedron& p, std::size_t budget) {
    if (p.is_empty()) return p;
    auto pts = enumerate(p, Mode::hull_candidates, budget);
    if (pts.empty()) return Polyhedron::empty(p.ambient_dim());
    std::vector<RatVector> vs;
    vs.reserve(pts.size());
    for (const auto& x : pts) vs.push_back(to_rational(x));
    return Polyhedron::from_generators(p.ambient_dim(), vs, p.rays(), p.lineality());
}

}  // namespace torfan
