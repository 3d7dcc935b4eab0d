#include "torfan/polyhedron.hpp"

#include "torfan/error.hpp"

#include <algorithm>

namespace torfan {

namespace {

// Integral primitive row (-b, a) of the homogenized constraint a.x >= b (or = b).
IntVector homogenize(const AffineConstraint& c, std::size_t dim) {
    if (c.a.size() != dim) throw PreconditionError("polyhedron constraint has wrong dimension");
    RatVector row;
    row.reserve(dim + 1);
    row.push_back(-c.b);
    row.insert(row.end(), c.a.begin(), c.a.end());
    IntVector out = clear_denominators(row);
    make_primitive(out);
    return out;
}

IntVector lift(const Integer& t, std::span<const Integer> x) {
    IntVector out;
    out.reserve(x.size() + 1);
    out.push_back(t);
    out.insert(out.end(), x.begin(), x.end());
    return out;
}

IntVector tail(const IntVector& v) { return IntVector(v.begin() + 1, v.end()); }

AffineConstraint dehomogenize(const IntVector& row) {
    AffineConstraint c;
    c.a = to_rational(tail(row));
    c.b = Rational(-row[0]);
    return c;
}

}  // namespace

Polyhedron::Polyhedron(std::size_t dim, Cone hom) : dim_(dim), hom_(std::move(hom)) {
    for (const auto& r : hom_.rays()) {
        const int s = r[0].sign();
        if (s < 0) throw InvariantViolation("homogenization has a ray with negative t");
        if (s == 0) {
            rays_.push_back(tail(r));
            continue;
        }
        RatVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(r[i + 1], r[0]);
        vertices_.push_back(std::move(v));
    }
    empty_ = vertices_.empty();
    if (empty_) {
        hom_ = Cone::origin(dim + 1);
        rays_.clear();
        return;
    }
    std::sort(vertices_.begin(), vertices_.end());
    for (const auto& l : hom_.lineality()) lineality_.push_back(tail(l));
    for (const auto& f : hom_.facets()) {
        bool has_vertex = std::any_of(hom_.rays().begin(), hom_.rays().end(), [&](const IntVector& r) {
            return r[0].sign() > 0 && dot(f, r).is_zero();
        });
        if (has_vertex) inequalities_.push_back(dehomogenize(f));
    }
    for (const auto& e : hom_.equations()) equations_.push_back(dehomogenize(e));
}

Polyhedron Polyhedron::from_inequalities(std::size_t dim, const std::vector<AffineConstraint>& inequalities,
                                         const std::vector<AffineConstraint>& equations) {
    std::vector<IntVector> rows, eqs;
    rows.reserve(inequalities.size() + 1);
    for (const auto& c : inequalities) rows.push_back(homogenize(c, dim));
    IntVector t_nonneg(dim + 1);
    t_nonneg[0] = 1;
    rows.push_back(std::move(t_nonneg));
    for (const auto& c : equations) eqs.push_back(homogenize(c, dim));
    return Polyhedron(dim, Cone::from_inequalities(dim + 1, std::move(rows), std::move(eqs)));
}

Polyhedron Polyhedron::from_generators(std::size_t dim, const std::vector<RatVector>& vertices,
                                       const std::vector<IntVector>& rays, const std::vector<IntVector>& lineality) {
    if (vertices.empty()) return empty(dim);
    std::vector<IntVector> gens, lin;
    for (const auto& v : vertices) {
        if (v.size() != dim) throw PreconditionError("polyhedron vertex has wrong dimension");
        Integer m;
        IntVector scaled = clear_denominators(v, &m);
        gens.push_back(lift(m, scaled));
    }
    for (const auto& r : rays) {
        if (r.size() != dim) throw PreconditionError("polyhedron ray has wrong dimension");
        gens.push_back(lift(0, r));
    }
    for (const auto& l : lineality) {
        if (l.size() != dim) throw PreconditionError("polyhedron lineality vector has wrong dimension");
        lin.push_back(lift(0, l));
    }
    return Polyhedron(dim, Cone::from_generators(dim + 1, std::move(gens), std::move(lin)));
}

Polyhedron Polyhedron::empty(std::size_t dim) { return Polyhedron(dim, Cone::origin(dim + 1)); }

Polyhedron Polyhedron::from_homogenization(std::size_t dim, Cone hom) {
    if (hom.ambient_dim() != dim + 1) throw PreconditionError("homogenization has wrong dimension");
    return Polyhedron(dim, std::move(hom));
}

std::size_t Polyhedron::dimension() const {
    if (empty_) throw PreconditionError("dimension of the empty polyhedron");
    return hom_.dimension() - 1;
}

Cone Polyhedron::recession_cone() const {
    if (empty_) return Cone::origin(dim_);
    return Cone::from_generators(dim_, rays_, lineality_);
}

bool Polyhedron::contains(std::span<const Rational> x) const {
    if (empty_ || x.size() != dim_) return false;
    for (const auto& e : equations_)
        if (dot(e.a, x) != e.b) return false;
    for (const auto& c : inequalities_)
        if (dot(c.a, x) < c.b) return false;
    return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
    if (other.empty_) return true;
    if (empty_) return false;
    return hom_.contains(other.hom_);
}

bool Polyhedron::is_lattice_polyhedron() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVector& v) {
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_integer(); });
    });
}

std::optional<IntVector> Polyhedron::descent_direction(std::span<const Integer> l) const {
    for (const auto& r : rays_)
        if (dot(l, r).sign() < 0) return r;
    for (const auto& v : lineality_) {
        const int s = dot(l, v).sign();
        if (s < 0) return v;
        if (s > 0) {
            IntVector neg = v;
            for (auto& x : neg) x = -x;
            return neg;
        }
    }
    return std::nullopt;
}

std::optional<Rational> Polyhedron::minimum(std::span<const Integer> l) const {
    if (empty_) throw PreconditionError("minimum over the empty polyhedron");
    if (descent_direction(l)) return std::nullopt;
    Rational best = dot(l, std::span<const Rational>(vertices_.front()));
    for (const auto& v : vertices_) best = std::min(best, dot(l, std::span<const Rational>(v)));
    return best;
}

FaceIndices Polyhedron::minimizing_face(std::span<const Integer> l) const {
    auto m = minimum(l);
    if (!m) throw PreconditionError("functional " + to_string(l) + " is unbounded below on the polyhedron");
    FaceIndices face;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (dot(l, std::span<const Rational>(vertices_[i])) == *m) face.vertices.push_back(i);
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (dot(l, rays_[i]).is_zero()) face.rays.push_back(i);
    return face;
}

Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q) {
    if (p.ambient_dim() != q.ambient_dim()) throw PreconditionError("minkowski_sum: dimension mismatch");
    if (p.is_empty() || q.is_empty()) throw PreconditionError("minkowski_sum: empty operand");
    const std::size_t d = p.ambient_dim();
    std::vector<RatVector> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& v : p.vertices())
        for (const auto& w : q.vertices()) {
            RatVector s(d);
            for (std::size_t i = 0; i < d; ++i) s[i] = v[i] + w[i];
            sums.push_back(std::move(s));
        }
    std::vector<IntVector> rays = p.rays(), lin = p.lineality();
    rays.insert(rays.end(), q.rays().begin(), q.rays().end());
    lin.insert(lin.end(), q.lineality().begin(), q.lineality().end());
    return Polyhedron::from_generators(d, sums, rays, lin);
}

Polyhedron minkowski_sum(const std::vector<Polyhedron>& ps) {
    if (ps.empty()) throw PreconditionError("minkowski_sum: no operands");
    Polyhedron acc = ps.front();
    for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
    return acc;
}

Polyhedron dilate(const Polyhedron& p, const Integer& c) {
    if (c.sign() <= 0) throw PreconditionError("dilate: factor must be positive");
    if (p.is_empty()) return p;
    std::vector<RatVector> vs = p.vertices();
    for (auto& v : vs)
        for (auto& x : v) x = x * Rational(c);
    return Polyhedron::from_generators(p.ambient_dim(), vs, p.rays(), p.lineality());
}

}  // namespace torfan
