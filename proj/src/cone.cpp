#include "torfan/cone.hpp"

#include "torfan/double_description.hpp"
#include "torfan/error.hpp"

#include <algorithm>
#include <set>

namespace torfan {

namespace {

// Reduce modulo `basis`, make primitive, drop zeros, sort and deduplicate.
std::vector<IntVector> canonical_vectors(std::span<const IntVector> vs, std::span<const IntVector> basis) {
    std::vector<IntVector> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
        IntVector r = reduce_modulo(v, basis);
        if (is_zero(r)) continue;
        make_primitive(r);
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void check_dims(std::size_t dim, std::span<const IntVector> vs, const char* what) {
    for (const auto& v : vs)
        if (v.size() != dim) throw PreconditionError(std::string(what) + ": vector of wrong dimension");
}

}  // namespace

InequalityRep to_inequalities(std::size_t dim, const GeneratorRep& gens) {
    check_dims(dim, gens.rays, "cone generators");
    check_dims(dim, gens.lineality, "cone lineality");
    // The dual cone's extreme rays are the facet normals; its lineality is the orthogonal complement.
    RawGenerators dual = double_description(dim, gens.rays, gens.lineality);
    InequalityRep out;
    out.equations = saturated_basis(dim, dual.lineality);
    out.inequalities = canonical_vectors(dual.rays, out.equations);
    return out;
}

GeneratorRep to_generators(std::size_t dim, const InequalityRep& ineqs) {
    check_dims(dim, ineqs.inequalities, "cone inequalities");
    check_dims(dim, ineqs.equations, "cone equations");
    RawGenerators raw = double_description(dim, ineqs.inequalities, ineqs.equations);
    GeneratorRep out;
    out.lineality = saturated_basis(dim, raw.lineality);
    out.rays = canonical_vectors(raw.rays, out.lineality);
    return out;
}

Cone::Cone(std::size_t dim, GeneratorRep gens, InequalityRep ineqs)
    : dim_(dim),
      rays_(std::move(gens.rays)),
      lineality_(std::move(gens.lineality)),
      facets_(std::move(ineqs.inequalities)),
      equations_(std::move(ineqs.equations)) {}

Cone Cone::from_generators(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality) {
    return dual_description(dim, GeneratorRep{std::move(rays), std::move(lineality)});
}

Cone Cone::from_inequalities(std::size_t dim, std::vector<IntVector> inequalities, std::vector<IntVector> equations) {
    return dual_description(dim, InequalityRep{std::move(inequalities), std::move(equations)});
}

Cone dual_description(std::size_t dim, const GeneratorRep& gens) {
    InequalityRep ineqs = to_inequalities(dim, gens);
    GeneratorRep canon = to_generators(dim, ineqs);
    return Cone(dim, std::move(canon), std::move(ineqs));
}

Cone dual_description(std::size_t dim, const InequalityRep& ineqs) {
    GeneratorRep gens = to_generators(dim, ineqs);
    InequalityRep canon = to_inequalities(dim, gens);
    return Cone(dim, std::move(gens), std::move(canon));
}

Cone Cone::whole_space(std::size_t dim) { return from_inequalities(dim, {}); }

Cone Cone::origin(std::size_t dim) { return from_generators(dim, {}); }

bool Cone::contains(std::span<const Integer> v) const {
    for (const auto& e : equations_)
        if (!dot(e, v).is_zero()) return false;
    for (const auto& f : facets_)
        if (dot(f, v).sign() < 0) return false;
    return true;
}

bool Cone::contains(std::span<const Rational> v) const {
    for (const auto& e : equations_)
        if (!dot(e, v).is_zero()) return false;
    for (const auto& f : facets_)
        if (dot(f, v).sign() < 0) return false;
    return true;
}

bool Cone::contains(const Cone& other) const {
    if (other.dim_ != dim_) return false;
    for (const auto& r : other.rays_)
        if (!contains(r)) return false;
    for (const auto& l : other.lineality_) {
        for (const auto& e : equations_)
            if (!dot(e, l).is_zero()) return false;
        for (const auto& f : facets_)
            if (!dot(f, l).is_zero()) return false;
    }
    return true;
}

bool Cone::in_relative_interior(std::span<const Integer> v) const {
    if (!contains(v)) return false;
    for (const auto& f : facets_)
        if (dot(f, v).sign() <= 0) return false;
    return true;
}

Cone Cone::intersect(const Cone& other) const {
    std::vector<IntVector> ineqs = facets_;
    ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
    std::vector<IntVector> eqs = equations_;
    eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
    return from_inequalities(dim_, std::move(ineqs), std::move(eqs));
}

IntVector Cone::relative_interior_point() const {
    IntVector p(dim_);
    for (const auto& r : rays_)
        for (std::size_t i = 0; i < dim_; ++i) p[i] += r[i];
    return p;
}

Cone Cone::face_containing(std::span<const Integer> v) const {
    if (!contains(v)) throw PreconditionError("face_containing: point " + to_string(v) + " is outside the cone");
    std::vector<const IntVector*> tight;
    for (const auto& f : facets_)
        if (dot(f, v).is_zero()) tight.push_back(&f);
    std::vector<IntVector> rays;
    for (const auto& r : rays_) {
        bool on = std::all_of(tight.begin(), tight.end(), [&](const IntVector* f) { return dot(*f, r).is_zero(); });
        if (on) rays.push_back(r);
    }
    return from_generators(dim_, std::move(rays), lineality_);
}

Cone Cone::dual() const {
    // Swapping the roles of the two representations.
    std::vector<IntVector> eqs = lineality_;
    return Cone(dim_, GeneratorRep{facets_, equations_}, InequalityRep{rays_, std::move(eqs)});
}

std::strong_ordering operator<=>(const Cone& a, const Cone& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.rays_ <=> b.rays_; c != 0) return c;
    if (auto c = a.lineality_ <=> b.lineality_; c != 0) return c;
    if (auto c = a.facets_ <=> b.facets_; c != 0) return c;
    return a.equations_ <=> b.equations_;
}

std::vector<Cone> faces(const Cone& c) {
    const auto& rays = c.rays();
    const auto& facets = c.facets();
    std::vector<std::vector<std::size_t>> tight(facets.size());
    for (std::size_t j = 0; j < facets.size(); ++j)
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (dot(facets[j], rays[i]).is_zero()) tight[j].push_back(i);

    std::vector<std::size_t> all(rays.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::set<std::vector<std::size_t>> seen{all};
    std::vector<std::vector<std::size_t>> stack{all};
    while (!stack.empty()) {
        auto s = std::move(stack.back());
        stack.pop_back();
        for (const auto& t : tight) {
            std::vector<std::size_t> meet;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(meet));
            if (meet.size() != s.size() && seen.insert(meet).second) stack.push_back(std::move(meet));
        }
    }

    std::vector<Cone> out;
    out.reserve(seen.size());
    for (const auto& s : seen) {
        std::vector<IntVector> gens;
        for (auto i : s) gens.push_back(rays[i]);
        out.push_back(Cone::from_generators(c.ambient_dim(), std::move(gens), c.lineality()));
    }
    std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
        if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
        return a.rays() < b.rays();
    });
    return out;
}

}  // namespace torfan
