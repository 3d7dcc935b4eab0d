#include "torfan/fan.hpp"

#include "torfan/error.hpp"

#include <algorithm>

namespace torfan {

namespace {

// True when some facet of a weakly separates a from b, so a ∩ b has lower dimension than a.
bool separated_one_way(const Cone& a, const Cone& b) {
    for (const auto& f : a.facets()) {
        bool all_nonpos = std::all_of(b.rays().begin(), b.rays().end(),
                                      [&](const IntVector& g) { return dot(f, g).sign() <= 0; }) &&
                          std::all_of(b.lineality().begin(), b.lineality().end(),
                                      [&](const IntVector& l) { return dot(f, l).is_zero(); });
        if (all_nonpos) return true;
    }
    return false;
}

bool separated(const Cone& a, const Cone& b) { return separated_one_way(a, b) || separated_one_way(b, a); }

void sort_unique(std::vector<Cone>& cones) {
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
}

}  // namespace

Fan::Fan(std::size_t dim, std::vector<Cone> maximal, Cone support)
    : dim_(dim), maximal_(std::move(maximal)), support_(std::move(support)) {
    if (support_.ambient_dim() != dim) throw PreconditionError("fan support has wrong dimension");
    for (const auto& c : maximal_)
        if (c.ambient_dim() != dim) throw PreconditionError("fan cone has wrong dimension");
    sort_unique(maximal_);
    if (!maximal_.empty()) {
        lineality_ = maximal_.front().lineality();
        for (std::size_t i = 1; i < maximal_.size(); ++i)
            lineality_ = subspace_intersection(dim, lineality_, maximal_[i].lineality());
    }
}

std::vector<IntVector> Fan::rays() const {
    std::vector<IntVector> out;
    for (const auto& c : maximal_)
        for (const auto& r : c.rays()) {
            IntVector v = reduce_modulo(r, lineality_);
            make_primitive(v);
            out.push_back(std::move(v));
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::size_t> Fan::maximal_cones_containing(std::span<const Integer> v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < maximal_.size(); ++i)
        if (maximal_[i].contains(v)) out.push_back(i);
    return out;
}

std::optional<Cone> Fan::minimal_cone_containing(std::span<const Integer> v) const {
    for (const auto& c : maximal_)
        if (c.contains(v)) return c.face_containing(v);
    return std::nullopt;
}

std::strong_ordering operator<=>(const Fan& a, const Fan& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.support_ <=> b.support_; c != 0) return c;
    return a.maximal_ <=> b.maximal_;
}

Fan normal_fan(const Polyhedron& p) {
    if (p.is_empty()) throw PreconditionError("normal_fan: empty polyhedron");
    const std::size_t d = p.ambient_dim();
    std::vector<IntVector> eqs;
    for (const auto& e : p.equations()) eqs.push_back(clear_denominators(e.a));
    std::vector<Cone> cones;
    cones.reserve(p.vertices().size());
    for (const auto& v : p.vertices()) {
        std::vector<IntVector> tight;
        for (const auto& c : p.inequalities()) {
            IntVector a = clear_denominators(c.a);
            if (dot(a, std::span<const Rational>(v)) == c.b) tight.push_back(std::move(a));
        }
        cones.push_back(Cone::from_generators(d, std::move(tight), eqs));
    }
    return Fan(d, std::move(cones), p.recession_cone().dual());
}

Fan common_refinement(const std::vector<Fan>& fans, SupportPolicy policy) {
    if (fans.empty()) throw PreconditionError("common_refinement: no fans given");
    const std::size_t d = fans.front().ambient_dim();
    for (std::size_t i = 1; i < fans.size(); ++i)
        if (fans[i].ambient_dim() != d) throw PreconditionError("common_refinement: ambient dimensions differ");

    Cone support = fans.front().support();
    for (std::size_t i = 1; i < fans.size(); ++i) {
        if (fans[i].support() == fans.front().support()) continue;
        if (policy == SupportPolicy::require_equal)
            throw PreconditionError("common_refinement: fans #0 and #" + std::to_string(i) +
                                    " have different supports");
        support = support.intersect(fans[i].support());
    }

    std::vector<Fan> distinct = fans;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<Cone> current;
    for (const auto& c : distinct.front().maximal_cones()) {
        if (c.dimension() == support.dimension() && support.contains(c)) {
            current.push_back(c);
            continue;
        }
        Cone r = c.intersect(support);
        if (r.dimension() == support.dimension()) current.push_back(std::move(r));
    }
    for (std::size_t i = 1; i < distinct.size(); ++i) {
        std::vector<Cone> next;
        for (const auto& a : current)
            for (const auto& b : distinct[i].maximal_cones()) {
                if (separated(a, b)) continue;
                if (b.contains(a)) {
                    next.push_back(a);
                    continue;
                }
                Cone r = a.intersect(b);
                if (r.dimension() == support.dimension()) next.push_back(std::move(r));
            }
        sort_unique(next);
        current = std::move(next);
    }
    return Fan(d, std::move(current), std::move(support));
}

bool cones_refine(const Fan& fine, const Fan& coarse) {
    if (fine.ambient_dim() != coarse.ambient_dim()) return false;
    for (const auto& s : fine.maximal_cones()) {
        bool inside = std::any_of(coarse.maximal_cones().begin(), coarse.maximal_cones().end(),
                                  [&](const Cone& t) { return t.contains(s); });
        if (!inside) return false;
    }
    return true;
}

bool fan_refines(const Fan& fine, const Fan& coarse) {
    return fine.ambient_dim() == coarse.ambient_dim() && fine.support() == coarse.support() &&
           cones_refine(fine, coarse);
}

std::optional<std::string> validate_fan(const Fan& f) {
    const auto& cones = f.maximal_cones();
    const Cone& support = f.support();
    for (std::size_t i = 0; i < cones.size(); ++i) {
        if (!support.contains(cones[i])) return "maximal cone #" + std::to_string(i) + " leaves the support";
        if (cones[i].dimension() != support.dimension())
            return "maximal cone #" + std::to_string(i) + " is not full-dimensional in the support";
    }
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            if (separated(cones[i], cones[j])) continue;
            if (cones[i].intersect(cones[j]).dimension() == support.dimension())
                return "maximal cones #" + std::to_string(i) + " and #" + std::to_string(j) + " overlap";
        }
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const Cone& c = cones[i];
        for (const auto& facet : c.facets()) {
            std::vector<IntVector> eqs = c.equations();
            eqs.push_back(facet);
            Cone wall = Cone::from_inequalities(f.ambient_dim(), c.facets(), std::move(eqs));
            IntVector p = wall.relative_interior_point();
            if (!support.in_relative_interior(p)) continue;
            std::size_t sharing = 0;
            for (std::size_t j = 0; j < cones.size(); ++j)
                if (j != i && cones[j].contains(wall)) ++sharing;
            if (sharing != 1)
                return "facet " + to_string(facet) + " of maximal cone #" + std::to_string(i) + " is shared by " +
                       std::to_string(sharing) + " other cones";
        }
    }
    return std::nullopt;
}

Polyhedron minkowski_sum_by_fans(const std::vector<Polyhedron>& ps) {
    if (ps.empty()) throw PreconditionError("minkowski_sum: no operands");
    const std::size_t d = ps.front().ambient_dim();
    std::vector<Fan> fans;
    for (const auto& p : ps) {
        if (p.ambient_dim() != d) throw PreconditionError("minkowski_sum: dimension mismatch");
        if (p.is_empty()) throw PreconditionError("minkowski_sum: empty operand");
        fans.push_back(normal_fan(p));
    }
    Fan refined = common_refinement(fans);
    std::vector<RatVector> vertices;
    for (const auto& c : refined.maximal_cones()) {
        IntVector l = c.relative_interior_point();
        RatVector sum(d);
        for (const auto& p : ps) {
            FaceIndices face = p.minimizing_face(l);
            if (face.vertices.size() != 1)
                throw InvariantViolation("interior functional has a non-vertex minimizing face");
            const RatVector& v = p.vertices()[face.vertices.front()];
            for (std::size_t i = 0; i < d; ++i) sum[i] = sum[i] + v[i];
        }
        vertices.push_back(std::move(sum));
    }
    std::vector<IntVector> rays, lin;
    for (const auto& p : ps) {
        rays.insert(rays.end(), p.rays().begin(), p.rays().end());
        lin.insert(lin.end(), p.lineality().begin(), p.lineality().end());
    }
    return Polyhedron::from_generators(d, vertices, rays, lin);
}

}  // namespace torfan
