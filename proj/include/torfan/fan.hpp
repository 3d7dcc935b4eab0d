#pragma once

#include "torfan/cone.hpp"
#include "torfan/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torfan {

/// Polyhedral fan stored by its maximal cones (sorted, canonical) and its support.
/// The lineality is the largest subspace contained in every maximal cone.
class Fan {
public:
    Fan() = default;
    Fan(std::size_t dim, std::vector<Cone> maximal, Cone support);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<Cone>& maximal_cones() const noexcept { return maximal_; }
    [[nodiscard]] std::size_t size() const noexcept { return maximal_.size(); }
    [[nodiscard]] const Cone& support() const noexcept { return support_; }
    [[nodiscard]] const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
    /// Rays of all maximal cones, sorted and deduplicated.
    [[nodiscard]] std::vector<IntVector> rays() const;

    /// Smallest cone of the fan containing v, or nullopt outside the support.
    [[nodiscard]] std::optional<Cone> minimal_cone_containing(std::span<const Integer> v) const;
    /// Indices of the maximal cones containing v.
    [[nodiscard]] std::vector<std::size_t> maximal_cones_containing(std::span<const Integer> v) const;

    friend bool operator==(const Fan&, const Fan&) = default;
    friend std::strong_ordering operator<=>(const Fan& a, const Fan& b);

private:
    std::size_t dim_ = 0;
    std::vector<Cone> maximal_;
    Cone support_;
    std::vector<IntVector> lineality_;
};

/// Normal fan with functionals minimized on faces: the maximal cone at a vertex v is
/// {l : l.(w - v) >= 0 for all w in P}. Support is the dual of the recession cone.
Fan normal_fan(const Polyhedron& p);

/// How common_refinement treats input fans whose supports differ.
enum class SupportPolicy {
    require_equal,  // mismatch is a PreconditionError naming the pair
    intersect,      // refine within the intersection of the supports
};

/// Maximal cones are the intersections of maximal cones, one from each fan, that are
/// full-dimensional in the (common) support.
Fan common_refinement(const std::vector<Fan>& fans, SupportPolicy policy = SupportPolicy::require_equal);

/// Supports equal and every maximal cone of `fine` lies in a maximal cone of `coarse`.
bool fan_refines(const Fan& fine, const Fan& coarse);
/// Every maximal cone of `fine` lies in a maximal cone of `coarse`; supports may differ.
bool cones_refine(const Fan& fine, const Fan& coarse);

/// Structural check: interiors of maximal cones pairwise disjoint, every maximal cone full-dimensional in
/// the support, and every facet of a maximal cone either on the support boundary or shared with exactly
/// one other maximal cone from the opposite side. Returns a diagnostic for the first violation.
std::optional<std::string> validate_fan(const Fan& f);

/// Polyhedron whose normal fan refines both inputs: vertices are sums of the minimizers over the
/// maximal cones of the common refinement. Equal to the generator-side Minkowski sum.
Polyhedron minkowski_sum_by_fans(const std::vector<Polyhedron>& ps);

}  // namespace torfan
