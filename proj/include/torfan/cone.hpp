#pragma once

#include "torfan/linalg.hpp"

#include <compare>
#include <span>
#include <vector>

namespace torfan {

/// Generator side of a cone: cone(rays) + span(lineality).
struct GeneratorRep {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

/// Inequality side of a cone: {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}.
struct InequalityRep {
    std::vector<IntVector> inequalities;
    std::vector<IntVector> equations;
};

/// Irredundant canonical inequalities of the cone generated by `gens`.
InequalityRep to_inequalities(std::size_t dim, const GeneratorRep& gens);
/// Irredundant canonical generators of the cone cut out by `ineqs`.
GeneratorRep to_generators(std::size_t dim, const InequalityRep& ineqs);

/// Rational polyhedral cone holding both representations in canonical form:
/// lineality and equations are reduced HNF bases, rays are primitive and reduced
/// modulo the lineality, facets primitive and reduced modulo the equations, both sorted.
/// Equal cones compare equal.
class Cone {
public:
    /// The zero cone in R^0.
    Cone() = default;
    static Cone from_generators(std::size_t dim, std::vector<IntVector> rays, std::vector<IntVector> lineality = {});
    static Cone from_inequalities(std::size_t dim, std::vector<IntVector> inequalities,
                                  std::vector<IntVector> equations = {});
    static Cone whole_space(std::size_t dim);
    static Cone origin(std::size_t dim);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return dim_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return dim_ - equations_.size(); }
    [[nodiscard]] std::size_t lineality_dim() const noexcept { return lineality_.size(); }
    [[nodiscard]] bool is_pointed() const noexcept { return lineality_.empty(); }
    [[nodiscard]] bool is_full_dimensional() const noexcept { return equations_.empty(); }
    [[nodiscard]] bool is_linear_space() const noexcept { return rays_.empty(); }

    [[nodiscard]] const std::vector<IntVector>& rays() const noexcept { return rays_; }
    [[nodiscard]] const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
    [[nodiscard]] const std::vector<IntVector>& facets() const noexcept { return facets_; }
    [[nodiscard]] const std::vector<IntVector>& equations() const noexcept { return equations_; }

    [[nodiscard]] bool contains(std::span<const Integer> v) const;
    [[nodiscard]] bool contains(std::span<const Rational> v) const;
    [[nodiscard]] bool contains(const Cone& other) const;
    [[nodiscard]] bool in_relative_interior(std::span<const Integer> v) const;

    [[nodiscard]] Cone intersect(const Cone& other) const;
    /// Sum of the rays: a point of the relative interior.
    [[nodiscard]] IntVector relative_interior_point() const;
    /// Smallest face containing v, which must lie in the cone.
    [[nodiscard]] Cone face_containing(std::span<const Integer> v) const;
    /// {l : l.x >= 0 for all x in the cone}.
    [[nodiscard]] Cone dual() const;

    friend bool operator==(const Cone&, const Cone&) = default;
    friend std::strong_ordering operator<=>(const Cone& a, const Cone& b);

private:
    Cone(std::size_t dim, GeneratorRep gens, InequalityRep ineqs);
    friend Cone dual_description(std::size_t dim, const GeneratorRep& gens);
    friend Cone dual_description(std::size_t dim, const InequalityRep& ineqs);

    std::size_t dim_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> lineality_;
    std::vector<IntVector> facets_;
    std::vector<IntVector> equations_;
};

/// Generator- or inequality-side input completed to a canonical Cone.
Cone dual_description(std::size_t dim, const GeneratorRep& gens);
Cone dual_description(std::size_t dim, const InequalityRep& ineqs);

/// All faces, ordered by dimension then by ray list. Includes the lineality space and c itself.
std::vector<Cone> faces(const Cone& c);

}  // namespace torfan
