#pragma once

#include "torfan/cone.hpp"

#include <optional>
#include <vector>

namespace torfan {

/// a.x >= b (inequality) or a.x = b (equation).
struct AffineConstraint {
    RatVector a;
    Rational b;
};

/// Face of a polyhedron given by indices into its vertex and ray lists.
struct FaceIndices {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> rays;
    friend bool operator==(const FaceIndices&, const FaceIndices&) = default;
    friend auto operator<=>(const FaceIndices&, const FaceIndices&) = default;
};

/// Rational polyhedron stored as its homogenization cl cone{(1, x) : x in P} in R^{1+d}.
/// Vertices are rational and sorted, rays primitive and sorted; with a lineality space the
/// "vertices" are the canonical representatives of the minimal faces.
class Polyhedron {
public:
    /// Empty polyhedron in R^0.
    Polyhedron() = default;
    /// {x : a.x >= b for each inequality, a.x = b for each equation}.
    static Polyhedron from_inequalities(std::size_t dim, const std::vector<AffineConstraint>& inequalities,
                                        const std::vector<AffineConstraint>& equations = {});
    /// conv(vertices) + cone(rays) + span(lineality); no vertices gives the empty polyhedron.
    static Polyhedron from_generators(std::size_t dim, const std::vector<RatVector>& vertices,
                                      const std::vector<IntVector>& rays = {},
                                      const std::vector<IntVector>& lineality = {});
    static Polyhedron empty(std::size_t dim);
    static Polyhedron from_homogenization(std::size_t dim, Cone hom);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return dim_; }
    [[nodiscard]] bool is_empty() const noexcept { return empty_; }
    [[nodiscard]] bool is_bounded() const noexcept { return rays_.empty() && lineality_.empty(); }
    [[nodiscard]] std::size_t dimension() const;

    [[nodiscard]] const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] const std::vector<IntVector>& rays() const noexcept { return rays_; }
    [[nodiscard]] const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
    /// Irredundant facet inequalities (integral a, primitive).
    [[nodiscard]] const std::vector<AffineConstraint>& inequalities() const noexcept { return inequalities_; }
    [[nodiscard]] const std::vector<AffineConstraint>& equations() const noexcept { return equations_; }
    [[nodiscard]] const Cone& homogenization() const noexcept { return hom_; }

    [[nodiscard]] Cone recession_cone() const;
    [[nodiscard]] bool contains(std::span<const Rational> x) const;
    [[nodiscard]] bool contains(const Polyhedron& other) const;
    [[nodiscard]] bool is_lattice_polyhedron() const;

    /// Minimum of <l, x> over P, or nullopt when l is unbounded below on P.
    [[nodiscard]] std::optional<Rational> minimum(std::span<const Integer> l) const;
    /// Vertices and rays of the face on which l attains its minimum; requires boundedness.
    [[nodiscard]] FaceIndices minimizing_face(std::span<const Integer> l) const;
    /// A ray or lineality direction along which l decreases, if any.
    [[nodiscard]] std::optional<IntVector> descent_direction(std::span<const Integer> l) const;

    friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
        return a.dim_ == b.dim_ && a.empty_ == b.empty_ && a.hom_ == b.hom_;
    }

private:
    Polyhedron(std::size_t dim, Cone hom);

    std::size_t dim_ = 0;
    bool empty_ = true;
    Cone hom_;
    std::vector<RatVector> vertices_;
    std::vector<IntVector> rays_;
    std::vector<IntVector> lineality_;
    std::vector<AffineConstraint> inequalities_;
    std::vector<AffineConstraint> equations_;
};

inline Polyhedron polyhedron_from_inequalities(std::size_t dim, const std::vector<AffineConstraint>& inequalities,
                                               const std::vector<AffineConstraint>& equations = {}) {
    return Polyhedron::from_inequalities(dim, inequalities, equations);
}

/// Generator-side Minkowski sum; both operands must be nonempty.
Polyhedron minkowski_sum(const Polyhedron& p, const Polyhedron& q);
Polyhedron minkowski_sum(const std::vector<Polyhedron>& ps);

/// c * P for an integer c >= 1.
Polyhedron dilate(const Polyhedron& p, const Integer& c);

}  // namespace torfan
