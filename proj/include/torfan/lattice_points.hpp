#pragma once

#include "torfan/polyhedron.hpp"

#include <cstddef>
#include <vector>

namespace torfan {

inline constexpr std::size_t default_lattice_budget = 1'000'000;

/// Every lattice point of a bounded polyhedron, in lexicographic order of the
/// internal parametrization. Throws BudgetExceeded past `budget` points.
std::vector<IntVector> lattice_points(const Polyhedron& p, std::size_t budget = default_lattice_budget);

/// conv(P ∩ Z^d). Lattice points are enumerated in (vertex box + recession parallelepiped) ∩ P;
/// only points that can still be hull vertices are kept. Empty when P has no lattice point.
Polyhedron integer_hull(const Polyhedron& p, std::size_t budget = default_lattice_budget);

}  // namespace torfan
