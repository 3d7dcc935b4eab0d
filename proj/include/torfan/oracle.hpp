#pragma once

// Brute-force check of a computed fan: classify every integer lambda in [-B, B]^n by the faces
// it minimizes on a list of polyhedra and compare with the smallest fan cone containing it.

#include "torfan/fan.hpp"

#include <string>
#include <vector>

namespace torfan {

struct OracleReport {
    long bound = 0;
    std::size_t points = 0;
    std::size_t in_support = 0;
    /// Distinct cones of the fan hit by the grid (any dimension).
    std::size_t cones_hit = 0;
    std::size_t face_classes = 0;
    /// First few disagreements, human readable.
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
};

/// The fan passes when the support membership of every grid point matches boundedness on all
/// polyhedra, and lambda -> smallest containing cone and lambda -> minimizing face tuple induce
/// the same partition of the grid.
OracleReport lambda_grid_oracle(const Fan& fan, const std::vector<Polyhedron>& polyhedra, long bound,
                                std::size_t max_failures = 5);

}  // namespace torfan
