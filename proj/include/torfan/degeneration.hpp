#pragma once

// Limits of the distinguished orbit closure under a one-parameter subgroup lambda in Z^n,
// described by the minima n_lambda(chi) of <lambda, .> over the integral fibers.

#include "torfan/hilbert_fan.hpp"

#include <optional>
#include <utility>

namespace torfan {

/// lambda lies in support_cone(inst).
bool limit_exists(const ToricInstance& inst, std::span<const Integer> lambda);

struct FiberMinimum {
    Integer value;
    /// Face of the integral fiber hull where the minimum is attained.
    FaceIndices face;
};

/// Minimum of <lambda, .> over the lattice points of the fiber over chi. Requires chi in Sigma;
/// lambda unbounded below raises PreconditionError naming a descending ray.
FiberMinimum n_lambda(const ToricInstance& inst, std::span<const Integer> lambda, std::span<const Integer> chi);
FiberMinimum minimum_on_hull(const Polyhedron& hull, std::span<const Integer> lambda);

struct LimitData {
    IntVector lambda;
    std::vector<IntVector> degrees;
    std::vector<Integer> values;
    std::vector<FaceIndices> min_faces;
    /// Index pairs i <= j with degrees[i] + degrees[j] also in the set and
    /// values[i] + values[j] > value of the sum.
    std::vector<std::pair<std::size_t, std::size_t>> vanishing_pairs;
};

/// Requires limit_exists. Checks n(0) = 0 and subadditivity on the degree set.
LimitData limit_data(const ToricInstance& inst, std::span<const Integer> lambda, std::vector<IntVector> degrees);

/// Representatives together with their pairwise sums, sorted.
std::vector<IntVector> default_degrees(const RepresentativeSet& reps);

/// Minimizing faces of each polyhedron; all must be bounded below.
std::vector<FaceIndices> min_face_tuple(const std::vector<Polyhedron>& ps, std::span<const Integer> lambda);

/// lambda1 and lambda2 lie in the relative interior of the same cone of the Hilbert fan. Cross-checked
/// against the minimizing faces on the summands of the state polytope.
bool same_limit(const ToricInstance& inst, const HilbertFanData& data, std::span<const Integer> lambda1,
                std::span<const Integer> lambda2);

/// Domains of linearity of chi -> min <lambda, .> over the real fiber, on cone(Sigma).
Fan sigma_subdivision(const ToricInstance& inst, const HilbertFanData& data, std::span<const Integer> lambda);

}  // namespace torfan
