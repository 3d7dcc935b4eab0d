#pragma once

// The state polytope of the toric Hilbert scheme: finitely many degree representatives per
// chamber, their integral fiber hulls, and the normal fan of the sum.

#include "torfan/fiber_fans.hpp"

namespace torfan {

/// Integral fiber equals the real fiber. Requires chi in Sigma.
bool is_integral(const ToricInstance& inst, std::span<const Integer> chi);

/// Least c >= 1 with c*mu integral. Requires mu in Sigma, mu != 0.
Integer integral_multiplier(const ToricInstance& inst, std::span<const Integer> mu);

/// Hilbert basis of chamber ∩ (group of Sigma). Throws PreconditionError if some basis element has
/// an empty fiber, i.e. Sigma is not saturated on the chamber.
std::vector<IntVector> chamber_monoid_generators(const ToricInstance& inst, const Cone& chamber);

struct ChamberRepresentatives {
    std::vector<IntVector> generators;
    std::vector<Integer> multipliers;
    std::size_t vertex_count = 0;
    /// Number of exponent vectors d with 0 < d_i < vertex_count * multipliers[i].
    Integer box_size;
    /// Distinct characters sum d_i generators[i], sorted.
    std::vector<IntVector> characters;
};

struct RepresentativeSet {
    /// Aligned with the chambers of the decomposition.
    std::vector<ChamberRepresentatives> per_chamber;
    /// Union over chambers, sorted.
    std::vector<IntVector> characters;
};

RepresentativeSet degree_representatives(const ToricInstance& inst, const ChamberDecomposition& dec);

/// Everything behind the Hilbert fan, computed once.
struct HilbertFanData {
    ChamberDecomposition decomposition;
    RealFiberFan real;
    RepresentativeSet representatives;
    /// Integral fiber hulls aligned with representatives.characters.
    std::vector<Polyhedron> hulls;
    Polyhedron state_polytope;
    Fan fan;

    /// The hulls followed by the real polyhedron: the Minkowski summands of the state polytope.
    [[nodiscard]] std::vector<Polyhedron> summands() const;
};

/// Also checks the normal fan against the refinement of the summands' fans and its support
/// against support_cone(inst); a mismatch is an InvariantViolation.
HilbertFanData compute_hilbert_fan(const ToricInstance& inst);

Polyhedron state_polytope(const ToricInstance& inst);
Fan hilbert_fan(const ToricInstance& inst);

/// cone(Omega) as a polyhedron with the single vertex 0.
Polyhedron omega_polyhedron(const ToricInstance& inst);

/// Refinement of the Hilbert fan and the normal fan of cone(Omega), on the intersection of supports.
Fan universal_family_fan(const ToricInstance& inst, const HilbertFanData& data);

}  // namespace torfan
