#pragma once

// Variation of the real fibers P(chi) as chi moves through cone(Sigma): the chamber (GIT) fan,
// the normal fans of single fibers and their common refinement.

#include "torfan/fan.hpp"
#include "torfan/instance.hpp"

#include <optional>

namespace torfan {

struct Chamber {
    Cone cone;
    /// Indices into ChamberDecomposition::omega_faces of the faces whose image contains the chamber.
    std::vector<std::size_t> signature;
    /// Integral point of Sigma in the relative interior.
    IntVector witness;
    /// Number of vertices of the real fiber over any interior point.
    std::size_t vertex_count = 0;
};

struct ChamberDecomposition {
    std::vector<Cone> omega_faces;
    /// Maximal chambers in the order of fan.maximal_cones().
    std::vector<Chamber> chambers;
    Fan fan;
};

ChamberDecomposition git_decomposition(const ToricInstance& inst);

struct ChamberLocation {
    /// Index of the maximal chamber whose relative interior contains chi, if any.
    std::optional<std::size_t> maximal;
    /// Smallest cell of the decomposition containing chi.
    Cone cell;
};

/// Throws PreconditionError when chi is outside cone(Sigma).
ChamberLocation chamber_of(const ChamberDecomposition& dec, std::span<const Integer> chi);

/// Normal fan of the real fiber over chi; chi must lie in the relative interior of cone(Sigma).
Fan git_quotient_fan(const ToricInstance& inst, std::span<const Integer> chi);

struct RealFiberFan {
    /// Sum of the real fibers over the chamber witnesses.
    Polyhedron polyhedron;
    Fan fan;
};

/// Normal fan of the sum of one real fiber per chamber, checked against the common refinement
/// of the per-chamber quotient fans.
RealFiberFan real_fiber_fan(const ToricInstance& inst, const ChamberDecomposition& dec);

/// Vertex count of the real fiber over chi.
std::size_t fiber_vertex_count(const ToricInstance& inst, std::span<const Integer> chi);

}  // namespace torfan
