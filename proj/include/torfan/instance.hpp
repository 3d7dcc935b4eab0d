#pragma once

// The problem datum: a projection pi : Z^n -> Z^r and a pointed affine monoid Omega in Z^n.
// Characters chi live in Z^r; Sigma = pi(Omega).

#include "torfan/cone.hpp"
#include "torfan/lattice_points.hpp"
#include "torfan/polyhedron.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace torfan {

enum class OmegaKind {
    normal,     // Omega = cone(generators) ∩ Z^n
    generated,  // Omega = N-span of the generators
};

struct OmegaSpec {
    OmegaKind kind = OmegaKind::normal;
    std::vector<IntVector> generators;
};

class ToricInstance {
public:
    ToricInstance(IntMatrix pi, OmegaSpec omega, std::string name = {});

    [[nodiscard]] std::size_t n() const noexcept { return pi_.cols(); }
    [[nodiscard]] std::size_t r() const noexcept { return pi_.rows(); }
    [[nodiscard]] const IntMatrix& pi() const noexcept { return pi_; }
    [[nodiscard]] const OmegaSpec& omega() const noexcept { return omega_; }
    [[nodiscard]] const std::string& name() const noexcept { return name_; }

    [[nodiscard]] const Cone& omega_cone() const noexcept { return omega_cone_; }
    /// Images of the Omega generators.
    [[nodiscard]] const std::vector<IntVector>& sigma_gens() const noexcept { return sigma_gens_; }
    [[nodiscard]] const Cone& sigma_cone() const noexcept { return sigma_cone_; }
    /// Basis of the group generated by Omega.
    [[nodiscard]] const std::vector<IntVector>& omega_lattice() const noexcept { return omega_lattice_; }
    /// Basis of the group generated by Sigma, i.e. pi(group of Omega).
    [[nodiscard]] const std::vector<IntVector>& sigma_lattice() const noexcept { return sigma_lattice_; }

    [[nodiscard]] IntVector project(std::span<const Integer> nu) const { return pi_.apply(nu); }

    std::size_t budget = default_lattice_budget;

private:
    IntMatrix pi_;
    OmegaSpec omega_;
    std::string name_;
    Cone omega_cone_;
    std::vector<IntVector> sigma_gens_;
    Cone sigma_cone_;
    std::vector<IntVector> omega_lattice_;
    std::vector<IntVector> sigma_lattice_;
};

/// Parses and validates an instance document; errors are InstanceError with a field path.
ToricInstance load_instance(const nlohmann::json& doc);
ToricInstance load_instance_text(const std::string& text);
ToricInstance load_instance_file(const std::filesystem::path& path);
nlohmann::json instance_to_json(const ToricInstance& inst);

/// {x in cone(Omega) : pi(x) = chi}.
Polyhedron fiber_polyhedron(const ToricInstance& inst, std::span<const Integer> chi);
/// conv(pi^{-1}(chi) ∩ Omega).
Polyhedron integral_fiber_hull(const ToricInstance& inst, std::span<const Integer> chi);
bool omega_contains(const ToricInstance& inst, std::span<const Integer> nu);
/// chi in Sigma, i.e. the integral fiber is nonempty.
bool sigma_contains(const ToricInstance& inst, std::span<const Integer> chi);
/// Fiber over 0 is {0} and cone(Sigma) is pointed.
bool is_positive_grading(const ToricInstance& inst);
/// {lambda : <lambda, nu> >= 0 for all nu in the real fiber over 0}.
Cone support_cone(const ToricInstance& inst);

}  // namespace torfan
