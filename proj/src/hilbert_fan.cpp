#include "torfan/hilbert_fan.hpp"

#include "torfan/error.hpp"

#include <algorithm>
#include <map>

namespace torfan {

namespace {

constexpr long max_multiplier_search = 1000;

IntVector scaled(std::span<const Integer> v, const Integer& k) {
    IntVector out(v.begin(), v.end());
    for (auto& x : out) x = x * k;
    return out;
}

void require_in_sigma(const ToricInstance& inst, std::span<const Integer> chi) {
    if (!sigma_contains(inst, chi))
        throw PreconditionError("character " + to_string(chi) + " is not in Sigma (empty integral fiber)");
}

// Least positive multiple of v lying in the lattice.
IntVector lattice_multiple(std::size_t dim, const std::vector<IntVector>& basis, const IntVector& v) {
    for (long k = 1; k <= max_multiplier_search; ++k) {
        IntVector w = scaled(v, Integer(k));
        if (in_lattice(dim, basis, w)) return w;
    }
    throw InvariantViolation("no lattice multiple of " + to_string(v) + " found");
}

}  // namespace

bool is_integral(const ToricInstance& inst, std::span<const Integer> chi) {
    Polyhedron hull = integral_fiber_hull(inst, chi);
    if (hull.is_empty())
        throw PreconditionError("character " + to_string(chi) + " is not in Sigma (empty integral fiber)");
    Polyhedron real = fiber_polyhedron(inst, chi);
    const bool integral = hull == real;
    if (inst.omega().kind == OmegaKind::normal && integral != real.is_lattice_polyhedron())
        throw InvariantViolation("integrality of the fiber over " + to_string(chi) +
                                 " disagrees with the vertex test");
    return integral;
}

Integer integral_multiplier(const ToricInstance& inst, std::span<const Integer> mu) {
    if (is_zero(mu)) throw PreconditionError("integral_multiplier: character is zero");
    require_in_sigma(inst, mu);
    if (inst.omega().kind == OmegaKind::normal) {
        Integer c(1);
        const Polyhedron real = fiber_polyhedron(inst, mu);
        for (const auto& v : real.vertices())
            for (const auto& x : v) c = lcm(c, x.den());
        if (!is_integral(inst, scaled(mu, c)))
            throw InvariantViolation("fiber over " + to_string(scaled(mu, c)) + " is not integral");
        return c;
    }
    for (long k = 1; k <= max_multiplier_search; ++k) {
        IntVector chi = scaled(mu, Integer(k));
        if (sigma_contains(inst, chi) && is_integral(inst, chi)) return Integer(k);
    }
    throw BudgetExceeded("integral_multiplier: no integral multiple of " + to_string(mu) + " up to " +
                         std::to_string(max_multiplier_search));
}

std::vector<IntVector> chamber_monoid_generators(const ToricInstance& inst, const Cone& chamber) {
    if (!chamber.is_pointed()) throw PreconditionError("chamber is not pointed; its monoid has no Hilbert basis");
    const std::size_t r = inst.r();
    const auto& lattice = inst.sigma_lattice();
    if (chamber.rays().empty()) return {};

    // Every element of the monoid is a lattice point of the zonotope plus a nonnegative integral
    // combination of the ray generators, so the Hilbert basis sits inside the zonotope.
    std::vector<IntVector> gens;
    std::vector<Polyhedron> segments;
    for (const auto& ray : chamber.rays()) {
        gens.push_back(lattice_multiple(r, lattice, ray));
        segments.push_back(Polyhedron::from_generators(r, {RatVector(r), to_rational(gens.back())}));
    }
    std::vector<IntVector> candidates;
    for (auto& p : lattice_points(minkowski_sum(segments), inst.budget))
        if (!is_zero(p) && in_lattice(r, lattice, p)) candidates.push_back(std::move(p));

    std::vector<IntVector> basis;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& y : candidates) {
            if (y == x) continue;
            IntVector rest(r);
            for (std::size_t i = 0; i < r; ++i) rest[i] = x[i] - y[i];
            if (chamber.contains(rest) && !is_zero(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    for (const auto& h : basis)
        if (!sigma_contains(inst, h))
            throw PreconditionError("Sigma is not saturated: " + to_string(h) +
                                    " lies in the chamber and the lattice of Sigma but has an empty fiber");
    return basis;
}

RepresentativeSet degree_representatives(const ToricInstance& inst, const ChamberDecomposition& dec) {
    RepresentativeSet out;
    for (const auto& ch : dec.chambers) {
        ChamberRepresentatives reps;
        reps.generators = chamber_monoid_generators(inst, ch.cone);
        reps.vertex_count = ch.vertex_count;
        reps.box_size = Integer(1);
        std::vector<Integer> bound;
        for (const auto& g : reps.generators) {
            reps.multipliers.push_back(integral_multiplier(inst, g));
            bound.push_back(Integer(static_cast<long>(reps.vertex_count)) * reps.multipliers.back());
            reps.box_size = reps.box_size * (bound.back() - Integer(1));
        }
        if (reps.box_size > Integer(static_cast<long>(inst.budget)))
            throw BudgetExceeded("representative box has " + reps.box_size.to_string() + " points");

        // Odometer over 1 <= d_i < bound_i.
        const std::size_t k = reps.generators.size();
        std::vector<Integer> d(k, Integer(1));
        const bool empty = reps.box_size.sign() == 0 || k == 0;
        while (!empty) {
            IntVector chi(inst.r());
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = 0; c < chi.size(); ++c) chi[c] = chi[c] + d[i] * reps.generators[i][c];
            reps.characters.push_back(std::move(chi));
            std::size_t i = 0;
            while (i < k) {
                d[i] = d[i] + Integer(1);
                if (d[i] < bound[i]) break;
                d[i] = Integer(1);
                ++i;
            }
            if (i == k) break;
        }
        std::sort(reps.characters.begin(), reps.characters.end());
        reps.characters.erase(std::unique(reps.characters.begin(), reps.characters.end()), reps.characters.end());
        out.characters.insert(out.characters.end(), reps.characters.begin(), reps.characters.end());
        out.per_chamber.push_back(std::move(reps));
    }
    std::sort(out.characters.begin(), out.characters.end());
    out.characters.erase(std::unique(out.characters.begin(), out.characters.end()), out.characters.end());
    return out;
}

std::vector<Polyhedron> HilbertFanData::summands() const {
    std::vector<Polyhedron> out = hulls;
    out.push_back(real.polyhedron);
    return out;
}

HilbertFanData compute_hilbert_fan(const ToricInstance& inst) {
    HilbertFanData data;
    data.decomposition = git_decomposition(inst);
    data.real = real_fiber_fan(inst, data.decomposition);
    data.representatives = degree_representatives(inst, data.decomposition);
    for (const auto& chi : data.representatives.characters) data.hulls.push_back(integral_fiber_hull(inst, chi));

    const std::vector<Polyhedron> parts = data.summands();
    data.state_polytope = minkowski_sum_by_fans(parts);
    data.fan = normal_fan(data.state_polytope);

    std::vector<Fan> fans;
    for (const auto& p : parts) fans.push_back(normal_fan(p));
    if (common_refinement(fans) != data.fan)
        throw InvariantViolation("normal fan of the state polytope differs from the refinement of its summands' fans");
    if (data.fan.support() != support_cone(inst))
        throw InvariantViolation("support of the Hilbert fan differs from the dual of the fiber over 0");
    return data;
}

Polyhedron state_polytope(const ToricInstance& inst) { return compute_hilbert_fan(inst).state_polytope; }

Fan hilbert_fan(const ToricInstance& inst) { return compute_hilbert_fan(inst).fan; }

Polyhedron omega_polyhedron(const ToricInstance& inst) {
    return Polyhedron::from_generators(inst.n(), {RatVector(inst.n())}, inst.omega_cone().rays());
}

Fan universal_family_fan(const ToricInstance& inst, const HilbertFanData& data) {
    return common_refinement({data.fan, normal_fan(omega_polyhedron(inst))}, SupportPolicy::intersect);
}

}  // namespace torfan
