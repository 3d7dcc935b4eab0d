#include "torfan/degeneration.hpp"

#include "torfan/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace torfan {

namespace {

void require_limit(const ToricInstance& inst, std::span<const Integer> lambda) {
    if (lambda.size() != inst.n())
        throw PreconditionError("lambda " + to_string(lambda) + " has length " + std::to_string(lambda.size()) +
                                ", expected n = " + std::to_string(inst.n()));
    if (!limit_exists(inst, lambda))
        throw PreconditionError("lambda " + to_string(lambda) + " is outside the support: no limit exists");
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
    IntVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
    return out;
}

Integer as_integer(const Rational& x) {
    if (x.den() != Integer(1)) throw InvariantViolation("minimum over an integral hull is not an integer");
    return x.num();
}

}  // namespace

bool limit_exists(const ToricInstance& inst, std::span<const Integer> lambda) {
    if (lambda.size() != inst.n()) throw PreconditionError("lambda has length " + std::to_string(lambda.size()));
    return support_cone(inst).contains(lambda);
}

FiberMinimum minimum_on_hull(const Polyhedron& hull, std::span<const Integer> lambda) {
    if (auto ray = hull.descent_direction(lambda))
        throw PreconditionError("lambda " + to_string(lambda) + " is unbounded below along the ray " + to_string(*ray));
    return {as_integer(*hull.minimum(lambda)), hull.minimizing_face(lambda)};
}

FiberMinimum n_lambda(const ToricInstance& inst, std::span<const Integer> lambda, std::span<const Integer> chi) {
    Polyhedron hull = integral_fiber_hull(inst, chi);
    if (hull.is_empty()) throw PreconditionError("character " + to_string(chi) + " is not in Sigma");
    return minimum_on_hull(hull, lambda);
}

LimitData limit_data(const ToricInstance& inst, std::span<const Integer> lambda, std::vector<IntVector> degrees) {
    require_limit(inst, lambda);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    LimitData out;
    out.lambda.assign(lambda.begin(), lambda.end());
    for (const auto& chi : degrees) {
        FiberMinimum m = n_lambda(inst, lambda, chi);
        out.values.push_back(m.value);
        out.min_faces.push_back(std::move(m.face));
        if (is_zero(chi) && !out.values.back().is_zero())
            throw InvariantViolation("n_lambda(0) = " + out.values.back().to_string());
    }
    out.degrees = std::move(degrees);
    const auto& d = out.degrees;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i; j < d.size(); ++j) {
            const IntVector sum = add(d[i], d[j]);
            auto it = std::lower_bound(d.begin(), d.end(), sum);
            if (it == d.end() || *it != sum) continue;
            const Integer& at_sum = out.values[static_cast<std::size_t>(it - d.begin())];
            const Integer parts = out.values[i] + out.values[j];
            if (at_sum > parts)
                throw InvariantViolation("n_lambda is not subadditive at " + to_string(d[i]) + " + " + to_string(d[j]));
            if (parts > at_sum) out.vanishing_pairs.emplace_back(i, j);
        }
    return out;
}

std::vector<IntVector> default_degrees(const RepresentativeSet& reps) {
    const auto& c = reps.characters;
    std::vector<IntVector> out = c;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i; j < c.size(); ++j) out.push_back(add(c[i], c[j]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<FaceIndices> min_face_tuple(const std::vector<Polyhedron>& ps, std::span<const Integer> lambda) {
    std::vector<FaceIndices> out;
    out.reserve(ps.size());
    for (const auto& p : ps) {
        if (auto ray = p.descent_direction(lambda))
            throw PreconditionError("lambda " + to_string(lambda) + " is unbounded below along the ray " +
                                    to_string(*ray));
        out.push_back(p.minimizing_face(lambda));
    }
    return out;
}

bool same_limit(const ToricInstance& inst, const HilbertFanData& data, std::span<const Integer> lambda1,
                std::span<const Integer> lambda2) {
    require_limit(inst, lambda1);
    require_limit(inst, lambda2);
    const bool by_cone = *data.fan.minimal_cone_containing(lambda1) == *data.fan.minimal_cone_containing(lambda2);
    const auto parts = data.summands();
    const bool by_faces = min_face_tuple(parts, lambda1) == min_face_tuple(parts, lambda2);
    if (by_cone != by_faces)
        throw InvariantViolation("cone location and minimizing faces disagree for " + to_string(lambda1) + " and " +
                                 to_string(lambda2));
    return by_cone;
}

Fan sigma_subdivision(const ToricInstance& inst, const HilbertFanData& data, std::span<const Integer> lambda) {
    require_limit(inst, lambda);
    const auto& chambers = data.decomposition.chambers;
    const std::size_t r = inst.r();
    auto real_min = [&](std::span<const Integer> chi) { return *fiber_polyhedron(inst, chi).minimum(lambda); };

    // The minimum is linear on each chamber: fit it through the rays.
    std::vector<std::vector<Rational>> ray_values;
    std::vector<RatVector> slopes;
    for (const auto& ch : chambers) {
        const auto& rays = ch.cone.rays();
        RatMatrix a(rays.size(), r);
        std::vector<Rational> b;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            for (std::size_t c = 0; c < r; ++c) a(k, c) = Rational(rays[k][c]);
            b.push_back(real_min(rays[k]));
        }
        auto g = rays.empty() ? std::optional<RatVector>(RatVector(r)) : solve(a, b);
        if (!g) throw InvariantViolation("fiber minimum is not linear on the chamber with witness " + to_string(ch.witness));
        if (dot(std::span<const Integer>(ch.witness), std::span<const Rational>(*g)) != real_min(ch.witness))
            throw InvariantViolation("fiber minimum is not linear on the chamber with witness " + to_string(ch.witness));
        ray_values.push_back(std::move(b));
        slopes.push_back(std::move(*g));
    }
    auto agrees = [&](std::size_t i, std::size_t j) {
        const auto& rays = chambers[j].cone.rays();
        for (std::size_t k = 0; k < rays.size(); ++k)
            if (dot(std::span<const Integer>(rays[k]), std::span<const Rational>(slopes[i])) != ray_values[j][k])
                return false;
        return true;
    };
    std::vector<std::size_t> group(chambers.size());
    std::iota(group.begin(), group.end(), 0);
    for (std::size_t i = 0; i < chambers.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (group[j] == j && agrees(i, j) && agrees(j, i)) {
                group[i] = j;
                break;
            }
    std::map<std::size_t, std::pair<std::vector<IntVector>, std::vector<IntVector>>> gens;
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        auto& [rays, lin] = gens[group[i]];
        const Cone& c = chambers[i].cone;
        rays.insert(rays.end(), c.rays().begin(), c.rays().end());
        lin.insert(lin.end(), c.lineality().begin(), c.lineality().end());
    }
    std::vector<Cone> pieces;
    for (auto& [_, g] : gens) pieces.push_back(Cone::from_generators(r, g.first, g.second));
    Fan out(r, pieces, inst.sigma_cone());

    // On integral degrees the lattice minimum is additive inside each piece.
    std::vector<std::pair<IntVector, Integer>> integral;
    const auto& chars = data.representatives.characters;
    for (std::size_t i = 0; i < chars.size(); ++i)
        if (data.hulls[i] == fiber_polyhedron(inst, chars[i]))
            integral.emplace_back(chars[i], minimum_on_hull(data.hulls[i], lambda).value);
    for (std::size_t i = 0; i < integral.size(); ++i)
        for (std::size_t j = i; j < integral.size(); ++j) {
            const auto& [a, na] = integral[i];
            const auto& [b, nb] = integral[j];
            bool together = false;
            for (const auto& piece : out.maximal_cones()) together = together || (piece.contains(a) && piece.contains(b));
            if (together && n_lambda(inst, lambda, add(a, b)).value != na + nb)
                throw InvariantViolation("n_lambda is not additive on " + to_string(a) + " + " + to_string(b) +
                                         " inside one domain of linearity");
        }
    return out;
}

}  // namespace torfan
