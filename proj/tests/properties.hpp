#pragma once

// Randomized property checks shared by the unit tests and the acceptance binary.
// Each returns an empty string on success or a description of the first counterexample.

#include "torfan/cone.hpp"
#include "torfan/degeneration.hpp"
#include "torfan/fan.hpp"
#include "torfan/lattice_points.hpp"
#include "torfan/polyhedron.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace torfan::testing {

inline IntVector random_vector(std::mt19937& rng, std::size_t dim, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntVector v(dim);
    for (auto& x : v) x = d(rng);
    return v;
}

inline std::size_t rank_mod(std::size_t dim, std::vector<IntVector> vs, const std::vector<IntVector>& extra) {
    vs.insert(vs.end(), extra.begin(), extra.end());
    return rank(dim, vs);
}

// Every facet supports the cone and is tight on a set of generators of full facet rank;
// every ray is tight on enough facets. Independent of how the DD produced them.
inline std::string check_cone_consistency(const Cone& c, const std::vector<IntVector>& inputs) {
    const std::size_t d = c.ambient_dim();
    for (const auto& g : inputs)
        if (!c.contains(g)) return "input generator " + to_string(g) + " not contained";
    const std::size_t cdim = c.dimension(), ldim = c.lineality_dim();
    for (const auto& f : c.facets()) {
        std::vector<IntVector> tight;
        for (const auto& r : c.rays()) {
            const int s = dot(f, r).sign();
            if (s < 0) return "facet " + to_string(f) + " violated by ray " + to_string(r);
            if (s == 0) tight.push_back(r);
        }
        if (rank_mod(d, tight, c.lineality()) != cdim - 1) return "facet " + to_string(f) + " is not a facet";
    }
    for (const auto& r : c.rays()) {
        std::vector<IntVector> tight = c.equations();
        for (const auto& f : c.facets())
            if (dot(f, r).is_zero()) tight.push_back(f);
        if (rank(d, tight) != d - ldim - 1) return "ray " + to_string(r) + " is not extreme";
    }
    return {};
}

/// (a) gen -> ineq -> gen returns the identical canonical cone.
inline std::string dd_round_trip(std::size_t trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim_d(1, 4), count_d(0, 7), lin_d(0, 1);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t dim = static_cast<std::size_t>(dim_d(rng));
        std::vector<IntVector> rays, lin;
        const int n = count_d(rng);
        for (int i = 0; i < n; ++i) rays.push_back(random_vector(rng, dim, -4, 4));
        if (dim >= 2 && lin_d(rng) == 1 && t % 3 == 0) lin.push_back(random_vector(rng, dim, -4, 4));
        Cone c = Cone::from_generators(dim, rays, lin);
        Cone back = Cone::from_inequalities(dim, c.facets(), c.equations());
        Cone again = Cone::from_generators(dim, back.rays(), back.lineality());
        std::vector<IntVector> inputs = rays;
        for (const auto& l : lin) {
            inputs.push_back(l);
            IntVector neg = l;
            for (auto& x : neg) x = -x;
            inputs.push_back(neg);
        }
        std::string why = check_cone_consistency(c, inputs);
        if (why.empty() && !(back == c && again == c)) why = "round trip changed the canonical form";
        if (!why.empty()) {
            std::ostringstream os;
            os << "trial " << t << " dim " << dim << " rays {";
            for (const auto& r : rays) os << to_string(r) << " ";
            os << "}: " << why;
            return os.str();
        }
    }
    return {};
}

/// (b) integer_hull agrees with the hull of an exhaustive box enumeration.
inline std::string integer_hull_vs_enumeration(std::size_t trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim_d(1, 3), extra_d(1, 4), den_d(1, 4);
    const int box = 5;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t dim = static_cast<std::size_t>(dim_d(rng));
        std::vector<AffineConstraint> cons;
        // Bounds b in [-box, -box + 2] keep P inside the enumeration box.
        auto bound = [&] {
            const int den = den_d(rng);
            return Rational(Integer(-box * den + std::uniform_int_distribution<int>(0, 2 * den)(rng)), Integer(den));
        };
        for (std::size_t i = 0; i < dim; ++i) {
            RatVector a(dim);
            a[i] = 1;
            cons.push_back({a, bound()});
            a[i] = -1;
            cons.push_back({a, bound()});
        }
        const int extra = extra_d(rng);
        for (int k = 0; k < extra; ++k) {
            IntVector a = random_vector(rng, dim, -3, 3);
            cons.push_back({to_rational(a), Rational(Integer(std::uniform_int_distribution<int>(-9, 3)(rng)),
                                                     Integer(den_d(rng)))});
        }
        std::vector<AffineConstraint> eqs;
        if (dim == 3 && t % 4 == 0) {
            IntVector a = random_vector(rng, dim, -2, 2);
            if (!is_zero(a)) eqs.push_back({to_rational(a), Rational(std::uniform_int_distribution<int>(-2, 2)(rng))});
        }
        Polyhedron p = Polyhedron::from_inequalities(dim, cons, eqs);

        std::vector<RatVector> pts;
        IntVector x(dim, Integer(-box));
        while (true) {
            RatVector xr = to_rational(x);
            if (p.contains(xr)) pts.push_back(xr);
            std::size_t i = 0;
            while (i < dim && x[i] == Integer(box)) x[i++] = -box;
            if (i == dim) break;
            x[i] += Integer(1);
        }
        Polyhedron brute = Polyhedron::from_generators(dim, pts);
        Polyhedron hull = integer_hull(p);
        if (!(brute == hull)) {
            std::ostringstream os;
            os << "trial " << t << " dim " << dim << ": hull has " << hull.vertices().size()
               << " vertices, enumeration hull has " << brute.vertices().size();
            return os.str();
        }
        if (!p.contains(hull)) return "trial " + std::to_string(t) + ": hull not inside P";
    }
    return {};
}

inline Polyhedron random_lattice_polytope(std::mt19937& rng, std::size_t dim) {
    std::uniform_int_distribution<int> n_d(1, 6);
    std::vector<RatVector> pts;
    const int n = n_d(rng);
    for (int i = 0; i < n; ++i) pts.push_back(to_rational(random_vector(rng, dim, -3, 3)));
    return Polyhedron::from_generators(dim, pts);
}

/// (c) normal_fan(P + Q) = common_refinement(normal_fan(P), normal_fan(Q)).
inline std::string normal_fan_of_sum(std::size_t trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim_d(1, 3);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t dim = static_cast<std::size_t>(dim_d(rng));
        Polyhedron p = random_lattice_polytope(rng, dim), q = random_lattice_polytope(rng, dim);
        Polyhedron s = minkowski_sum(p, q);
        Fan lhs = normal_fan(s);
        Fan rhs = common_refinement({normal_fan(p), normal_fan(q)});
        if (!(lhs == rhs)) {
            std::ostringstream os;
            os << "trial " << t << " dim " << dim << ": normal fan of sum has " << lhs.size()
               << " cones, refinement has " << rhs.size();
            return os.str();
        }
        if (auto bad = validate_fan(lhs)) return "trial " + std::to_string(t) + ": " + *bad;
        if (!(minkowski_sum_by_fans({p, q}) == s)) return "trial " + std::to_string(t) + ": fan-side sum differs";
    }
    return {};
}

/// fan_refines is reflexive, antisymmetric and transitive on normal fans of random polytopes.
inline std::string refinement_partial_order(std::size_t trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t dim = 2;
        Polyhedron a = random_lattice_polytope(rng, dim), b = random_lattice_polytope(rng, dim),
                   c = random_lattice_polytope(rng, dim);
        Fan fa = normal_fan(a), fab = normal_fan(minkowski_sum(a, b)), fabc = normal_fan(minkowski_sum({a, b, c}));
        Fan fb = normal_fan(b);
        std::vector<Fan> fans{fa, fb, fab, fabc};
        for (const auto& f : fans)
            if (!fan_refines(f, f)) return "reflexivity fails";
        if (!fan_refines(fab, fa) || !fan_refines(fabc, fab) || !fan_refines(fabc, fa))
            return "sum does not refine summand";
        for (const auto& x : fans)
            for (const auto& y : fans) {
                if (fan_refines(x, y) && fan_refines(y, x) && !(x == y)) return "antisymmetry fails";
                for (const auto& z : fans)
                    if (fan_refines(x, y) && fan_refines(y, z) && !fan_refines(x, z)) return "transitivity fails";
            }
    }
    return {};
}

inline ToricInstance random_orthant_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t n = 3 + coin(rng), r = 1 + coin(rng);
    OmegaSpec omega;
    for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n);
        e[j] = 1;
        omega.generators.push_back(e);
    }
    for (;;) {
        IntMatrix pi(r, n);
        for (std::size_t i = 0; i < r; ++i) {
            IntVector row = random_vector(rng, n, -2, 3);
            for (std::size_t j = 0; j < n; ++j) pi(i, j) = row[j];
        }
        if (rank(pi) == r) return ToricInstance(pi, omega);
    }
}

/// (d) n_lambda(a + b) <= n_lambda(a) + n_lambda(b) for lambda in the support and a, b in Sigma.
/// `triples` receives the number of checked triples.
inline std::string n_lambda_subadditivity(std::size_t trials, unsigned seed, std::size_t& triples) {
    std::mt19937 rng(seed);
    triples = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        ToricInstance inst = random_orthant_instance(rng);
        const Cone support = support_cone(inst);
        for (int s = 0; s < 5; ++s) {
            IntVector lambda = random_vector(rng, inst.n(), -3, 3);
            if (!support.contains(lambda)) continue;
            IntVector a = inst.project(random_vector(rng, inst.n(), 0, 3));
            IntVector b = inst.project(random_vector(rng, inst.n(), 0, 3));
            IntVector sum = a;
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = sum[i] + b[i];
            const Integer na = n_lambda(inst, lambda, a).value, nb = n_lambda(inst, lambda, b).value;
            const Integer ns = n_lambda(inst, lambda, sum).value;
            ++triples;
            if (ns > na + nb) {
                std::ostringstream os;
                os << "trial " << t << ": lambda " << to_string(lambda) << ", n(" << to_string(a) << ") + n("
                   << to_string(b) << ") = " << (na + nb).to_string() << " < n(sum) = " << ns.to_string();
                return os.str();
            }
        }
    }
    return {};
}

}  // namespace torfan::testing
