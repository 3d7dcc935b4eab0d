#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "properties.hpp"
#include "support.hpp"

#include "torfan/error.hpp"
#include "torfan/hilbert_fan.hpp"

using namespace torfan;
using namespace torfan::testing;

namespace {

IntMatrix row_matrix(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

OmegaSpec orthant(std::size_t n) {
    OmegaSpec o;
    for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n);
        e[j] = 1;
        o.generators.push_back(e);
    }
    return o;
}

}  // namespace

TEST_CASE("integrality on w112 and m23") {
    ToricInstance w = shipped("w112");
    for (long chi = 0; chi <= 20; ++chi) CHECK(is_integral(w, iv({chi})) == (chi % 2 == 0));
    CHECK(integral_multiplier(w, iv({1})) == Integer(2));
    CHECK(integral_multiplier(w, iv({2})) == Integer(1));
    CHECK_THROWS_AS((void)is_integral(w, iv({-1})), PreconditionError);
    CHECK_THROWS_AS((void)integral_multiplier(w, iv({0})), PreconditionError);

    ToricInstance m = shipped("m23");
    for (long chi = -12; chi <= 12; ++chi) {
        const bool expected = chi >= 0 ? chi % 2 == 0 : (-chi) % 3 == 0;
        CHECK(is_integral(m, iv({chi})) == expected);
    }
    CHECK(integral_multiplier(m, iv({1})) == Integer(2));
    CHECK(integral_multiplier(m, iv({-1})) == Integer(3));
}

TEST_CASE("chamber monoid generators") {
    ToricInstance w = shipped("w112");
    CHECK(chamber_monoid_generators(w, Cone::from_generators(1, {iv({1})})) == std::vector<IntVector>{iv({1})});

    ToricInstance wide(row_matrix({{1, 0, 1}, {0, 1, 2}}), orthant(3));
    ChamberDecomposition dec = git_decomposition(wide);
    REQUIRE(dec.chambers.size() == 2);
    CHECK(dec.chambers[1].cone == Cone::from_generators(2, {iv({1, 0}), iv({1, 2})}));
    CHECK(chamber_monoid_generators(wide, dec.chambers[1].cone) ==
          std::vector<IntVector>{iv({1, 0}), iv({1, 1}), iv({1, 2})});

    ToricInstance gaps(row_matrix({{2, 3}}), orthant(2));
    try {
        (void)chamber_monoid_generators(gaps, Cone::from_generators(1, {iv({1})}));
        FAIL("expected a saturation error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("not saturated") != std::string::npos);
    }
}

TEST_CASE("representatives") {
    ToricInstance w = shipped("w112");
    RepresentativeSet rw = degree_representatives(w, git_decomposition(w));
    REQUIRE(rw.per_chamber.size() == 1);
    CHECK(rw.per_chamber[0].vertex_count == 3);
    CHECK(rw.per_chamber[0].multipliers == std::vector<Integer>{Integer(2)});
    CHECK(rw.per_chamber[0].box_size == Integer(5));
    CHECK(rw.characters == std::vector<IntVector>{iv({1}), iv({2}), iv({3}), iv({4}), iv({5})});

    ToricInstance m = shipped("m23");
    RepresentativeSet rm = degree_representatives(m, git_decomposition(m));
    REQUIRE(rm.per_chamber.size() == 2);
    CHECK(rm.per_chamber[0].multipliers == std::vector<Integer>{Integer(3)});
    CHECK(rm.per_chamber[0].characters == std::vector<IntVector>{iv({-2}), iv({-1})});
    CHECK(rm.per_chamber[1].multipliers == std::vector<Integer>{Integer(2)});
    CHECK(rm.per_chamber[1].characters == std::vector<IntVector>{iv({1})});
    CHECK(rm.characters == std::vector<IntVector>{iv({-2}), iv({-1}), iv({1})});

    ToricInstance id = shipped("idpi");
    HilbertFanData did = compute_hilbert_fan(id);
    CHECK(did.representatives.characters.empty());
    CHECK(did.state_polytope == did.real.polyhedron);
    CHECK(did.fan.size() == 1);
}

TEST_CASE("w112 Hilbert fan") {
    ToricInstance w = shipped("w112");
    HilbertFanData data = compute_hilbert_fan(w);
    CHECK(data.fan.size() == 4);
    CHECK(data.real.fan.size() == 3);
    CHECK(fan_refines(data.fan, data.real.fan));
    CHECK_FALSE(fan_refines(data.real.fan, data.fan));
    CHECK(data.fan.lineality() == std::vector<IntVector>{iv({1, 1, 2})});
    CHECK_FALSE(validate_fan(data.fan));

    std::vector<Polyhedron> parts;
    for (long chi = 1; chi <= 5; ++chi) parts.push_back(integral_fiber_hull(w, iv({chi})));
    parts.push_back(data.real.polyhedron);
    CHECK(minkowski_sum(parts) == data.state_polytope);

    // The four cones in the basis e1 + e2 = (1,0,0), e2 = (0,0,-1), e2 - e1 = (0,1,0) mod (1,1,2).
    const IntVector line = iv({1, 1, 2});
    std::vector<Cone> expected{Cone::from_generators(3, {iv({1, 0, 0}), iv({0, 0, -1})}, {line}),
                               Cone::from_generators(3, {iv({1, 0, 0}), iv({0, 0, 1})}, {line}),
                               Cone::from_generators(3, {iv({0, 1, 0}), iv({0, 0, -1})}, {line}),
                               Cone::from_generators(3, {iv({0, 1, 0}), iv({0, 0, 1})}, {line})};
    CHECK(data.fan == Fan(3, expected, Cone::whole_space(3)));

    Fan family = universal_family_fan(w, data);
    CHECK(family.size() == 4);
    CHECK(family.support() == Cone::from_inequalities(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}));
    CHECK(cones_refine(family, data.fan));
    CHECK_FALSE(validate_fan(family));
}

TEST_CASE("stabilization on w112") {
    ToricInstance w = shipped("w112");
    const Polyhedron p2 = integral_fiber_hull(w, iv({2}));
    for (long chi = 6; chi <= 12; ++chi) {
        CHECK(integral_fiber_hull(w, iv({chi})) == minkowski_sum(integral_fiber_hull(w, iv({chi - 2})), p2));
        CHECK(normal_fan(integral_fiber_hull(w, iv({chi}))) == normal_fan(integral_fiber_hull(w, iv({chi + 2}))));
    }
}

TEST_CASE("finiteness scan: every fiber fan is refined by the Hilbert fan") {
    for (const char* name : {"w112", "m23"}) {
        ToricInstance inst = shipped(name);
        HilbertFanData data = compute_hilbert_fan(inst);
        const Cone support = support_cone(inst);
        for (long chi = -30; chi <= 30; ++chi) {
            if (!sigma_contains(inst, iv({chi}))) continue;
            Fan f = normal_fan(integral_fiber_hull(inst, iv({chi})));
            CHECK(f.support() == support);
            CHECK(fan_refines(data.fan, f));
        }
    }
}

TEST_CASE("m23 Hilbert fan and universal family") {
    ToricInstance m = shipped("m23");
    HilbertFanData data = compute_hilbert_fan(m);
    CHECK(data.fan.size() == 1);
    CHECK(data.fan.maximal_cones()[0] == Cone::from_inequalities(2, {iv({3, 2})}));
    Fan family = universal_family_fan(m, data);
    CHECK(cones_refine(family, data.fan));
    CHECK(family.support() == Cone::from_inequalities(2, {iv({1, 0}), iv({0, 1})}));
    CHECK(family.size() == 1);
}

TEST_CASE("property: Hilbert fans of random instances") {
    std::mt19937 rng(31);
    int computed = 0, unsaturated = 0;
    for (int trial = 0; trial < 25; ++trial) {
        ToricInstance inst = random_orthant_instance(rng);
        inst.budget = 200000;
        HilbertFanData data;
        try {
            data = compute_hilbert_fan(inst);
        } catch (const PreconditionError& e) {
            REQUIRE(std::string(e.what()).find("not saturated") != std::string::npos);
            ++unsaturated;
            continue;
        } catch (const BudgetExceeded&) {
            continue;
        }
        ++computed;
        INFO("pi row 0 = " << to_string(inst.pi().row(0)));
        CHECK(fan_refines(data.fan, data.real.fan));
        CHECK(data.fan.support() == support_cone(inst));
        CHECK_FALSE(validate_fan(data.fan));
        for (const auto& hull : data.hulls) CHECK(fan_refines(data.fan, normal_fan(hull)));
        for (int s = 0; s < 3; ++s) {
            IntVector chi = inst.project(random_vector(rng, inst.n(), 0, 4));
            CHECK(fan_refines(data.fan, normal_fan(integral_fiber_hull(inst, chi))));
        }
    }
    MESSAGE("computed " << computed << ", rejected as unsaturated " << unsaturated);
    CHECK(computed >= 10);
}
