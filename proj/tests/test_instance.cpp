#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "properties.hpp"
#include "support.hpp"

#include "torfan/error.hpp"
#include "torfan/json_io.hpp"

#include <random>

using namespace torfan;
using namespace torfan::testing;

TEST_CASE("shipped instances load") {
    ToricInstance w = shipped("w112");
    CHECK(w.n() == 3);
    CHECK(w.r() == 1);
    CHECK(w.name() == "w112");
    CHECK(w.sigma_cone() == Cone::from_generators(1, {iv({1})}));
    CHECK(w.sigma_lattice() == std::vector<IntVector>{iv({1})});

    ToricInstance m = shipped("m23");
    CHECK(m.sigma_cone() == Cone::whole_space(1));
    CHECK(m.sigma_lattice() == std::vector<IntVector>{iv({1})});

    ToricInstance round = load_instance(instance_to_json(w));
    CHECK(round.pi() == w.pi());
    CHECK(round.omega().generators == w.omega().generators);
}

TEST_CASE("instance validation reports the offending field") {
    auto error_of = [](const std::string& text) -> std::string {
        try {
            (void)load_instance_text(text);
        } catch (const InstanceError& e) {
            return e.what();
        }
        return "";
    };
    const std::string omega = R"("omega": {"kind": "normal", "generators": [[1,0],[0,1]]})";
    CHECK(error_of(R"({"n": 2, "r": 1, "pi": [[1,1],[2,2]], )" + omega + "}").rfind("pi:", 0) == 0);
    CHECK(error_of(R"({"n": 2, "r": 2, "pi": [[1,1],[2,2]], )" + omega + "}").find("rank(pi) = 1 < r = 2") !=
          std::string::npos);
    CHECK(error_of(R"({"n": 2, "r": 1, "pi": [[1,1]]})").rfind("omega:", 0) == 0);
    CHECK(error_of(R"({"n": 2, "r": 1, "pi": [[1,"x"]], )" + omega + "}").rfind("pi[0][1]:", 0) == 0);
    CHECK(error_of(R"({"n": 2, "r": 1, "pi": [[1,1]], "omega": {"kind": "odd", "generators": []}})")
              .rfind("omega.kind:", 0) == 0);
    CHECK(error_of(R"({"n": 2, "r": 1, "pi": [[1,1]], "omega": {"kind": "normal", "generators": [[1,0],[-1,0]]}})")
              .rfind("omega.generators:", 0) == 0);
    CHECK(error_of(R"({"n": 2, "r": 1, "pi": [[1,1]], "omega": {"kind": "normal", "generators": [[1,0,0]]}})")
              .rfind("omega.generators[0]:", 0) == 0);
    CHECK(error_of("{").rfind("$:", 0) == 0);
    CHECK(error_of(R"({"n": 0, "r": 1, "pi": [], )" + omega + "}").rfind("n:", 0) == 0);
}

TEST_CASE("big integers survive the JSON round trip") {
    const std::string text =
        R"({"n": 2, "r": 1, "pi": [["123456789012345678901234567890", 1]],
            "omega": {"kind": "normal", "generators": [[1,0],[0,1]]}})";
    ToricInstance inst = load_instance_text(text);
    CHECK(inst.pi()(0, 0) == Integer::parse("123456789012345678901234567890"));
    CHECK(instance_to_json(inst)["pi"][0][0] == "123456789012345678901234567890");
}

TEST_CASE("fibers of w112") {
    ToricInstance w = shipped("w112");
    Polyhedron p1 = fiber_polyhedron(w, iv({1}));
    CHECK(p1.vertices() ==
          std::vector<RatVector>{{Rational(0), Rational(0), Rational(1, 2)}, rv({0, 1, 0}), rv({1, 0, 0})});
    CHECK(p1.is_bounded());
    CHECK(fiber_polyhedron(w, iv({2})).vertices() ==
          std::vector<RatVector>{rv({0, 0, 1}), rv({0, 2, 0}), rv({2, 0, 0})});

    Polyhedron h1 = integral_fiber_hull(w, iv({1}));
    CHECK(h1.vertices() == std::vector<RatVector>{rv({0, 1, 0}), rv({1, 0, 0})});
    CHECK(h1.dimension() == 1);
    Polyhedron h3 = integral_fiber_hull(w, iv({3}));
    CHECK(h3.vertices() ==
          std::vector<RatVector>{rv({0, 1, 1}), rv({0, 3, 0}), rv({1, 0, 1}), rv({3, 0, 0})});
    CHECK(integral_fiber_hull(w, iv({0})).vertices() == std::vector<RatVector>{rv({0, 0, 0})});
    CHECK(integral_fiber_hull(w, iv({-1})).is_empty());
    CHECK_THROWS_AS((void)fiber_polyhedron(w, iv({1, 2})), PreconditionError);

    CHECK(sigma_contains(w, iv({1})));
    CHECK_FALSE(sigma_contains(w, iv({-1})));
    CHECK(is_positive_grading(w));
    CHECK(support_cone(w) == Cone::whole_space(3));
}

TEST_CASE("fibers of m23 are unbounded") {
    ToricInstance m = shipped("m23");
    Polyhedron p1 = fiber_polyhedron(m, iv({1}));
    CHECK(p1.vertices() == std::vector<RatVector>{{Rational(1, 2), Rational(0)}});
    CHECK(p1.rays() == std::vector<IntVector>{iv({3, 2})});
    Polyhedron h1 = integral_fiber_hull(m, iv({1}));
    CHECK(h1.vertices() == std::vector<RatVector>{rv({2, 1})});
    CHECK(h1.rays() == std::vector<IntVector>{iv({3, 2})});
    CHECK(integral_fiber_hull(m, iv({-2})).vertices() == std::vector<RatVector>{rv({2, 2})});
    CHECK_FALSE(is_positive_grading(m));
    CHECK(support_cone(m) == Cone::from_inequalities(2, {iv({3, 2})}));
    CHECK(sigma_contains(m, iv({-7})));
}

TEST_CASE("generated monoids") {
    OmegaSpec spec{OmegaKind::generated, {iv({2, 0}), iv({0, 3})}};
    ToricInstance g(IntMatrix::identity(2), spec, "g");
    CHECK(omega_contains(g, iv({2, 3})));
    CHECK(omega_contains(g, iv({4, 0})));
    CHECK_FALSE(omega_contains(g, iv({1, 3})));
    CHECK_FALSE(omega_contains(g, iv({-2, 3})));
    CHECK(g.sigma_lattice() == std::vector<IntVector>{iv({2, 0}), iv({0, 3})});
    CHECK_FALSE(sigma_contains(g, iv({1, 0})));

    // Numerical semigroup <2,3> inside N^2 with a projection to Z.
    OmegaSpec twisted{OmegaKind::generated, {iv({1, 1}), iv({1, 2})}};
    IntMatrix pi(1, 2);
    pi(0, 0) = 1;
    pi(0, 1) = 1;
    ToricInstance t(pi, twisted);
    CHECK(integral_fiber_hull(t, iv({2})).vertices() == std::vector<RatVector>{rv({1, 1})});
    CHECK(integral_fiber_hull(t, iv({1})).is_empty());
    CHECK(integral_fiber_hull(t, iv({5})).vertices() == std::vector<RatVector>{rv({2, 3})});
    CHECK(integral_fiber_hull(t, iv({6})).vertices() == std::vector<RatVector>{rv({2, 4}), rv({3, 3})});
}

namespace {

ToricInstance random_instance(std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t n = 3 + coin(rng), r = 1 + coin(rng);
    for (;;) {
        IntMatrix pi(r, n);
        for (std::size_t i = 0; i < r; ++i) {
            IntVector row = random_vector(rng, n, -2, 3);
            for (std::size_t j = 0; j < n; ++j) pi(i, j) = row[j];
        }
        if (rank(pi) < r) continue;
        OmegaSpec omega;
        for (std::size_t j = 0; j < n; ++j) {
            IntVector e(n);
            e[j] = 1;
            omega.generators.push_back(e);
        }
        return ToricInstance(pi, omega);
    }
}

bool contains_polyhedron(const Polyhedron& big, const Polyhedron& small) {
    return small.is_empty() || big.contains(small);
}

}  // namespace

TEST_CASE("property: integral fibers against real fibers") {
    std::mt19937 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        ToricInstance inst = random_instance(rng);
        IntVector a = inst.project(random_vector(rng, inst.n(), 0, 2));
        IntVector b = inst.project(random_vector(rng, inst.n(), 0, 2));
        IntVector sum(inst.r());
        for (std::size_t i = 0; i < inst.r(); ++i) sum[i] = a[i] + b[i];
        Polyhedron ha = integral_fiber_hull(inst, a), hb = integral_fiber_hull(inst, b);
        Polyhedron hs = integral_fiber_hull(inst, sum);
        Polyhedron ra = fiber_polyhedron(inst, a);
        REQUIRE_FALSE(ha.is_empty());
        CHECK(contains_polyhedron(ra, ha));
        CHECK(ha.recession_cone() == ra.recession_cone());
        CHECK(hs.contains(minkowski_sum(ha, hb)));
        ++checked;
    }
    CHECK(checked == 40);
}
