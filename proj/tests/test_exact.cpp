#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torfan/error.hpp"
#include "torfan/exact.hpp"
#include "torfan/linalg.hpp"

#include <random>

using namespace torfan;

namespace {

// Fraction-free Gaussian elimination; independent of the HNF code path.
Integer bareiss_determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k).is_zero()) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    return n == 0 ? Integer(1) : Integer(sign) * m(n - 1, n - 1);
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> rs;
    for (auto r : rows) {
        IntVector v;
        for (long x : r) v.emplace_back(x);
        rs.push_back(v);
    }
    return rows_to_matrix(rs.front().size(), rs);
}

IntVector vec(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("integer arithmetic promotes past int64") {
    Integer big = Integer(INT64_MAX) + Integer(1);
    CHECK_FALSE(big.is_small());
    CHECK(big.to_string() == "9223372036854775808");
    CHECK(big - Integer(1) == Integer(INT64_MAX));
    CHECK((big - Integer(1)).is_small());
    Integer sq = big * big;
    CHECK(sq.to_string() == "85070591730234615865843651857942052864");
    CHECK(exact_div(sq, big) == big);
    CHECK(Integer::parse("-123456789012345678901234567890").to_string() == "-123456789012345678901234567890");
    CHECK(-Integer(INT64_MIN) == big);
    CHECK(floor_div(Integer(-7), Integer(2)) == Integer(-4));
    CHECK(ceil_div(Integer(-7), Integer(2)) == Integer(-3));
    CHECK(floor_div(Integer(INT64_MIN), Integer(-1)) == big);
    CHECK(gcd(Integer(-12), Integer(18)) == Integer(6));
    CHECK(lcm(Integer(4), Integer(6)) == Integer(12));
}

TEST_CASE("rationals normalize") {
    Rational a(Integer(6), Integer(-4));
    CHECK(a.num() == Integer(-3));
    CHECK(a.den() == Integer(2));
    CHECK(a + Rational(3, 2) == Rational(0));
    CHECK(a * Rational(2, 3) == Rational(-1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(a.floor() == Integer(-2));
    CHECK(a.ceil() == Integer(-1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("hermite normal form of the worked projections") {
    auto h = hermite_normal_form(mat({{1, 1, 2}}));
    CHECK(h.h == mat({{1, 0, 0}}));
    CHECK(mat({{1, 1, 2}}) * h.u == h.h);
    CHECK(abs(bareiss_determinant(h.u)) == Integer(1));
    auto ker = kernel_basis(mat({{1, 1, 2}}));
    REQUIRE(ker.size() == 2);
    for (const auto& k : ker) CHECK(dot(vec({1, 1, 2}), k) == Integer(0));

    auto id = hermite_normal_form(IntMatrix::identity(3));
    CHECK(id.h == IntMatrix::identity(3));
    CHECK(id.u == IntMatrix::identity(3));

    auto m23 = hermite_normal_form(mat({{2, -3}}));
    CHECK(m23.h == mat({{1, 0}}));
    auto k23 = kernel_basis(mat({{2, -3}}));
    REQUIRE(k23.size() == 1);
    CHECK(primitive(k23[0]) == (k23[0][0].sign() > 0 ? vec({3, 2}) : vec({-3, -2})));

    auto zero = hermite_normal_form(IntMatrix(2, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.u == IntMatrix::identity(3));
}

TEST_CASE("hermite normal form on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5), size(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
        auto h = hermite_normal_form(m);
        REQUIRE(m * h.u == h.h);
        REQUIRE(h.u * h.u_inv == IntMatrix::identity(c));
        REQUIRE(abs(bareiss_determinant(h.u)) == Integer(1));
        for (const auto& k : kernel_basis(m)) REQUIRE(is_zero(m.apply(k)));
        CHECK(kernel_basis(m).size() == c - h.rank);
    }
}

TEST_CASE("integral preimages") {
    auto nu = integral_preimage(mat({{1, 1, 2}}), vec({3}));
    REQUIRE(nu);
    CHECK(dot(vec({1, 1, 2}), *nu) == Integer(3));
    auto z = integral_preimage(mat({{1, 1, 2}}), vec({0}));
    REQUIRE(z);
    CHECK(is_zero(*z));
    CHECK_FALSE(integral_preimage(mat({{2, 0}}), vec({1})));

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = entry(rng);
        IntVector rhs = vec({entry(rng), entry(rng)});
        auto sol = integral_preimage(m, rhs);
        if (sol) {
            CHECK(m.apply(*sol) == rhs);
        } else {
            // No solution: brute force over a box must also fail.
            bool found = false;
            for (int a = -12; a <= 12 && !found; ++a)
                for (int b = -12; b <= 12 && !found; ++b)
                    for (int c = -12; c <= 12 && !found; ++c)
                        found = m.apply(vec({a, b, c})) == rhs;
            CHECK_FALSE(found);
        }
    }
}

TEST_CASE("primitive vectors") {
    CHECK(primitive(vec({2, 4, 6})) == vec({1, 2, 3}));
    CHECK(primitive(RatVector{Rational(1, 2), Rational(3, 2)}) == vec({1, 3}));
    CHECK(primitive(vec({-3, 0})) == vec({-1, 0}));
    CHECK_THROWS_AS(primitive(vec({0, 0})), PreconditionError);
    CHECK(primitive(RatVector{Rational(5, 7), Rational(-10, 3)}) ==
          primitive(RatVector{Rational(15, 7), Rational(-10, 1)}));
}

TEST_CASE("saturated bases and reduction") {
    auto b = saturated_basis(3, std::vector<IntVector>{vec({2, 2, 4})});
    REQUIRE(b.size() == 1);
    CHECK(b[0] == vec({1, 1, 2}));
    auto ann = annihilator(3, b);
    CHECK(ann.size() == 2);
    for (const auto& a : ann) CHECK(dot(a, b[0]) == Integer(0));
    CHECK(is_zero(reduce_modulo(vec({3, 3, 6}), b)));
    CHECK(reduce_modulo(vec({1, 0, 0}), b) == reduce_modulo(vec({2, 1, 2}), b));
    CHECK(in_span(3, b, vec({-1, -1, -2})));
    CHECK_FALSE(in_span(3, b, vec({1, 0, 0})));
    auto inter = subspace_intersection(3, std::vector<IntVector>{vec({1, 0, 0}), vec({0, 1, 0})},
                                       std::vector<IntVector>{vec({1, 1, 0}), vec({0, 0, 1})});
    REQUIRE(inter.size() == 1);
    CHECK(primitive(inter[0]) == vec({1, 1, 0}));
}
