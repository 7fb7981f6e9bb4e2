#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "bgk/series.hpp"

using bgk::Int;
using bgk::PowerSeries;

static PowerSeries series(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return PowerSeries::from_coefficients(std::move(c));
}

static PowerSeries random_series(std::mt19937_64& rng, int trunc) {
    std::uniform_int_distribution<int> coeff(0, 9);
    std::vector<Int> c;
    for (int d = 0; d <= trunc; ++d)
        c.emplace_back(coeff(rng));
    return PowerSeries::from_coefficients(std::move(c));
}

TEST_CASE("one") {
    CHECK(PowerSeries::one(3) == series({1, 0, 0, 0}));
    CHECK(PowerSeries::one(0) == series({1}));
    CHECK(PowerSeries::one(5).trunc() == 5);
    CHECK_THROWS_AS(PowerSeries::one(-1), std::invalid_argument);
}

TEST_CASE("exterior_factor") {
    CHECK(PowerSeries::exterior_factor(3, 5) == series({1, 0, 0, 1, 0, 0}));
    CHECK(PowerSeries::exterior_factor(9, 5) == series({1, 0, 0, 0, 0, 0}));
    CHECK(PowerSeries::exterior_factor(1, 2) == series({1, 1, 0}));
    CHECK_THROWS_AS(PowerSeries::exterior_factor(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries::exterior_factor(-2, 5), std::invalid_argument);
}

TEST_CASE("geometric_factor") {
    CHECK(PowerSeries::geometric_factor(2, 7) == series({1, 0, 1, 0, 1, 0, 1, 0}));
    CHECK(PowerSeries::geometric_factor(10, 7) == series({1, 0, 0, 0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(PowerSeries::geometric_factor(0, 7), std::invalid_argument);

    // coefficient at n is 1 iff d divides n
    for (int d = 1; d <= 12; ++d) {
        PowerSeries s = PowerSeries::geometric_factor(d, 40);
        for (int n = 0; n <= 40; ++n)
            CHECK(s.coefficient(n) == (n % d == 0 ? 1 : 0));
    }
}

TEST_CASE("coefficient access") {
    PowerSeries s = PowerSeries::geometric_factor(2, 7);
    CHECK(s.coefficient(4) == 1);
    CHECK(PowerSeries::one(7).coefficient(0) == 1);
    CHECK_THROWS_AS(s.coefficient(8), std::invalid_argument);
    CHECK_THROWS_AS(s.coefficient(-1), std::invalid_argument);
}

TEST_CASE("from_coefficients validation") {
    CHECK_THROWS_AS(PowerSeries::from_coefficients({}), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries::from_coefficients({Int(1), Int(-1)}), std::invalid_argument);
}

TEST_CASE("mul basics") {
    CHECK(mul(series({1, 0, 0, 1}), series({1, 0, 0, 1})) == series({1, 0, 0, 2}));
    CHECK(mul(PowerSeries::exterior_factor(3, 8), PowerSeries::geometric_factor(4, 8)) ==
          series({1, 0, 0, 1, 1, 0, 0, 1, 1}));
    CHECK(mul(PowerSeries::geometric_factor(2, 8), PowerSeries::geometric_factor(2, 8))
              .coefficient(8) == 5);

    PowerSeries s = series({3, 1, 4, 1, 5, 9});
    CHECK(mul(PowerSeries::one(5), s) == s);
    CHECK(mul(s, PowerSeries::one(5)) == s);
}

TEST_CASE("mismatched truncation is an error") {
    CHECK_THROWS_AS(mul(PowerSeries::one(3), PowerSeries::one(4)), std::invalid_argument);
    CHECK_THROWS_AS(add(PowerSeries::one(3), PowerSeries::one(4)), std::invalid_argument);
}

TEST_CASE("no parity semantics at series level") {
    // the engine does not impose x^2 = 0; that lives in the algebra layer
    for (int d = 1; d <= 10; ++d) {
        PowerSeries sq = mul(PowerSeries::exterior_factor(d, 21),
                             PowerSeries::exterior_factor(d, 21));
        CHECK(sq.coefficient(2 * d) == 1);
    }
}

TEST_CASE("ring laws on random series") {
    std::mt19937_64 rng(0xBADC0FFEE);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 64;
        PowerSeries a = random_series(rng, n);
        PowerSeries b = random_series(rng, n);
        PowerSeries c = random_series(rng, n);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
        CHECK(mul(a, PowerSeries::one(n)) == a);
    }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
    Int big = 1;
    for (int i = 0; i < 30; ++i)
        big *= 10;
    PowerSeries s = PowerSeries::from_coefficients({big, big});
    PowerSeries sq = mul(s, s);
    CHECK(sq.coefficient(0) == big * big);
    CHECK(sq.coefficient(1) == 2 * big * big);
    CHECK(sq.coefficient(1).str() == "2" + std::string(60, '0'));
}
