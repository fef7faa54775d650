#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ranger/rbo.hpp"
#include "support/oracles.hpp"

using namespace ranger;

using ids = std::vector<int>;

TEST_CASE("identical rankings score exactly one", "[rbo]") {
    ids a{1, 2, 3, 4, 5};
    for (double phi : {0.5, 0.8, 0.9, 0.99}) {
        REQUIRE(rbo_ext(a, a, phi, 100) == 1.0);
    }
    // two empty rankings are identical too
    REQUIRE(rbo_ext(ids{}, ids{}, 0.9, 10) == 1.0);
    // equal prefixes with one list truncated extrapolate to full agreement
    REQUIRE(rbo_ext(ids{1, 2}, ids{1, 2, 3}, 0.9, 10) == 1.0);
}

TEST_CASE("disjoint rankings score exactly zero", "[rbo]") {
    REQUIRE(rbo_ext(ids{1, 2, 3}, ids{4, 5, 6}, 0.9, 10) == 0.0);
    REQUIRE(rbo_ext(ids{1}, ids{2, 3, 4, 5}, 0.99, 10) == 0.0);
    REQUIRE(rbo_ext(ids{}, ids{1, 2}, 0.9, 10) == 0.0);
}

TEST_CASE("rbo is symmetric", "[rbo]") {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 200; ++trial) {
        ids a, b;
        int na = 1 + static_cast<int>(rng() % 20);
        int nb = 1 + static_cast<int>(rng() % 20);
        std::vector<int> pool(60);
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        a.assign(pool.begin(), pool.begin() + na);
        std::shuffle(pool.begin(), pool.end(), rng);
        b.assign(pool.begin(), pool.begin() + nb);
        double ab = rbo_ext(a, b, 0.9, 50);
        double ba = rbo_ext(b, a, 0.9, 50);
        REQUIRE(std::abs(ab - ba) < 1e-12);
    }
}

TEST_CASE("swapping adjacent items in both rankings leaves rbo unchanged", "[rbo]") {
    ids a{1, 2, 3, 4, 5, 6};
    ids b{2, 7, 1, 4, 3, 9};
    double before = rbo_ext(a, b, 0.9, 10);
    // the same transposition applied to both lists
    std::swap(a[2], a[3]);
    std::swap(b[2], b[3]);
    REQUIRE(rbo_ext(a, b, 0.9, 10) == Catch::Approx(before).margin(1e-12));
}

TEST_CASE("hand-sized cases match the direct summation oracle", "[rbo]") {
    auto check = [](const ids& a, const ids& b, double phi, size_t depth) {
        double direct = testing::rbo_ext_direct(a, b, phi, depth);
        REQUIRE(rbo_ext(a, b, phi, depth) == Catch::Approx(direct).margin(1e-9));
    };
    check({1, 2, 3}, {2, 1, 3}, 0.9, 3);
    check({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}, 0.8, 5);
    check({1, 2, 3, 4}, {3, 1, 7, 5}, 0.9, 4);
    check({1, 2, 3, 4, 9, 8}, {2, 1, 5}, 0.95, 6);  // uneven lengths
}

TEST_CASE("published reference values are reproduced", "[rbo]") {
    // computed with the metric author's original utility
    REQUIRE(rbo_ext(ids{1, 2}, ids{2, 1}, 0.8, 10) == Catch::Approx(0.8).margin(1e-6));
    REQUIRE(rbo_ext(ids{1, 2}, ids{2, 1}, 0.9, 10) == Catch::Approx(0.9).margin(1e-6));
    REQUIRE(rbo_ext(ids{1, 2, 3}, ids{3, 2, 1}, 0.8, 10) ==
            Catch::Approx(0.72).margin(1e-6));
    REQUIRE(rbo_ext(ids{1, 2, 3}, ids{3, 2, 1}, 0.9, 10) ==
            Catch::Approx(0.855).margin(1e-6));
    REQUIRE(rbo_ext(ids{1, 2, 3, 4}, ids{3, 1, 7, 5}, 0.8, 10) ==
            Catch::Approx(0.421333).margin(1e-4));
    REQUIRE(rbo_ext(ids{1, 2, 3, 4}, ids{3, 1, 7, 5}, 0.9, 10) ==
            Catch::Approx(0.4635).margin(1e-4));
}

TEST_CASE("the evaluation depth truncates both lists", "[rbo]") {
    ids a{1, 2, 3, 4, 5};
    ids b{1, 2, 9, 9, 9};  // would be a duplicate error if not truncated
    b[3] = 8;
    b[4] = 7;
    REQUIRE(rbo_ext(a, b, 0.9, 2) == 1.0);
}

TEST_CASE("duplicates and bad persistence are rejected", "[rbo]") {
    REQUIRE_THROWS_AS(rbo_ext(ids{1, 1, 2}, ids{1, 2, 3}, 0.9, 10),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(rbo_ext(ids{1, 2}, ids{3, 3}, 0.9, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(rbo_ext(ids{1}, ids{1}, 0.0, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(rbo_ext(ids{1}, ids{1}, 1.0, 10), std::invalid_argument);
}
