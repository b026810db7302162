#include "doctest.h"
#include "support/oracles.hpp"

#include "pinturan/bounds.hpp"
#include "pinturan/errors.hpp"
#include "pinturan/mis.hpp"

#include <cmath>

using namespace pinturan;

TEST_CASE("exact independence numbers of named graphs") {
    const auto c5 = max_independent_set(cycle_graph(5));
    CHECK(c5.size == 2);
    CHECK(c5.exact);
    CHECK(c5.upper_bound == 2);

    for (std::size_t n : {0U, 1U, 7U, 70U}) {
        const auto r = max_independent_set(Graph(n));
        CHECK(r.size == n);
        CHECK(r.exact);
    }

    const auto pet = oracles::petersen();
    REQUIRE(oracles::brute_alpha(pet) == 4);
    const auto r = max_independent_set(pet);
    CHECK(r.size == 4);
    CHECK(r.exact);
    CHECK(is_independent(pet, r.witness));
    CHECK(r.witness.count() == 4);

    CHECK(max_independent_set(complete_graph(9)).size == 1);
    CHECK(max_independent_set(complete_bipartite(4, 7)).size == 7);
}

TEST_CASE("greedy independent sets") {
    Rng rng(3);
    CHECK(greedy_independent_set(Graph(6), rng).count() == 6);
    const auto k32 = complete_bipartite(3, 2);
    for (int t = 0; t < 20; ++t) {
        const auto s = greedy_independent_set(k32, rng);
        CHECK(s.count() == 3);
        CHECK(is_maximal_independent(k32, s));
    }
    for (int t = 0; t < 20; ++t) CHECK(greedy_independent_set(cycle_graph(5), rng).count() == 2);

    for (int t = 0; t < 200; ++t) {
        const auto g = oracles::random_graph(5 + t % 30, 0.2, rng);
        REQUIRE(is_maximal_independent(g, greedy_independent_set(g, rng)));
    }
}

TEST_CASE("shearer floor") {
    CHECK(shearer_floor(5, 2.0) == doctest::Approx(5 * (2 * std::log(2.0) - 1)));
    CHECK(shearer_floor(5, 2.0) < 2.0);
    CHECK(shearer_floor(11, 0.0) == 11.0);
    CHECK(shearer_floor(12, 1.0) == doctest::Approx(6.0));
    CHECK_THROWS_AS(shearer_floor(3, -0.5), DomainError);
}

TEST_CASE("branch and bound agrees with subset enumeration") {
    Rng rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto n = 1 + static_cast<std::size_t>(t % 16);
        const double p = 0.1 + 0.6 * static_cast<double>(t % 7) / 6.0;
        const auto g = t % 2 == 0 ? oracles::random_graph(n, p, rng) : oracles::random_triangle_free(n, p, rng);
        const auto r = max_independent_set(g);
        REQUIRE(r.exact);
        REQUIRE(r.size == oracles::brute_alpha(g));
        REQUIRE(r.witness.count() == r.size);
        REQUIRE(is_independent(g, r.witness));
        REQUIRE(clique_cover_bound(g) >= r.size);
    }
}

TEST_CASE("shearer's bound holds on triangle-free graphs") {
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto n = 2 + static_cast<std::size_t>(t % 40);
        const auto g = oracles::random_triangle_free(n, 0.05 + 0.9 * (t % 10) / 9.0, rng);
        const auto r = max_independent_set(g);
        REQUIRE(r.exact);
        const double d = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
        REQUIRE(static_cast<double>(r.size) >= std::nextafter(shearer_floor(n, d), 0.0));
    }
}

TEST_CASE("budget-limited search brackets the true value") {
    Rng rng(41);
    std::size_t truncated = 0;
    for (int t = 0; t < 60; ++t) {
        const auto n = 14 + static_cast<std::size_t>(t % 9);
        const auto g = oracles::random_graph(n, 0.25, rng);
        const auto alpha = oracles::brute_alpha(g);
        for (std::uint64_t budget : {1ULL, 3ULL, 10ULL, 40ULL}) {
            const auto r = max_independent_set(g, budget);
            REQUIRE(is_independent(g, r.witness));
            REQUIRE(r.size <= alpha);
            REQUIRE(alpha <= r.upper_bound);
            if (r.exact) REQUIRE(r.size == alpha);
            if (r.budget_exhausted) {
                ++truncated;
                REQUIRE_FALSE(r.exact);
            }
        }
    }
    CHECK(truncated > 0);
}
