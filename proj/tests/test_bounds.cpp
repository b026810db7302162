#include "doctest.h"
#include "support/oracles.hpp"

#include "pinturan/bounds.hpp"
#include "pinturan/errors.hpp"
#include "pinturan/random_models.hpp"

#include <cmath>

using namespace pinturan;

namespace {

Graph single_edge(std::size_t n) {
    Graph g(n);
    g.add_edge(0, 1);
    return g;
}

} // namespace

TEST_CASE("psi at the defining points") {
    CHECK(psi(0.0) == 1.0);
    CHECK(psi(1.0) == 0.5);
    CHECK(psi(std::exp(1.0)) == doctest::Approx(1.0 / ((std::exp(1.0) - 1) * (std::exp(1.0) - 1))).epsilon(1e-14));
    CHECK_THROWS_AS(psi(-0.1), DomainError);
    CHECK_THROWS_AS(psi(std::nan("")), DomainError);
    CHECK_THROWS_AS(psi(INFINITY), DomainError);
}

TEST_CASE("psi matches 50-digit reference values") {
    // (d ln d - d + 1)/(d - 1)^2 evaluated with mpmath at 50 significant digits
    const std::vector<std::pair<double, double>> reference = {
        {0.001, 0.99407940946052946134},     {0.01, 0.96311427215602396319},
        {0.5, 0.61370563888010938117},       {0.9, 0.51755359079563288952},
        {0.95, 0.50854813273079729805},      {0.9999999, 0.5000000166666675},
        {1.0000001, 0.49999998333333416667}, {1.001, 0.49983341661669997621},
        {1.05, 0.49186895116144128746},      {1.0999, 0.48413491693587544752},
        {2.0, 0.38629436111989061883},       {4.0, 0.28279749383106249726},
        {10.0, 0.17315865345605502272},      {100.0, 0.036885727843976036813},
    };
    for (const auto& [d, expected] : reference) {
        CAPTURE(d);
        CHECK(std::abs(psi(d) - expected) <= 1e-12 * expected);
    }
}

TEST_CASE("psi is continuous across the series crossover") {
    for (double side : {-1.0, 1.0}) {
        const double inside = 1.0 + side * std::nextafter(kPsiSeriesRadius, 0.0);
        const double outside = 1.0 + side * kPsiSeriesRadius;
        CHECK(std::abs(psi(inside) - psi(outside)) < 1e-13);
    }
    CHECK(std::abs(psi(1.0 + 1e-7) - 0.5) <= 1e-7);
    CHECK(std::abs(psi(1.0 - 1e-7) - 0.5) <= 1e-7);
}

TEST_CASE("psi is strictly decreasing and in (0, 1]") {
    double previous = psi(0.0);
    for (int i = 1; i <= 10000; ++i) {
        const double d = 100.0 * i / 10000.0;
        const double value = psi(d);
        REQUIRE(value < previous);
        REQUIRE(value > 0.0);
        REQUIRE(value <= 1.0);
        previous = value;
    }
}

TEST_CASE("gamma") {
    CHECK(gamma(single_edge(6)) == doctest::Approx(3.0));
    CHECK(gamma(Graph(4)) == doctest::Approx(2.0));
    try {
        gamma(cycle_graph(5));
        FAIL("expected PreconditionViolated");
    } catch (const PreconditionViolated& e) {
        CHECK(e.deficit() == 4);  // 5 + 5 - 6
    }
    CHECK(gamma(Graph(2)) == 0.0);
    CHECK_THROWS_AS(gamma(Graph(1)), DomainError);
}

TEST_CASE("upper bound is n alpha / 2") {
    CHECK(upper_bound(cycle_graph(5), 2) == Rational{5, 1});
    CHECK(upper_bound(Graph(7), 7) == Rational{49, 2});
    CHECK(upper_bound(star_graph(4, 5), 4) == Rational{10, 1});
}

TEST_CASE("lower bound") {
    CHECK(lower_bound(single_edge(6)) == doctest::Approx(4.0));
    CHECK(lower_bound(Graph(6)) == 9.0);
    CHECK_THROWS_AS(lower_bound(cycle_graph(5)), PreconditionViolated);
    for (std::size_t n = 2; n <= 100; ++n) REQUIRE(lower_bound(Graph(n)) == static_cast<double>(mantel_number(n)));
}

TEST_CASE("constrained predicate") {
    const ConstraintParams params{3.0, 0.1};
    const auto two_c5 = disjoint_union(cycle_graph(5), cycle_graph(5));
    CHECK_FALSE(is_constrained(two_c5, params, std::size_t{4}));
    CHECK_FALSE(check_constrained(two_c5, params, kDefaultMisBudget));
    CHECK_THROWS_AS(is_constrained(Graph(5), params, std::size_t{5}), DomainError);
    CHECK_THROWS_AS(is_constrained(two_c5, ConstraintParams{0.0, 0.1}, std::size_t{4}), DomainError);
    CHECK_THROWS_AS(is_constrained(two_c5, ConstraintParams{1.0, 0.25}, std::size_t{4}), DomainError);
    // alpha 4 <= 3 * 10 * ln 2 / 2; the degree side is e * Delta = 20 against (1/4 - b2) * 100
    CHECK(is_constrained(two_c5, ConstraintParams{3.0, 0.01}, std::size_t{4}));
    CHECK_FALSE(is_constrained(two_c5, ConstraintParams{3.0, 0.06}, std::size_t{4}));

    // a 12-cycle with alpha 6 and d = 2: 6 <= b1 * 12 * ln 2 / 2 needs b1 >= 1.443; e*Delta = 24 <= (1/4 - b2) 144
    const auto c12 = cycle_graph(12);
    CHECK(is_constrained(c12, ConstraintParams{1.5, 0.05}, std::size_t{6}));
    CHECK_FALSE(is_constrained(c12, ConstraintParams{1.4, 0.05}, std::size_t{6}));
}

TEST_CASE("constrained frequency on triangle-free process graphs") {
    const ConstraintParams params{8.0, 0.1};
    // n = 128, d = 8: e * Delta >= e * d = 4096 > (1/4 - 0.1) * 128^2, so never constrained.
    // n = 256, d = 4: e * Delta = 512 * Delta stays below 0.15 * 256^2 unless Delta > 19.
    auto frequency = [&](std::size_t n, double d) {
        int hits = 0;
        for (int t = 0; t < 20; ++t) {
            auto rng = make_stream(2024, static_cast<std::uint64_t>(t));
            const auto g = triangle_free_process(n, edges_for_average_degree(n, d), rng).graph;
            const auto mis = max_independent_set(g, 100'000);
            if (is_constrained(g, params, mis.upper_bound)) ++hits;
        }
        return hits / 20.0;
    };
    CHECK(frequency(128, 8.0) == 0.0);
    CHECK(frequency(256, 4.0) >= 0.9);
}

TEST_CASE("bounds report") {
    const auto r = compute_bounds(single_edge(6));
    CHECK(r.e_p == 1);
    CHECK(r.cherries == 0);
    CHECK(r.alpha_exact);
    CHECK(r.alpha_lo == 5);
    CHECK(r.upper_bound == Rational{15, 1});
    REQUIRE(r.lower_bound_defined);
    CHECK(*r.lower_bound == doctest::Approx(4.0));
    CHECK(*r.gamma == doctest::Approx(3.0));
    CHECK(r.d_p == Rational{1, 3});

    const auto c5 = compute_bounds(cycle_graph(5));
    CHECK_FALSE(c5.lower_bound_defined);
    CHECK_FALSE(c5.lower_bound.has_value());
    CHECK(c5.deficit == 4);
    CHECK(c5.upper_bound == Rational{5, 1});

    CHECK_THROWS_AS(compute_bounds(complete_graph(3)), NotTriangleFree);
}

TEST_CASE("upper bound ignores isolated vertices added to P at fixed n") {
    Rng rng(4);
    for (int t = 0; t < 50; ++t) {
        const auto support = oracles::random_triangle_free(6, 0.5, rng);
        const auto a = compute_bounds(embed(support, 9));
        const auto b = compute_bounds(embed(disjoint_union(support, Graph(2)), 9));
        REQUIRE(a.upper_bound == b.upper_bound);
    }
}
