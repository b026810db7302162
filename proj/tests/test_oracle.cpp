#include "doctest.h"
#include "support/oracles.hpp"

#include "pinturan/bounds.hpp"
#include "pinturan/errors.hpp"
#include "pinturan/oracle.hpp"

#include <map>
#include <set>

using namespace pinturan;

namespace {

std::uint64_t oracle(const Graph& p, bool compress = true) {
    const auto r = exact_ex(p, OracleOptions{kDefaultOracleBudget, compress});
    REQUIRE(r.proved);
    REQUIRE(r.witness.edge_count() == r.value);
    REQUIRE(is_triangle_free(r.witness));
    REQUIRE(subgraph_of(p, r.witness));
    return r.value;
}

} // namespace

TEST_CASE("named oracle values") {
    CHECK(oracle(Graph(5)) == 6);
    CHECK(oracle(cycle_graph(5)) == 5);
    CHECK(oracle(star_graph(4, 5)) == 4);
    for (std::size_t n = 2; n <= 10; ++n) {
        CHECK(oracle(Graph(n)) == mantel_number(n));
        CHECK(oracle(Graph(n), false) == mantel_number(n));
    }
    CHECK_THROWS_AS(exact_ex(complete_graph(3)), NotTriangleFree);
}

TEST_CASE("stars match m(n - m) once the star outgrows half the vertices") {
    for (std::size_t n = 3; n <= 10; ++n)
        for (std::size_t m = 1; m < n; ++m) {
            const auto v = oracle(star_graph(m, n));
            // the leaves form one side; the other side holds the centre and the rest
            std::uint64_t expected = 0;
            for (std::size_t a = m; a < n; ++a) expected = std::max<std::uint64_t>(expected, a * (n - a));
            CHECK(v == expected);
        }
}

TEST_CASE("oracle agrees with exhaustive supergraph search") {
    Rng rng(7);
    for (int t = 0; t < 160; ++t) {
        const auto n = 1 + static_cast<std::size_t>(t % 6);
        const auto p = oracles::random_triangle_free(n, 0.1 + 0.15 * (t % 5), rng);
        const auto expected = oracles::brute_ex(p);
        REQUIRE(oracle(p) == expected);
        REQUIRE(oracle(p, false) == expected);
    }
}

TEST_CASE("plain and compressed searches agree at larger n") {
    Rng rng(8);
    for (int t = 0; t < 40; ++t) {
        const auto n = 7 + static_cast<std::size_t>(t % 4);
        const auto p = oracles::random_triangle_free(n, 0.1 + 0.05 * (t % 4), rng);
        REQUIRE(oracle(p) == oracle(p, false));
    }
}

TEST_CASE("oracle properties on a random corpus") {
    Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        const auto n = 3 + static_cast<std::size_t>(t % 8);
        const auto p = oracles::random_triangle_free(n, 0.05 + 0.2 * (t % 5), rng);
        const auto v = oracle(p);

        REQUIRE(v >= p.edge_count());
        REQUIRE((v == p.edge_count()) == is_maximal_triangle_free(p));

        const auto alpha = oracles::brute_alpha(p);
        REQUIRE(2 * v <= n * alpha);
        if (mantel_slack(p) > 0) REQUIRE(static_cast<double>(v) >= lower_bound(p) - 1e-9);

        // adding one more pinned edge never raises the value
        for (const auto& e : p.edges()) {
            auto smaller = p;
            smaller.remove_edge(e.u, e.v);
            REQUIRE(oracle(smaller) >= v);
            break;
        }

        // value depends only on the isomorphism class
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(oracle(relabel(p, perm)) == v);
    }
}

TEST_CASE("canonical codes identify isomorphism classes") {
    Rng rng(14);
    for (int t = 0; t < 300; ++t) {
        const auto n = 1 + static_cast<std::size_t>(t % 8);
        const auto a = oracles::random_triangle_free(n, 0.4, rng);
        const auto b = oracles::random_triangle_free(n, 0.4, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(canonical_code(a) == canonical_code(relabel(a, perm)));
        REQUIRE(canonical_code(canonical_form(a)) == canonical_code(a));
        REQUIRE((canonical_code(a) == canonical_code(b)) ==
                (a.edge_count() == b.edge_count() && oracles::brute_canonical(a) == oracles::brute_canonical(b)));
    }
    // all classes on 6 vertices stay distinct
    std::set<std::string> codes;
    const auto classes = oracles::brute_triangle_free_classes(6);
    for (const auto& g : classes) codes.insert(canonical_code(g));
    CHECK(codes.size() == classes.size());
}

TEST_CASE("pinned graph enumeration") {
    auto exactly = [](std::size_t m) {
        std::size_t c = 0;
        for (const auto& g : enumerate_pinned(m)) c += g.edge_count() == m ? 1 : 0;
        return c;
    };
    for (std::size_t m = 1; m <= 3; ++m) CHECK(exactly(m) == oracles::brute_pinned_count(m));
    CHECK(exactly(1) == 1);
    CHECK(exactly(2) == 2);
    CHECK(exactly(3) == 4);
    // 4K2, P3+2K2, 2P3, P4+K2, K13+K2, P5, fork, K14, C4
    CHECK(exactly(4) == 9);

    for (const auto& g : enumerate_pinned(6)) {
        REQUIRE(is_triangle_free(g));
        REQUIRE(g.order() <= 2 * g.edge_count());
        for (Vertex v = 0; v < g.order(); ++v) REQUIRE(g.degree(v) > 0);
    }
}

TEST_CASE("worst-case values") {
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto one = worst_case_ex(1, n);
        CHECK(one.value == mantel_number(n));
        CHECK(one.minimizer.edge_count() == 1);
    }

    const auto r = worst_case_ex(7, 8);
    CHECK(r.value == 7);
    CHECK(r.minimizer.edge_count() >= 1);
    CHECK(r.minimizer.edge_count() <= 7);
    CHECK(oracle(embed(r.minimizer, 8)) == r.value);
    CHECK(is_triangle_free(r.minimizer));

    for (std::size_t n : {6U, 8U}) {
        std::uint64_t previous = ~std::uint64_t{0};
        for (std::size_t m = 1; m <= 6; ++m) {
            const auto v = worst_case_ex(m, n).value;
            REQUIRE(v <= previous);
            previous = v;
        }
    }

    const auto c5 = oracle(embed(cycle_graph(5), 10));
    const auto k15 = oracle(star_graph(5, 10));
    const auto w = worst_case_ex(5, 10);
    MESSAGE("n=10: C5 -> " << c5 << ", K15 -> " << k15 << ", ex_5 -> " << w.value);
    CHECK(w.value <= std::min(c5, k15));

    CHECK_THROWS_AS(worst_case_ex(9, 10), DomainError);
    CHECK_THROWS_AS(worst_case_ex(0, 10), DomainError);
    CHECK_THROWS_AS(worst_case_ex(3, 10, WorstCaseOptions{1, 1, 8, 10}), BudgetExceeded);
}
