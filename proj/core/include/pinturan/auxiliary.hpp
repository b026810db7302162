#pragma once

#include "pinturan/graph.hpp"
#include "pinturan/pair_id.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pinturan {

// Vertex pairs of [n] are the vertices of the triangle 3-graph H; a K3-free graph on [n]
// is an H-independent pair set. H itself is never built: membership in B1, B2 and B3 is
// decided from the neighbourhoods of the pinned graph P.
//
//   B1: pairs {u,v} with a common P-neighbour (adding them closes a triangle with two P-edges).
//   B2: graph on pairs; {u,v} ~ {u,w} whenever {v,w} is a P-edge.
//   B3: triangles of H among non-P pairs.

/// Pairs with a common P-neighbour, sorted by PairId. Throws NotTriangleFree.
std::vector<PairId> build_b1(const Graph& p);

/// B2-neighbours of e1 = {u,v}: {u,w} for w in N_P(v) - u, then {v,w} for w in N_P(u) - v.
std::vector<PairId> b2_neighbors(const Graph& p, PairId e1);

/// Number of B2 edges over all pairs of [n].
std::uint64_t b2_edge_count(const Graph& p);

/// B2 induced on S' = S - (P u B1).
struct AuxSlice {
    std::size_t n = 0;
    Graph base;
    /// B1 u P, sorted.
    std::vector<PairId> forbidden;
    /// Surviving candidate pairs in PairId order; slice vertex i is s_prime[i].
    std::vector<PairId> s_prime;
    Graph b2;

    double average_degree() const;
};

AuxSlice build_aux_slice(const Graph& p, const Graph& s);
AuxSlice build_aux_slice(const Graph& p, std::span<const PairId> s);

/// Part assignment of the default balanced split: {0, ..., ceil(n/2) - 1} against the rest.
std::vector<bool> identity_split(std::size_t n);
/// Uniformly random balanced split with parts of sizes ceil(n/2), floor(n/2).
template <class Rng>
std::vector<bool> random_split(std::size_t n, Rng& rng);

enum class AdmissibilityFailure { None, NotContained, HitsB1, DependentInB2, DependentInB3 };

std::string_view to_string(AdmissibilityFailure f);

struct AdmissibilityReport {
    bool admissible = false;
    bool triangle_free = false;
    bool contains_base = false;
    /// Conditions on I = G - P.
    bool avoids_b1 = false;
    bool independent_in_b2 = false;
    bool independent_in_b3 = false;
    AdmissibilityFailure first_failure = AdmissibilityFailure::None;
    /// Direct test (K3-free and P subset of G) matches the three-condition decomposition.
    bool decomposition_agrees = false;
};

/// Throws DimensionMismatch, or NotTriangleFree when p has a triangle.
AdmissibilityReport is_admissible(const Graph& p, const Graph& g);

} // namespace pinturan

#include <algorithm>
#include <numeric>

template <class Rng>
std::vector<bool> pinturan::random_split(std::size_t n, Rng& rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
        const auto j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        std::swap(order[i - 1], order[j]);
    }
    std::vector<bool> side(n, false);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) side[order[i]] = true;
    return side;
}
