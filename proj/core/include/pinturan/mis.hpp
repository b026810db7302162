#pragma once

#include "pinturan/bitset.hpp"
#include "pinturan/graph.hpp"
#include "pinturan/rng.hpp"

#include <cstddef>
#include <cstdint>

namespace pinturan {

inline constexpr std::uint64_t kDefaultMisBudget = 10'000'000;

struct MisResult {
    std::size_t size = 0;
    Bitset witness;
    bool exact = false;
    std::uint64_t nodes_explored = 0;
    bool budget_exhausted = false;
    /// Proven upper bound on the independence number; equals `size` when exact.
    std::size_t upper_bound = 0;
};

/// Branch and bound: degree <= 1 reductions, max-degree branching, greedy clique-cover pruning.
/// When the node budget runs out the best set found is returned together with the largest
/// bound among the unexplored subtrees.
MisResult max_independent_set(const Graph& g, std::uint64_t node_budget = kDefaultMisBudget);

/// Maximal independent set by repeated minimum-degree selection, ties broken uniformly at random.
Bitset greedy_independent_set(const Graph& g, Rng& rng);

/// Number of cliques in a greedy partition of the vertices of g; an upper bound on alpha(g).
std::size_t clique_cover_bound(const Graph& g);

/// n * psi(d), Shearer's lower bound on the independence number of a triangle-free graph.
double shearer_floor(std::size_t n_vertices, double avg_degree);

bool is_independent(const Graph& g, const Bitset& set);
bool is_maximal_independent(const Graph& g, const Bitset& set);

} // namespace pinturan
