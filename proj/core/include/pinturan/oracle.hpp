#pragma once

#include "pinturan/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pinturan {

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

struct OracleOptions {
    std::uint64_t node_budget = kDefaultOracleBudget;
    /// Collapse classes of vertices with equal P-neighbourhoods before searching.
    /// Off: plain labeled search over all pairs of [n] (n <= 64).
    bool compress_twins = true;
};

struct OracleResult {
    std::uint64_t value = 0;
    Graph witness;
    std::uint64_t nodes = 0;
    bool proved = false;
};

/// Maximum number of edges of a triangle-free graph on [n] containing p.
///
/// Include/exclude branch and bound over candidate pairs (non-edges that close no triangle),
/// most-constraining pair first. A branch is pruned by the least of
///   - current weight plus all candidates,
///   - half the sum over vertices of the largest independent set of the current graph inside
///     the vertex's possible final neighbourhood (a per-vertex form of n * alpha / 2),
///   - floor(n^2/4).
///
/// With compress_twins, each class of vertices with identical P-neighbourhood is merged into
/// a weighted vertex; the class of P-isolated vertices is merged into two weighted vertices and
/// every split of its size is tried. Some optimum always has this shape: two non-adjacent
/// vertices with the same P-neighbourhood can copy the neighbourhood of the one of larger
/// degree without losing edges, triangle-freeness or P.
///
/// Throws NotTriangleFree. Budget exhaustion returns the best witness with proved = false.
OracleResult exact_ex(const Graph& p, const OracleOptions& options = {});

/// Canonical string of g up to isomorphism (g must have no isolated vertices for
/// representatives from enumerate_pinned to round-trip; isolated vertices are kept as K1 parts).
std::string canonical_code(const Graph& g);
/// Isomorphic copy of g relabeled into canonical order.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class of triangle-free graphs with 1..m edges and no
/// isolated vertices, ordered by (edge count, canonical code).
std::vector<Graph> enumerate_pinned(std::size_t m);

struct WorstCaseOptions {
    /// Node budget for each oracle call.
    std::uint64_t budget = kDefaultOracleBudget;
    std::size_t jobs = 1;
    std::size_t max_m = 8;
    std::size_t max_n = 10;
};

struct WorstCaseRow {
    Graph support;
    std::uint64_t value = 0;
    bool proved = false;
    std::uint64_t nodes = 0;
};

struct WorstCaseResult {
    std::size_t m = 0;
    std::size_t n = 0;
    std::uint64_t value = 0;
    /// Support graph of a minimiser; embed into [n] with embed().
    Graph minimizer;
    std::vector<WorstCaseRow> table;
};

/// min over triangle-free P with at most m edges of ex_P(n, K3). Supports larger than n are
/// skipped. Throws DomainError past the configured ceiling, BudgetExceeded when some oracle
/// call stays unproved (remaining() = number of unproved candidates).
WorstCaseResult worst_case_ex(std::size_t m, std::size_t n, const WorstCaseOptions& options = {});

} // namespace pinturan
