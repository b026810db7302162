#pragma once

#include "pinturan/auxiliary.hpp"
#include "pinturan/graph.hpp"
#include "pinturan/mis.hpp"
#include "pinturan/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pinturan {

enum class MisMode { Exact, Greedy };

struct ConstructOptions {
    MisMode mode = MisMode::Exact;
    /// Random balanced splits tried in addition to the identity split.
    std::size_t bipartitions = 0;
    std::uint64_t mis_budget = kDefaultMisBudget;
};

struct ConstructionResult {
    Graph g;
    std::size_t i_size = 0;
    std::size_t s_prime_size = 0;
    double slice_avg_degree = 0.0;
    /// (floor(n^2/4) - e(P) - N(S2,P)) * psi(gamma(P) d(P)); empty when gamma is undefined.
    std::optional<double> formula_floor;
    /// |S'| * psi(slice average degree).
    double slice_shearer = 0.0;
    bool mis_exact = false;
    std::size_t bipartition_tried = 0;
    std::vector<bool> split;
};

/// Balanced bipartite S, S' = S - (P u B1), I independent in B2[S'], G = P u I.
/// Throws NotTriangleFree when p has a triangle.
ConstructionResult construct_admissible(const Graph& p, const ConstructOptions& options, Rng& rng);

struct Certificate {
    bool triangle_free = false;
    bool contains_base = false;
    bool avoids_b1 = false;
    bool independent_in_b2 = false;
    bool independent_in_b3 = false;
    bool edge_count_consistent = false;
    /// Checked only for exact runs with a defined floor.
    std::optional<bool> floor_met;
    AdmissibilityFailure first_failure = AdmissibilityFailure::None;
    bool all_pass = false;
};

/// Re-checks a construction from its output graph alone.
Certificate certify(const ConstructionResult& result, const Graph& p);

} // namespace pinturan
