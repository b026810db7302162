#pragma once

#include "pinturan/graph.hpp"
#include "pinturan/mis.hpp"
#include "pinturan/pair_id.hpp"
#include "pinturan/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace pinturan {

/// Triangle-free process: start empty, repeatedly add a uniformly random open pair
/// (a non-edge whose addition closes no triangle) until none is left.
class TriangleFreeProcess {
public:
    explicit TriangleFreeProcess(std::size_t n);

    const Graph& graph() const noexcept { return g_; }
    std::size_t step_count() const noexcept { return steps_; }
    bool finished() const noexcept { return open_.empty(); }
    std::span<const PairId> open_pairs() const noexcept { return open_; }

    /// Adds one uniformly chosen open pair. Requires !finished().
    Edge step(Rng& rng);

    /// Open pairs of g computed from scratch, sorted.
    static std::vector<PairId> recompute_open_pairs(const Graph& g);

private:
    void close(Vertex a, Vertex b);

    Graph g_;
    PairIndex index_;
    std::vector<PairId> open_;
    std::vector<std::int64_t> slot_;
    std::size_t steps_ = 0;
};

struct ProcessResult {
    Graph graph;
    std::size_t steps = 0;
    /// No open pair is left; the graph is maximal triangle-free.
    bool terminated = false;
    /// The process ended before the requested number of steps.
    bool fell_short = false;
};

/// Runs `steps` steps, or to completion when steps is empty. `on_step` sees the state after
/// every step. Throws DomainError when steps > C(n,2).
ProcessResult triangle_free_process(std::size_t n, std::optional<std::size_t> steps, Rng& rng,
                                    const std::function<void(const TriangleFreeProcess&)>& on_step = {});

/// G(n, p). Throws DomainError for p outside [0, 1].
Graph erdos_renyi(std::size_t n, double p, Rng& rng);

/// round(n d / 2).
std::size_t edges_for_average_degree(std::size_t n, double d);

/// 50 * n * edges.
std::uint64_t default_burn_in(std::size_t n, std::size_t edges);

/// Metropolis edge-swap chain on triangle-free graphs with a fixed number of edges, started
/// from edges of the balanced complete bipartite graph. A move removes a uniform edge and adds a
/// uniform non-edge of what remains, and is kept iff the result is triangle-free. Proposals are
/// symmetric, so the chain is uniform on the component of its start state.
Graph sample_uniform_triangle_free(std::size_t n, std::size_t edges, std::uint64_t chain_steps, Rng& rng);

/// Exact uniform sampler for n <= 7: uniform edge set of the given size, retried until triangle-free.
Graph sample_uniform_triangle_free_rejection(std::size_t n, std::size_t edges, Rng& rng);

/// Number of labeled triangle-free graphs on [n] with the given edge count, by exhaustive
/// enumeration of edge sets (n <= 7).
std::uint64_t count_labeled_triangle_free(std::size_t n, std::size_t edges);

struct SampleStats {
    std::size_t alpha_lo = 0;
    std::size_t alpha_hi = 0;
    bool alpha_exact = false;
    std::size_t max_degree = 0;
    double avg_degree = 0.0;
    std::size_t edge_count = 0;
    std::uint64_t seed = 0;
};

SampleStats model_stats(const Graph& g, std::uint64_t mis_budget = kDefaultMisBudget, std::uint64_t seed = 0);

} // namespace pinturan
