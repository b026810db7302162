#include "pinturan/random_models.hpp"

#include "pinturan/errors.hpp"

#include <cmath>
#include <string>

namespace pinturan {

TriangleFreeProcess::TriangleFreeProcess(std::size_t n)
    : g_(n), index_(n), slot_(index_.size()) {
    open_.reserve(index_.size());
    for (std::uint32_t id = 0; id < index_.size(); ++id) {
        slot_[id] = static_cast<std::int64_t>(open_.size());
        open_.push_back(PairId{id});
    }
}

void TriangleFreeProcess::close(Vertex a, Vertex b) {
    const auto id = index_.encode(a, b);
    const auto at = slot_[id.value];
    if (at < 0) return;
    const auto last = open_.back();
    open_[static_cast<std::size_t>(at)] = last;
    slot_[last.value] = at;
    open_.pop_back();
    slot_[id.value] = -1;
}

Edge TriangleFreeProcess::step(Rng& rng) {
    if (open_.empty()) throw DomainError("triangle-free process has no open pair left");
    const auto pick = open_[uniform_below(rng, open_.size())];
    const auto [u, v] = index_.decode(pick);
    close(u, v);
    g_.add_edge(u, v);
    g_.for_each_neighbor(u, [&](Vertex w) {
        if (w != v) close(v, w);
    });
    g_.for_each_neighbor(v, [&](Vertex w) {
        if (w != u) close(u, w);
    });
    ++steps_;
    return {u, v};
}

std::vector<PairId> TriangleFreeProcess::recompute_open_pairs(const Graph& g) {
    const PairIndex index(g.order());
    std::vector<PairId> out;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && !bits::intersects(g.row(u), g.row(v))) out.push_back(index.encode(u, v));
    return out;
}

ProcessResult triangle_free_process(std::size_t n, std::optional<std::size_t> steps, Rng& rng,
                                    const std::function<void(const TriangleFreeProcess&)>& on_step) {
    if (steps && *steps > pair_count(n))
        throw DomainError("requested " + std::to_string(*steps) + " steps but only " + std::to_string(pair_count(n)) +
                          " pairs exist");
    TriangleFreeProcess process(n);
    while (!process.finished() && (!steps || process.step_count() < *steps)) {
        process.step(rng);
        if (on_step) on_step(process);
    }
    ProcessResult r;
    r.graph = process.graph();
    r.steps = process.step_count();
    r.terminated = process.finished();
    r.fell_short = steps && r.steps < *steps;
    return r;
}

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

std::size_t edges_for_average_degree(std::size_t n, double d) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw DomainError("average degree must be finite and non-negative");
    return static_cast<std::size_t>(std::llround(static_cast<double>(n) * d / 2.0));
}

std::uint64_t default_burn_in(std::size_t n, std::size_t edges) { return 50ULL * n * edges; }

namespace {

void check_edge_budget(std::size_t n, std::size_t edges) {
    if (edges > mantel_number(n))
        throw DomainError("no triangle-free graph on " + std::to_string(n) + " vertices has " + std::to_string(edges) +
                          " edges (maximum " + std::to_string(mantel_number(n)) + ")");
}

} // namespace

Graph sample_uniform_triangle_free(std::size_t n, std::size_t edges, std::uint64_t chain_steps, Rng& rng) {
    check_edge_budget(n, edges);
    Graph g(n);
    std::vector<Edge> list;
    list.reserve(edges);
    const auto half = static_cast<Vertex>((n + 1) / 2);
    for (Vertex u = 0; u < half && list.size() < edges; ++u)
        for (Vertex v = half; v < n && list.size() < edges; ++v) {
            g.add_edge(u, v);
            list.push_back({u, v});
        }
    if (edges == 0 || edges == pair_count(n)) return g;

    for (std::uint64_t t = 0; t < chain_steps; ++t) {
        const auto slot = uniform_below(rng, list.size());
        const auto out = list[slot];
        g.remove_edge(out.u, out.v);
        Edge in{};
        for (;;) {
            auto a = static_cast<Vertex>(uniform_below(rng, n));
            auto b = static_cast<Vertex>(uniform_below(rng, n - 1));
            if (b >= a) ++b;
            if (a > b) std::swap(a, b);
            if (!g.has_edge(a, b)) {
                in = {a, b};
                break;
            }
        }
        if (in != out && !bits::intersects(g.row(in.u), g.row(in.v))) {
            g.add_edge(in.u, in.v);
            list[slot] = in;
        } else {
            g.add_edge(out.u, out.v);
        }
    }
    return g;
}

Graph sample_uniform_triangle_free_rejection(std::size_t n, std::size_t edges, Rng& rng) {
    if (n > 7) throw DomainError("rejection sampler is limited to n <= 7");
    check_edge_budget(n, edges);
    const PairIndex index(n);
    std::vector<std::uint32_t> pool(index.size());
    for (;;) {
        for (std::uint32_t i = 0; i < pool.size(); ++i) pool[i] = i;
        Graph g(n);
        for (std::size_t i = 0; i < edges; ++i) {
            const auto j = i + uniform_below(rng, pool.size() - i);
            std::swap(pool[i], pool[j]);
            const auto [u, v] = index.decode(PairId{pool[i]});
            g.add_edge(u, v);
        }
        if (is_triangle_free(g)) return g;
    }
}

std::uint64_t count_labeled_triangle_free(std::size_t n, std::size_t edges) {
    if (n > 7) throw DomainError("exhaustive count is limited to n <= 7");
    const PairIndex index(n);
    const auto pairs = index.size();
    if (edges > pairs) return 0;
    std::uint64_t count = 0;
    // walk all edge sets of the given size in lexicographic order of pair ids
    std::vector<std::uint32_t> pick(edges);
    for (std::uint32_t i = 0; i < edges; ++i) pick[i] = i;
    for (;;) {
        Graph g(n);
        for (const auto id : pick) {
            const auto [u, v] = index.decode(PairId{id});
            g.add_edge(u, v);
        }
        if (is_triangle_free(g)) ++count;
        std::size_t i = edges;
        while (i > 0 && pick[i - 1] == pairs - edges + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (auto j = i; j < edges; ++j) pick[j] = pick[j - 1] + 1;
    }
    return count;
}

SampleStats model_stats(const Graph& g, std::uint64_t mis_budget, std::uint64_t seed) {
    SampleStats s;
    const auto summary = degree_summary(g);
    const auto mis = max_independent_set(g, mis_budget);
    s.alpha_lo = mis.size;
    s.alpha_hi = mis.upper_bound;
    s.alpha_exact = mis.exact;
    s.max_degree = summary.max;
    s.avg_degree = summary.average;
    s.edge_count = g.edge_count();
    s.seed = seed;
    return s;
}

} // namespace pinturan
