#include "pinturan/graph.hpp"

#include "pinturan/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pinturan {

Graph::Graph(std::size_t n) : n_(n), stride_(words_for(n)), rows_(n * words_for(n), 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_)
        throw DomainError("vertex out of range: {" + std::to_string(u) + "," + std::to_string(v) + "} with n = " +
                          std::to_string(n_));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (has_edge(u, v)) return false;
    bits::set(mutable_row(u), v);
    bits::set(mutable_row(v), u);
    ++edges_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!has_edge(u, v)) return false;
    bits::reset(mutable_row(u), v);
    bits::reset(mutable_row(v), u);
    --edges_;
    return true;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](Vertex v) {
            if (u < v) out.push_back({u, v});
        });
    return out;
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    const auto n = g.order();
    s.degrees.resize(n);
    for (Vertex v = 0; v < n; ++v) s.degrees[v] = g.degree(v);
    if (n == 0) return s;
    s.min = *std::min_element(s.degrees.begin(), s.degrees.end());
    s.max = *std::max_element(s.degrees.begin(), s.degrees.end());
    std::uint64_t num = 2 * g.edge_count();
    std::uint64_t den = n;
    const auto d = std::gcd(num, den);
    s.average_num = num / d;
    s.average_den = den / d;
    s.average = static_cast<double>(2 * g.edge_count()) / static_cast<double>(n);
    return s;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
        std::optional<std::array<Vertex, 3>> found;
        g.for_each_neighbor(u, [&](Vertex v) {
            if (found || v <= u) return;
            const auto a = g.row(u);
            const auto b = g.row(v);
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (const Word common = a[i] & b[i]) {
                    const auto w = static_cast<Vertex>(i * kWordBits + std::countr_zero(common));
                    found = std::array<Vertex, 3>{u, v, w};
                    return;
                }
            }
        });
        if (found) {
            auto t = *found;
            std::sort(t.begin(), t.end());
            return t;
        }
    }
    return std::nullopt;
}

bool is_triangle_free(const Graph& g) {
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
        bool hit = false;
        g.for_each_neighbor(u, [&](Vertex v) {
            if (!hit && v > u && bits::intersects(g.row(u), g.row(v))) hit = true;
        });
        if (hit) return false;
    }
    return true;
}

std::uint64_t count_cherries(const Graph& g) {
    std::uint64_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::uint64_t d = g.degree(v);
        total += d * (d - (d > 0 ? 1 : 0)) / 2;
    }
    return total;
}

std::uint64_t half_squared_degree_sum(const Graph& g) {
    std::uint64_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::uint64_t d = g.degree(v);
        total += d * d;
    }
    return total / 2;
}

bool subgraph_of(const Graph& p, const Graph& g) {
    if (p.order() != g.order()) throw DimensionMismatch(p.order(), g.order());
    for (Vertex v = 0; v < p.order(); ++v) {
        const auto a = p.row(v);
        const auto b = g.row(v);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] & ~b[i]) return false;
    }
    return true;
}

bool is_maximal_triangle_free(const Graph& g) {
    if (!is_triangle_free(g)) return false;
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && !bits::intersects(g.row(u), g.row(v))) return false;
    return true;
}

std::uint64_t mantel_number(std::size_t n) { return std::uint64_t{n} * n / 4; }

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph star_graph(std::size_t m, std::size_t n) {
    if (n < m + 1) throw DomainError("star K_{1," + std::to_string(m) + "} needs " + std::to_string(m + 1) + " vertices");
    Graph g(n);
    for (Vertex v = 1; v <= m; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = static_cast<Vertex>(a); v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(std::size_t n, const std::vector<bool>& side) {
    if (side.size() != n) throw DimensionMismatch(side.size(), n);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (side[u] != side[v]) g.add_edge(u, v);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v);
    const auto shift = static_cast<Vertex>(a.order());
    for (const auto& e : b.edges()) g.add_edge(e.u + shift, e.v + shift);
    return g;
}

Graph embed(const Graph& g, std::size_t n) {
    if (n < g.order()) throw DomainError("cannot embed a graph on " + std::to_string(g.order()) + " vertices into " +
                                         std::to_string(n));
    Graph out(n);
    for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
    return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (perm.size() != g.order()) throw DimensionMismatch(perm.size(), g.order());
    Graph out(g.order());
    for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

Graph edge_union(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) throw DimensionMismatch(a.order(), b.order());
    Graph out = a;
    for (const auto& e : b.edges()) out.add_edge(e.u, e.v);
    return out;
}

} // namespace pinturan
