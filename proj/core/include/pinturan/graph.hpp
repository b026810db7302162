#pragma once

#include "pinturan/bitset.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pinturan {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// Labeled simple graph on {0, ..., n-1} with one adjacency bit row per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t words_per_row() const noexcept { return stride_; }

    bool has_edge(Vertex u, Vertex v) const { return bits::test(row(u), v); }
    /// Returns false if the edge was already present. Loops and out-of-range vertices throw.
    bool add_edge(Vertex u, Vertex v);
    bool remove_edge(Vertex u, Vertex v);

    std::size_t degree(Vertex v) const { return bits::count(row(v)); }

    std::span<const Word> row(Vertex v) const { return {rows_.data() + v * stride_, stride_}; }

    template <class F>
    void for_each_neighbor(Vertex v, F&& f) const {
        bits::for_each(row(v), [&](std::size_t w) { f(static_cast<Vertex>(w)); });
    }

    std::vector<Vertex> neighbors(Vertex v) const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && rows_ == other.rows_; }

private:
    std::span<Word> mutable_row(Vertex v) { return {rows_.data() + v * stride_, stride_}; }
    void check_pair(Vertex u, Vertex v) const;

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::size_t edges_ = 0;
    std::vector<Word> rows_;
};

struct DegreeSummary {
    std::vector<std::size_t> degrees;
    std::size_t min = 0;
    std::size_t max = 0;
    /// Average degree 2e/n as the exact fraction numerator/denominator (0/1 for n = 0).
    std::uint64_t average_num = 0;
    std::uint64_t average_den = 1;
    double average = 0.0;
};

DegreeSummary degree_summary(const Graph& g);

bool is_triangle_free(const Graph& g);
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

/// Number of 2-edge paths, sum over v of C(deg v, 2).
std::uint64_t count_cherries(const Graph& g);
/// Half the sum of squared degrees; equals e(g) + count_cherries(g).
std::uint64_t half_squared_degree_sum(const Graph& g);

/// Labeled containment: every edge of p is an edge of g. Throws DimensionMismatch.
bool subgraph_of(const Graph& p, const Graph& g);

/// No non-edge can be added without closing a triangle (g must be triangle-free).
bool is_maximal_triangle_free(const Graph& g);

std::uint64_t mantel_number(std::size_t n);

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{1,m} centred at vertex 0 with leaves 1..m, padded with isolated vertices up to n.
Graph star_graph(std::size_t m, std::size_t n);
/// Complete bipartite graph with parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Complete bipartite graph between `side` and its complement on n vertices.
Graph complete_bipartite(std::size_t n, const std::vector<bool>& side);
Graph disjoint_union(const Graph& a, const Graph& b);
/// Copy of g with isolated vertices appended until it has n vertices.
Graph embed(const Graph& g, std::size_t n);
/// Relabel: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);
/// Edge union of two graphs on the same vertex set.
Graph edge_union(const Graph& a, const Graph& b);

} // namespace pinturan
