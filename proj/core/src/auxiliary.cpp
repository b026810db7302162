#include "pinturan/auxiliary.hpp"

#include "pinturan/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace pinturan {

namespace {

void require_triangle_free(const Graph& p) {
    if (const auto t = find_triangle(p)) throw NotTriangleFree(*t);
}

bool has_common_neighbor(const Graph& p, Vertex u, Vertex v) { return bits::intersects(p.row(u), p.row(v)); }

template <class F>
void for_each_b2_neighbor(const Graph& p, Vertex u, Vertex v, F&& f) {
    p.for_each_neighbor(v, [&](Vertex w) {
        if (w != u) f(u, w);
    });
    p.for_each_neighbor(u, [&](Vertex w) {
        if (w != v) f(v, w);
    });
}

} // namespace

std::vector<PairId> build_b1(const Graph& p) {
    require_triangle_free(p);
    const PairIndex index(p.order());
    std::vector<PairId> out;
    const auto n = static_cast<Vertex>(p.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (has_common_neighbor(p, u, v)) out.push_back(index.encode(u, v));
    return out;
}

std::vector<PairId> b2_neighbors(const Graph& p, PairId e1) {
    require_triangle_free(p);
    const PairIndex index(p.order());
    const auto [u, v] = index.decode(e1);
    std::vector<PairId> out;
    for_each_b2_neighbor(p, u, v, [&](Vertex a, Vertex b) { out.push_back(index.encode(a, b)); });
    return out;
}

std::uint64_t b2_edge_count(const Graph& p) {
    require_triangle_free(p);
    std::uint64_t endpoints = 0;
    const auto n = static_cast<Vertex>(p.order());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            endpoints += p.degree(u) - (p.has_edge(u, v) ? 1 : 0);
            endpoints += p.degree(v) - (p.has_edge(u, v) ? 1 : 0);
        }
    return endpoints / 2;
}

double AuxSlice::average_degree() const {
    return b2.order() == 0 ? 0.0 : 2.0 * static_cast<double>(b2.edge_count()) / static_cast<double>(b2.order());
}

AuxSlice build_aux_slice(const Graph& p, std::span<const PairId> s) {
    require_triangle_free(p);
    const auto n = p.order();
    const PairIndex index(n);

    Graph s_graph(n);
    for (const auto id : s) {
        const auto [u, v] = index.decode(id);
        s_graph.add_edge(u, v);
    }
    require_triangle_free(s_graph);

    AuxSlice slice;
    slice.n = n;
    slice.base = p;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const bool blocked = p.has_edge(u, v) || has_common_neighbor(p, u, v);
            if (blocked)
                slice.forbidden.push_back(index.encode(u, v));
            else if (s_graph.has_edge(u, v))
                slice.s_prime.push_back(index.encode(u, v));
        }

    constexpr auto kAbsent = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> slot(index.size(), kAbsent);
    for (std::uint32_t i = 0; i < slice.s_prime.size(); ++i) slot[slice.s_prime[i].value] = i;

    slice.b2 = Graph(slice.s_prime.size());
    for (std::uint32_t i = 0; i < slice.s_prime.size(); ++i) {
        const auto [u, v] = index.decode(slice.s_prime[i]);
        for_each_b2_neighbor(p, u, v, [&](Vertex a, Vertex b) {
            const auto j = slot[index.encode(a, b).value];
            if (j != kAbsent && j > i) slice.b2.add_edge(i, j);
        });
    }
    return slice;
}

AuxSlice build_aux_slice(const Graph& p, const Graph& s) {
    if (p.order() != s.order()) throw DimensionMismatch(p.order(), s.order());
    const PairIndex index(s.order());
    std::vector<PairId> ids;
    for (const auto& e : s.edges()) ids.push_back(index.encode(e.u, e.v));
    return build_aux_slice(p, ids);
}

std::vector<bool> identity_split(std::size_t n) {
    std::vector<bool> side(n, false);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) side[i] = true;
    return side;
}

std::string_view to_string(AdmissibilityFailure f) {
    switch (f) {
    case AdmissibilityFailure::None: return "none";
    case AdmissibilityFailure::NotContained: return "containment";
    case AdmissibilityFailure::HitsB1: return "b1-avoidance";
    case AdmissibilityFailure::DependentInB2: return "b2-independence";
    case AdmissibilityFailure::DependentInB3: return "b3-independence";
    }
    return "unknown";
}

AdmissibilityReport is_admissible(const Graph& p, const Graph& g) {
    if (p.order() != g.order()) throw DimensionMismatch(p.order(), g.order());
    require_triangle_free(p);

    AdmissibilityReport r;
    r.triangle_free = is_triangle_free(g);
    r.contains_base = subgraph_of(p, g);
    r.admissible = r.triangle_free && r.contains_base;

    Graph added(g.order());
    for (const auto& e : g.edges())
        if (!p.has_edge(e.u, e.v)) added.add_edge(e.u, e.v);

    r.avoids_b1 = true;
    r.independent_in_b2 = true;
    for (const auto& e : added.edges()) {
        if (has_common_neighbor(p, e.u, e.v)) r.avoids_b1 = false;
        for_each_b2_neighbor(p, e.u, e.v, [&](Vertex a, Vertex b) {
            if (added.has_edge(a, b)) r.independent_in_b2 = false;
        });
    }
    r.independent_in_b3 = is_triangle_free(added);

    if (!r.contains_base)
        r.first_failure = AdmissibilityFailure::NotContained;
    else if (!r.avoids_b1)
        r.first_failure = AdmissibilityFailure::HitsB1;
    else if (!r.independent_in_b2)
        r.first_failure = AdmissibilityFailure::DependentInB2;
    else if (!r.independent_in_b3)
        r.first_failure = AdmissibilityFailure::DependentInB3;

    const bool decomposed = r.contains_base && r.avoids_b1 && r.independent_in_b2 && r.independent_in_b3;
    r.decomposition_agrees = decomposed == r.admissible;
    return r;
}

} // namespace pinturan
