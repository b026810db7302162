#include "pinturan/errors.hpp"
#include "pinturan/oracle.hpp"
#include "pinturan/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace pinturan {

namespace {

struct Component {
    std::string code;
    std::vector<Vertex> order;
};

// Lex-max column code over vertex orders that list degrees in non-increasing order.
// Swapping two non-adjacent vertices with the same neighbourhood is an automorphism, so
// only one of them is tried at each position.
class ComponentCanon {
public:
    ComponentCanon(const Graph& g, std::vector<Vertex> vertices) : g_(g), vertices_(std::move(vertices)) {
        std::stable_sort(vertices_.begin(), vertices_.end(),
                         [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
        for (const auto v : vertices_) cell_degree_.push_back(g_.degree(v));
        used_.assign(g_.order(), false);
    }

    Component run() {
        std::vector<Vertex> order;
        std::string bits;
        descend(order, bits);
        std::string header;
        header.push_back(static_cast<char>(vertices_.size()));
        for (const auto d : cell_degree_) header.push_back(static_cast<char>(d));
        return {header + best_bits_, best_order_};
    }

private:
    void descend(std::vector<Vertex>& order, std::string& bits) {
        const auto pos = order.size();
        if (pos == vertices_.size()) {
            if (best_order_.empty() || bits > best_bits_) {
                best_bits_ = bits;
                best_order_ = order;
            }
            return;
        }
        std::vector<Vertex> tried;
        for (const auto v : vertices_) {
            if (used_[v] || g_.degree(v) != cell_degree_[pos]) continue;
            const bool twin = std::any_of(tried.begin(), tried.end(), [&](Vertex u) {
                return !g_.has_edge(u, v) && std::equal(g_.row(u).begin(), g_.row(u).end(), g_.row(v).begin());
            });
            if (twin) continue;
            tried.push_back(v);

            const auto mark = bits.size();
            for (std::size_t i = 0; i < pos; ++i) bits.push_back(g_.has_edge(order[i], v) ? '1' : '0');
            const bool behind = !best_order_.empty() && bits.compare(0, bits.size(), best_bits_, 0, bits.size()) < 0;
            if (!behind) {
                used_[v] = true;
                order.push_back(v);
                descend(order, bits);
                order.pop_back();
                used_[v] = false;
            }
            bits.resize(mark);
        }
    }

    const Graph& g_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> cell_degree_;
    std::vector<bool> used_;
    std::string best_bits_;
    std::vector<Vertex> best_order_;
};

std::vector<Component> components(const Graph& g) {
    std::vector<Component> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            g.for_each_neighbor(comp[i], [&](Vertex w) {
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            });
        std::sort(comp.begin(), comp.end());
        out.push_back(ComponentCanon(g, comp).run());
    }
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) { return a.code > b.code; });
    return out;
}

} // namespace

std::string canonical_code(const Graph& g) {
    std::string code;
    for (const auto& c : components(g)) {
        code += c.code;
        code.push_back('|');
    }
    return code;
}

Graph canonical_form(const Graph& g) {
    std::vector<Vertex> perm(g.order());
    Vertex next = 0;
    for (const auto& c : components(g))
        for (const auto v : c.order) perm[v] = next++;
    return relabel(g, perm);
}

std::vector<Graph> enumerate_pinned(std::size_t m) {
    std::vector<Graph> out;
    if (m == 0) return out;
    std::map<std::string, Graph> level;
    level.emplace(canonical_code(complete_graph(2)), complete_graph(2));
    for (std::size_t edges = 1;; ++edges) {
        for (auto& [code, g] : level) out.push_back(g);
        if (edges == m) break;
        std::map<std::string, Graph> next;
        auto offer = [&](const Graph& h) {
            auto code = canonical_code(h);
            if (!next.count(code)) next.emplace(std::move(code), canonical_form(h));
        };
        for (const auto& [code, g] : level) {
            const auto k = static_cast<Vertex>(g.order());
            for (Vertex u = 0; u < k; ++u)
                for (Vertex v = u + 1; v < k; ++v)
                    if (!g.has_edge(u, v) && !bits::intersects(g.row(u), g.row(v))) {
                        Graph h = g;
                        h.add_edge(u, v);
                        offer(h);
                    }
            for (Vertex u = 0; u < k; ++u) {
                Graph h = embed(g, k + 1);
                h.add_edge(u, k);
                offer(h);
            }
            Graph h = embed(g, k + 2);
            h.add_edge(k, k + 1);
            offer(h);
        }
        level = std::move(next);
    }
    return out;
}

WorstCaseResult worst_case_ex(std::size_t m, std::size_t n, const WorstCaseOptions& options) {
    if (m < 1) throw DomainError("worst-case search needs m >= 1");
    if (n < 3) throw DomainError("worst-case search needs n >= 3");
    if (m > options.max_m || n > options.max_n)
        throw DomainError("worst-case search limited to m <= " + std::to_string(options.max_m) + ", n <= " +
                          std::to_string(options.max_n));

    std::vector<Graph> candidates;
    for (auto& g : enumerate_pinned(m))
        if (g.order() <= n) candidates.push_back(std::move(g));

    WorstCaseResult result;
    result.m = m;
    result.n = n;
    result.table.resize(candidates.size());
    OracleOptions oracle;
    oracle.node_budget = options.budget;
    parallel_for(candidates.size(), options.jobs, [&](std::size_t i) {
        const auto r = exact_ex(embed(candidates[i], n), oracle);
        result.table[i] = {candidates[i], r.value, r.proved, r.nodes};
    });

    std::size_t unproved = 0;
    for (const auto& row : result.table) unproved += row.proved ? 0 : 1;
    if (unproved > 0)
        throw BudgetExceeded(std::to_string(unproved) + " of " + std::to_string(candidates.size()) +
                                 " candidates unproved within the node budget",
                             unproved);

    // the single edge always fits, so the table is never empty
    result.value = result.table.front().value;
    result.minimizer = result.table.front().support;
    for (const auto& row : result.table)
        if (row.value < result.value) {
            result.value = row.value;
            result.minimizer = row.support;
        }
    return result;
}

} // namespace pinturan
