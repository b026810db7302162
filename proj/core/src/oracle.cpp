#include "pinturan/oracle.hpp"

#include "pinturan/errors.hpp"
#include "pinturan/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace pinturan {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxInstance = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Weighted instance: vertex x stands for members[x], all pairwise non-adjacent, all with the
// same neighbourhood. An edge x-y stands for every member pair and is worth w[x] * w[y].
struct Instance {
    std::size_t k = 0;
    std::vector<std::int64_t> w;
    std::vector<Mask> fixed;
    std::vector<std::vector<Vertex>> members;
    std::int64_t total_weight = 0;
};

std::int64_t mask_weight(const Instance& in, Mask m) {
    std::int64_t s = 0;
    for (; m; m &= m - 1) s += in.w[std::countr_zero(m)];
    return s;
}

std::int64_t max_weight_independent(const Instance& in, const std::vector<Mask>& adj, Mask m) {
    if (!m) return 0;
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    const Mask rest = m & ~bit(v);
    if (!(adj[v] & rest)) return in.w[v] + max_weight_independent(in, adj, rest);
    return std::max(in.w[v] + max_weight_independent(in, adj, rest & ~adj[v]), max_weight_independent(in, adj, rest));
}

class Search {
public:
    Search(const Instance& in, std::uint64_t budget, std::int64_t incumbent)
        : in_(in), budget_(budget), best_(incumbent) {}

    void run() {
        std::vector<Mask> adj = in_.fixed;
        std::vector<Mask> cand(in_.k, 0);
        std::int64_t weight = 0;
        for (std::size_t x = 0; x < in_.k; ++x)
            for (std::size_t y = x + 1; y < in_.k; ++y) {
                if (adj[x] & bit(y)) {
                    weight += in_.w[x] * in_.w[y];
                } else if (!(adj[x] & adj[y])) {
                    cand[x] |= bit(y);
                    cand[y] |= bit(x);
                }
            }
        if (weight > best_) record(adj, weight);
        mantel_ = in_.total_weight * in_.total_weight / 4;
        branch(adj, cand, weight);
    }

    std::int64_t best() const { return best_; }
    bool improved() const { return improved_; }
    const std::vector<Mask>& best_adjacency() const { return best_adj_; }
    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return exhausted_; }

private:
    void record(const std::vector<Mask>& adj, std::int64_t weight) {
        best_ = weight;
        best_adj_ = adj;
        improved_ = true;
    }

    std::int64_t bound(const std::vector<Mask>& adj, const std::vector<Mask>& cand, std::int64_t weight) const {
        std::int64_t open = 0;
        std::int64_t per_vertex = 0;
        for (std::size_t x = 0; x < in_.k; ++x) {
            const auto cw = mask_weight(in_, cand[x]);
            open += in_.w[x] * cw;
            const auto degree_cap = mask_weight(in_, adj[x]) + cw;
            const auto reach = adj[x] | cand[x];
            const auto independent_cap = max_weight_independent(in_, adj, reach);
            per_vertex += in_.w[x] * std::min(degree_cap, independent_cap);
        }
        return std::min({weight + open / 2, per_vertex / 2, mantel_});
    }

    void branch(std::vector<Mask>& adj, std::vector<Mask>& cand, std::int64_t weight) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }

        std::size_t bx = kMaxInstance;
        std::size_t by = kMaxInstance;
        std::int64_t best_kill = -1;
        std::int64_t best_value = -1;
        for (std::size_t x = 0; x < in_.k; ++x) {
            for (Mask m = cand[x] & ~(bit(x + 1) - 1); m; m &= m - 1) {
                const auto y = static_cast<std::size_t>(std::countr_zero(m));
                const auto kill = in_.w[x] * mask_weight(in_, cand[x] & adj[y]) + in_.w[y] * mask_weight(in_, cand[y] & adj[x]);
                const auto value = in_.w[x] * in_.w[y];
                if (kill > best_kill || (kill == best_kill && value > best_value)) {
                    best_kill = kill;
                    best_value = value;
                    bx = x;
                    by = y;
                }
            }
        }
        if (bx == kMaxInstance) {
            if (weight > best_) record(adj, weight);
            return;
        }
        if (bound(adj, cand, weight) <= best_) return;

        // include x-y
        {
            auto a = adj;
            auto c = cand;
            a[bx] |= bit(by);
            a[by] |= bit(bx);
            c[bx] &= ~bit(by);
            c[by] &= ~bit(bx);
            const Mask kill_from_x = c[bx] & a[by];
            const Mask kill_from_y = c[by] & a[bx];
            c[bx] &= ~kill_from_x;
            c[by] &= ~kill_from_y;
            for (Mask m = kill_from_x; m; m &= m - 1) c[std::countr_zero(m)] &= ~bit(bx);
            for (Mask m = kill_from_y; m; m &= m - 1) c[std::countr_zero(m)] &= ~bit(by);
            branch(a, c, weight + best_value);
        }
        // exclude x-y
        cand[bx] &= ~bit(by);
        cand[by] &= ~bit(bx);
        branch(adj, cand, weight);
    }

    const Instance& in_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool improved_ = false;
    std::int64_t best_;
    std::int64_t mantel_ = 0;
    std::vector<Mask> best_adj_;
};

struct ClassInfo {
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::size_t> class_of;
    std::ptrdiff_t isolated = -1;
};

ClassInfo twin_classes(const Graph& p, bool compress) {
    ClassInfo info;
    info.class_of.resize(p.order());
    std::map<std::vector<Word>, std::size_t> by_row;
    for (Vertex v = 0; v < p.order(); ++v) {
        if (!compress) {
            info.class_of[v] = info.classes.size();
            info.classes.push_back({v});
            continue;
        }
        const auto row = p.row(v);
        std::vector<Word> key(row.begin(), row.end());
        auto [it, inserted] = by_row.try_emplace(std::move(key), info.classes.size());
        if (inserted) {
            info.classes.emplace_back();
            if (p.degree(v) == 0) info.isolated = static_cast<std::ptrdiff_t>(it->second);
        }
        info.classes[it->second].push_back(v);
        info.class_of[v] = it->second;
    }
    return info;
}

Instance make_instance(const Graph& p, const ClassInfo& info, std::size_t split_a) {
    Instance in;
    std::vector<std::size_t> slot(info.classes.size());
    for (std::size_t c = 0; c < info.classes.size(); ++c) {
        const auto& members = info.classes[c];
        slot[c] = in.members.size();
        if (static_cast<std::ptrdiff_t>(c) == info.isolated && split_a < members.size()) {
            in.members.emplace_back(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(split_a));
            in.members.emplace_back(members.begin() + static_cast<std::ptrdiff_t>(split_a), members.end());
        } else {
            in.members.push_back(members);
        }
    }
    in.k = in.members.size();
    if (in.k > kMaxInstance)
        throw DomainError("oracle instance has " + std::to_string(in.k) + " classes; at most 64 are supported");
    in.fixed.assign(in.k, 0);
    for (std::size_t x = 0; x < in.k; ++x) {
        in.w.push_back(static_cast<std::int64_t>(in.members[x].size()));
        in.total_weight += in.w.back();
    }
    for (const auto& e : p.edges()) {
        const auto x = slot[info.class_of[e.u]];
        const auto y = slot[info.class_of[e.v]];
        in.fixed[x] |= bit(y);
        in.fixed[y] |= bit(x);
    }
    return in;
}

Graph expand(const Instance& in, const std::vector<Mask>& adj, std::size_t n) {
    Graph g(n);
    for (std::size_t x = 0; x < in.k; ++x)
        for (Mask m = adj[x] & ~(bit(x + 1) - 1); m; m &= m - 1) {
            const auto y = static_cast<std::size_t>(std::countr_zero(m));
            for (const auto u : in.members[x])
                for (const auto v : in.members[y]) g.add_edge(u, v);
        }
    return g;
}

} // namespace

OracleResult exact_ex(const Graph& p, const OracleOptions& options) {
    if (const auto t = find_triangle(p)) throw NotTriangleFree(*t);
    if (!options.compress_twins && p.order() > kMaxInstance)
        throw DomainError("labeled oracle search supports n <= 64");

    const auto info = twin_classes(p, options.compress_twins);
    std::vector<std::size_t> splits;
    if (info.isolated >= 0 && info.classes[static_cast<std::size_t>(info.isolated)].size() >= 2) {
        const auto t = info.classes[static_cast<std::size_t>(info.isolated)].size();
        for (auto a = (t + 1) / 2; a <= t; ++a) splits.push_back(a);
    } else {
        splits.push_back(p.order());
    }

    OracleResult result;
    result.value = p.edge_count();
    result.witness = p;
    result.proved = true;
    std::int64_t best = static_cast<std::int64_t>(p.edge_count());
    for (const auto a : splits) {
        const auto in = make_instance(p, info, a);
        const auto remaining = options.node_budget > result.nodes ? options.node_budget - result.nodes : 0;
        Search search(in, remaining, best);
        search.run();
        result.nodes += search.nodes();
        if (search.improved()) {
            best = search.best();
            result.witness = expand(in, search.best_adjacency(), p.order());
        }
        if (search.exhausted()) {
            result.proved = false;
            break;
        }
    }
    result.value = static_cast<std::uint64_t>(best);
    return result;
}

} // namespace pinturan
