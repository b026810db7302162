#include "pinturan/mis.hpp"

#include "pinturan/bounds.hpp"

#include <algorithm>
#include <limits>

namespace pinturan {

namespace {

using Words = std::vector<Word>;

std::size_t greedy_cover(const Graph& g, const Words& subset) {
    Words rest = subset;
    Words clique_candidates(rest.size());
    std::size_t cliques = 0;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        while (rest[i]) {
            const auto v = static_cast<Vertex>(i * kWordBits + std::countr_zero(rest[i]));
            bits::reset(rest, v);
            ++cliques;
            const auto row = g.row(v);
            for (std::size_t k = 0; k < rest.size(); ++k) clique_candidates[k] = rest[k] & row[k];
            for (std::size_t k = 0; k < clique_candidates.size(); ++k) {
                while (clique_candidates[k]) {
                    const auto w = static_cast<Vertex>(k * kWordBits + std::countr_zero(clique_candidates[k]));
                    bits::reset(rest, w);
                    const auto wrow = g.row(w);
                    for (std::size_t j = 0; j < clique_candidates.size(); ++j) clique_candidates[j] &= wrow[j];
                    bits::reset(clique_candidates, w);
                }
            }
        }
    }
    return cliques;
}

class Solver {
public:
    Solver(const Graph& g, std::uint64_t budget)
        : g_(g), stride_(words_for(g.order())), budget_(budget), current_(stride_, 0), best_(stride_, 0) {}

    void seed(const Bitset& initial) {
        best_size_ = initial.count();
        std::copy(initial.words().begin(), initial.words().end(), best_.begin());
    }

    void run() {
        Words all(stride_, 0);
        for (Vertex v = 0; v < g_.order(); ++v) bits::set(all, v);
        search(std::move(all), 0);
    }

    MisResult result() const {
        MisResult r;
        r.size = best_size_;
        r.witness = Bitset(g_.order());
        std::copy(best_.begin(), best_.end(), r.witness.words().begin());
        r.nodes_explored = nodes_;
        r.budget_exhausted = exhausted_;
        r.exact = !exhausted_;
        r.upper_bound = exhausted_ ? std::max(best_size_, open_upper_) : best_size_;
        return r;
    }

private:
    void include(Vertex v, Words& cand, std::vector<Vertex>& trail) {
        bits::set(current_, v);
        trail.push_back(v);
        bits::reset(cand, v);
        const auto row = g_.row(v);
        for (std::size_t k = 0; k < stride_; ++k) cand[k] &= ~row[k];
    }

    void search(Words cand, std::size_t size) {
        ++nodes_;
        if (exhausted_ || nodes_ > budget_) {
            exhausted_ = true;
            open_upper_ = std::max(open_upper_, size + greedy_cover(g_, cand));
            return;
        }

        std::vector<Vertex> trail;
        Vertex branch_vertex = 0;
        std::size_t branch_degree = 0;
        for (bool changed = true; changed;) {
            changed = false;
            branch_degree = 0;
            for (std::size_t i = 0; i < stride_; ++i) {
                Word w = cand[i];
                while (w) {
                    const auto v = static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
                    w &= w - 1;
                    if (!bits::test(cand, v)) continue;
                    const auto deg = bits::count_and(g_.row(v), cand);
                    if (deg <= 1) {
                        include(v, cand, trail);
                        changed = true;
                        w &= cand[i];
                    } else if (deg > branch_degree) {
                        branch_degree = deg;
                        branch_vertex = v;
                    }
                }
            }
        }
        const std::size_t here = size + trail.size();

        if (branch_degree == 0) {
            if (here > best_size_) {
                best_size_ = here;
                best_ = current_;
            }
        } else if (here + greedy_cover(g_, cand) > best_size_) {
            Words without = cand;
            bits::reset(without, branch_vertex);
            search(std::move(without), here);

            std::vector<Vertex> inner;
            include(branch_vertex, cand, inner);
            search(std::move(cand), here + 1);
            bits::reset(current_, branch_vertex);
        }

        for (const auto v : trail) bits::reset(current_, v);
    }

    const Graph& g_;
    std::size_t stride_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::size_t open_upper_ = 0;
    Words current_;
    Words best_;
    std::size_t best_size_ = 0;
};

} // namespace

MisResult max_independent_set(const Graph& g, std::uint64_t node_budget) {
    Solver solver(g, node_budget);
    Rng rng(0x5eed);
    solver.seed(greedy_independent_set(g, rng));
    solver.run();
    auto r = solver.result();
    if (!r.exact) r.upper_bound = std::min(r.upper_bound, clique_cover_bound(g));
    return r;
}

Bitset greedy_independent_set(const Graph& g, Rng& rng) {
    const auto n = g.order();
    Bitset chosen(n);
    Bitset alive(n);
    alive.set_all();
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

    std::vector<Vertex> ties;
    while (alive.any()) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        ties.clear();
        alive.for_each([&](std::size_t v) {
            if (degree[v] < best) {
                best = degree[v];
                ties.clear();
            }
            if (degree[v] == best) ties.push_back(static_cast<Vertex>(v));
        });
        const Vertex v = ties[uniform_below(rng, ties.size())];
        chosen.set(v);

        std::vector<Vertex> removed{v};
        g.for_each_neighbor(v, [&](Vertex w) {
            if (alive.test(w)) removed.push_back(w);
        });
        for (const auto x : removed) alive.reset(x);
        for (const auto x : removed)
            g.for_each_neighbor(x, [&](Vertex y) {
                if (alive.test(y)) --degree[y];
            });
    }
    return chosen;
}

std::size_t clique_cover_bound(const Graph& g) {
    Words all(words_for(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) bits::set(all, v);
    return greedy_cover(g, all);
}

double shearer_floor(std::size_t n_vertices, double avg_degree) {
    return static_cast<double>(n_vertices) * psi(avg_degree);
}

bool is_independent(const Graph& g, const Bitset& set) {
    bool ok = true;
    set.for_each([&](std::size_t v) {
        if (ok && bits::intersects(g.row(static_cast<Vertex>(v)), set.words())) ok = false;
    });
    return ok;
}

bool is_maximal_independent(const Graph& g, const Bitset& set) {
    if (!is_independent(g, set)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!set.test(v) && !bits::intersects(g.row(v), set.words())) return false;
    return true;
}

} // namespace pinturan
