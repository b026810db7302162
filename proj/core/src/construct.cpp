#include "pinturan/construct.hpp"

#include "pinturan/bounds.hpp"
#include "pinturan/errors.hpp"

#include <stdexcept>

namespace pinturan {

namespace {

// Relative slack when comparing an integer count with a floating-point floor.
constexpr double kFloorTolerance = 1e-9;

bool meets(double count, double floor) { return count + kFloorTolerance * std::max(1.0, std::abs(floor)) >= floor; }

ConstructionResult run_split(const Graph& p, const std::vector<bool>& side, const ConstructOptions& options, Rng& rng) {
    const auto slice = build_aux_slice(p, complete_bipartite(p.order(), side));

    ConstructionResult r;
    r.split = side;
    r.s_prime_size = slice.s_prime.size();
    r.slice_avg_degree = slice.average_degree();
    r.slice_shearer = static_cast<double>(r.s_prime_size) * psi(r.slice_avg_degree);

    Bitset chosen;
    if (options.mode == MisMode::Exact) {
        auto mis = max_independent_set(slice.b2, options.mis_budget);
        chosen = std::move(mis.witness);
        r.mis_exact = mis.exact;
    } else {
        chosen = greedy_independent_set(slice.b2, rng);
    }

    const PairIndex index(p.order());
    r.g = p;
    chosen.for_each([&](std::size_t i) {
        const auto [u, v] = index.decode(slice.s_prime[i]);
        r.g.add_edge(u, v);
    });
    r.i_size = chosen.count();
    return r;
}

} // namespace

ConstructionResult construct_admissible(const Graph& p, const ConstructOptions& options, Rng& rng) {
    if (const auto t = find_triangle(p)) throw NotTriangleFree(*t);

    std::optional<double> floor;
    if (p.order() >= 3 && mantel_slack(p) > 0) floor = lower_bound(p);

    ConstructionResult best = run_split(p, identity_split(p.order()), options, rng);
    for (std::size_t k = 0; k < options.bipartitions; ++k) {
        auto side = random_split(p.order(), rng);
        auto candidate = run_split(p, side, options, rng);
        if (candidate.g.edge_count() > best.g.edge_count()) best = std::move(candidate);
    }
    best.bipartition_tried = options.bipartitions + 1;
    best.formula_floor = floor;

    if (best.mis_exact && floor) {
        const auto count = static_cast<double>(best.i_size);
        if (!meets(count, best.slice_shearer) || !meets(best.slice_shearer, *floor))
            throw std::logic_error("construction fell below the guaranteed floor: |I| = " + std::to_string(best.i_size) +
                                   ", slice floor " + std::to_string(best.slice_shearer) + ", formula floor " +
                                   std::to_string(*floor));
    }
    return best;
}

Certificate certify(const ConstructionResult& result, const Graph& p) {
    Certificate c;
    const auto adm = is_admissible(p, result.g);
    c.triangle_free = adm.triangle_free;
    c.contains_base = adm.contains_base;
    c.avoids_b1 = adm.avoids_b1;
    c.independent_in_b2 = adm.independent_in_b2;
    c.independent_in_b3 = adm.independent_in_b3;
    c.first_failure = adm.first_failure;
    c.edge_count_consistent = result.g.edge_count() == p.edge_count() + result.i_size;
    if (result.mis_exact && result.formula_floor)
        c.floor_met = meets(static_cast<double>(result.g.edge_count() - p.edge_count()), *result.formula_floor);
    c.all_pass = adm.admissible && adm.decomposition_agrees && c.avoids_b1 && c.independent_in_b2 &&
                 c.independent_in_b3 && c.edge_count_consistent && c.floor_met.value_or(true);
    return c;
}

} // namespace pinturan
