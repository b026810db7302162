#include "pinturan/serialize.hpp"

#include "pinturan/graph_io.hpp"

#include <map>

namespace pinturan {

using nlohmann::json;

void to_json(json& j, const Rational& r) {
    j = json{{"num", r.num}, {"den", r.den}, {"value", r.value()}, {"text", r.str()}};
}

void to_json(json& j, const BoundsReport& r) {
    j = json{{"n", r.n},
             {"e_P", r.e_p},
             {"cherries", r.cherries},
             {"alpha_P", {{"lo", r.alpha_lo}, {"hi", r.alpha_hi}, {"exact", r.alpha_exact}}},
             {"d_P", r.d_p},
             {"gamma", r.gamma ? json(*r.gamma) : json(nullptr)},
             {"psi_arg", r.psi_arg ? json(*r.psi_arg) : json(nullptr)},
             {"psi_value", r.psi_arg ? json(psi(*r.psi_arg)) : json(nullptr)},
             {"upper_bound", r.upper_bound},
             {"upper_bound_exact", r.alpha_exact},
             {"lower_bound", r.lower_bound ? json(*r.lower_bound) : json(nullptr)},
             {"lower_bound_defined", r.lower_bound_defined}};
    if (!r.lower_bound_defined) j["deficit"] = r.deficit;
}

void to_json(json& j, const Certificate& c) {
    j = json{{"triangle_free", c.triangle_free},
             {"contains_P", c.contains_base},
             {"condition_b1_avoided", c.avoids_b1},
             {"condition_b2_independent", c.independent_in_b2},
             {"condition_b3_independent", c.independent_in_b3},
             {"edge_count_consistent", c.edge_count_consistent},
             {"floor_met", c.floor_met ? json(*c.floor_met) : json(nullptr)},
             {"first_failure", std::string(to_string(c.first_failure))},
             {"all_pass", c.all_pass}};
}

void to_json(json& j, const ConstructionResult& r) {
    j = json{{"graph6", to_graph6(r.g)},
             {"edges", r.g.edge_count()},
             {"i_size", r.i_size},
             {"s_prime_size", r.s_prime_size},
             {"slice_avg_degree", r.slice_avg_degree},
             {"slice_shearer", r.slice_shearer},
             {"formula_floor", r.formula_floor ? json(*r.formula_floor) : json(nullptr)},
             {"mis_exact", r.mis_exact},
             {"bipartition_tried", r.bipartition_tried}};
}

void to_json(json& j, const OracleResult& r) {
    j = json{{"value", r.value}, {"witness", to_graph6(r.witness)}, {"nodes", r.nodes}, {"proved", r.proved}};
}

void to_json(json& j, const WorstCaseRow& r) {
    j = json{{"support", to_graph6(r.support)},
             {"support_order", r.support.order()},
             {"edges", r.support.edge_count()},
             {"value", r.value},
             {"proved", r.proved},
             {"nodes", r.nodes}};
}

void to_json(json& j, const WorstCaseResult& r) {
    j = json{{"m", r.m},
             {"n", r.n},
             {"value", r.value},
             {"minimizer", to_graph6(r.minimizer)},
             {"minimizer_edges", r.minimizer.edge_count()},
             {"candidates", r.table.size()}};
}

void to_json(json& j, const SampleStats& s) {
    j = json{{"seed", s.seed},
             {"edge_count", s.edge_count},
             {"avg_degree", s.avg_degree},
             {"max_degree", s.max_degree},
             {"alpha", {{"lo", s.alpha_lo}, {"hi", s.alpha_hi}, {"exact", s.alpha_exact}}}};
}

json slice_debug_json(const AuxSlice& slice) {
    std::map<std::size_t, std::size_t> histogram;
    for (Vertex v = 0; v < slice.b2.order(); ++v) ++histogram[slice.b2.degree(v)];
    json hist = json::object();
    for (const auto& [degree, count] : histogram) hist[std::to_string(degree)] = count;
    return json{{"n", slice.n},
                {"forbidden", slice.forbidden.size()},
                {"s_prime", slice.s_prime.size()},
                {"slice_edges", slice.b2.edge_count()},
                {"slice_avg_degree", slice.average_degree()},
                {"degree_histogram", hist}};
}

} // namespace pinturan
