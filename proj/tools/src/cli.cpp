#include "pinturan_cli/cli.hpp"
#include "pinturan_cli/scaling.hpp"

#include "pinturan/bounds.hpp"
#include "pinturan/construct.hpp"
#include "pinturan/errors.hpp"
#include "pinturan/graph_io.hpp"
#include "pinturan/oracle.hpp"
#include "pinturan/parallel.hpp"
#include "pinturan/random_models.hpp"
#include "pinturan/serialize.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace pinturan::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Common {
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
    std::string output;
    std::string format = "auto";
};

GraphFormat parse_format(const std::string& f) {
    if (f == "auto") return GraphFormat::Auto;
    if (f == "graph6") return GraphFormat::Graph6;
    if (f == "edgelist") return GraphFormat::EdgeList;
    throw ParseError("unknown graph format '" + f + "'");
}

std::optional<fs::path> env_output_dir() {
    if (const char* dir = std::getenv("PINTURAN_OUTPUT_DIR"); dir && *dir) return fs::path(dir);
    return std::nullopt;
}

// Explicit -o wins, then $PINTURAN_OUTPUT_DIR/<default_name>, then stdout.
void emit(const Common& c, const std::string& default_name, const std::string& text, std::ostream& out) {
    std::optional<fs::path> target;
    if (!c.output.empty() && c.output != "-") target = c.output;
    else if (c.output.empty())
        if (auto dir = env_output_dir()) target = *dir / default_name;
    if (!target) {
        out << text;
        return;
    }
    if (target->has_parent_path()) fs::create_directories(target->parent_path());
    std::ofstream f(*target, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + target->string());
    f << text;
}

Graph load(const std::string& path, const Common& c, std::ostream& err) {
    std::vector<std::string> warnings;
    Graph g = [&] {
        if (path == "-") {
            std::stringstream ss;
            ss << std::cin.rdbuf();
            const auto text = ss.str();
            const auto fmt = parse_format(c.format);
            if (fmt == GraphFormat::Graph6 || (fmt == GraphFormat::Auto && text.find(' ') == std::string::npos &&
                                               text.find('\n') == text.size() - 1)) {
                return from_graph6(text.substr(0, text.find('\n')));
            }
            std::istringstream in(text);
            return parse_edge_list(in, &warnings);
        }
        if (!fs::exists(path)) throw ParseError("no such file: " + path);
        return read_graph(path, parse_format(c.format), &warnings);
    }();
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    return g;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pinned Turán numbers for triangles: bounds, constructions, exact values and random models",
                 "pinturan"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "pinturan 0.1.0");

    Common c;
    auto add_common = [&](CLI::App* sub, bool random, bool parallel) {
        sub->add_option("-o,--output", c.output, "Output file ('-' for stdout)");
        if (random) sub->add_option("--seed", c.seed, "Master seed")->capture_default_str();
        if (parallel) sub->add_option("-j,--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    };

    std::string input;
    std::uint64_t mis_budget = kDefaultMisBudget;
    std::uint64_t oracle_budget = kDefaultOracleBudget;

    auto* bounds = app.add_subcommand("bounds", "Upper and lower bounds for a pinned graph");
    bounds->add_option("graph", input, "Graph file (graph6 or edge list, '-' for stdin)")->required();
    bounds->add_option("--format", c.format, "auto, graph6 or edgelist");
    bounds->add_option("--mis-budget", mis_budget, "Search nodes for the independence number")->capture_default_str();
    add_common(bounds, false, false);

    std::string mode = "exact";
    std::size_t bipartitions = 0;
    std::string graph_out;
    auto* construct = app.add_subcommand("construct", "Admissible supergraph with a certificate");
    construct->add_option("graph", input, "Graph file")->required();
    construct->add_option("--format", c.format, "auto, graph6 or edgelist");
    construct->add_option("--mode", mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}))->capture_default_str();
    construct->add_option("--bipartitions", bipartitions, "Extra random balanced splits")->capture_default_str();
    construct->add_option("--mis-budget", mis_budget, "Search nodes for the slice")->capture_default_str();
    construct->add_option("--graph-out", graph_out, "Also write the output graph here (graph6)");
    add_common(construct, true, false);

    bool no_compress = false;
    bool with_bounds = false;
    auto* exact = app.add_subcommand("exact", "Exact pinned extremal number");
    exact->add_option("graph", input, "Graph file")->required();
    exact->add_option("--format", c.format, "auto, graph6 or edgelist");
    exact->add_option("--budget", oracle_budget, "Search node budget")->capture_default_str();
    exact->add_flag("--no-compress", no_compress, "Disable twin-class compression");
    exact->add_flag("--with-bounds", with_bounds, "Attach both bounds and check the sandwich");
    exact->add_option("--mis-budget", mis_budget, "Search nodes for the independence number")->capture_default_str();
    add_common(exact, false, false);

    ExperimentConfig cfg;
    std::string config_path, model_flag, n_flag, d_flag, output_dir_flag;
    std::optional<std::size_t> trials_flag;
    std::optional<std::uint64_t> mis_flag, burn_flag;
    auto* scaling = app.add_subcommand("scaling", "Bound ratios across a sweep of random graphs");
    scaling->add_option("-c,--config", config_path, "key = value config file");
    scaling->add_option("--model", model_flag, "process, uniform-tf or erdos-renyi");
    scaling->add_option("--n", n_flag, "Comma-separated vertex counts");
    scaling->add_option("--d", d_flag, "Comma-separated average degrees");
    scaling->add_option("--trials", trials_flag, "Trials per (n, d)");
    scaling->add_option("--mis-budget", mis_flag, "Search nodes per independence number");
    scaling->add_option("--burn-in", burn_flag, "Chain steps for uniform-tf");
    scaling->add_option("--output-dir", output_dir_flag, "Directory for scaling.csv and scaling_summary.json");
    std::optional<std::uint64_t> scaling_seed;
    std::optional<std::size_t> scaling_jobs;
    scaling->add_option("--seed", scaling_seed, "Master seed");
    scaling->add_option("-j,--jobs", scaling_jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::size_t wc_m = 0, wc_n = 0;
    auto* worst = app.add_subcommand("worst-case", "Worst pinned graph with at most m edges");
    worst->add_option("-m", wc_m, "Edge budget of P")->required();
    worst->add_option("-n", wc_n, "Vertex count")->required();
    worst->add_option("--budget", oracle_budget, "Node budget per candidate")->capture_default_str();
    add_common(worst, false, true);

    std::string sample_model = "process";
    std::size_t sample_n = 0, count = 1;
    std::optional<double> sample_d;
    std::optional<std::size_t> sample_edges;
    std::optional<std::uint64_t> chain_steps;
    bool emit_graph = false;
    auto* sample_cmd = app.add_subcommand("sample", "Random triangle-free graphs with statistics (JSON lines)");
    sample_cmd->add_option("--model", sample_model, "process, uniform-tf or erdos-renyi")->capture_default_str();
    sample_cmd->add_option("-n", sample_n, "Vertex count")->required();
    auto* d_opt = sample_cmd->add_option("-d", sample_d, "Average degree");
    sample_cmd->add_option("--edges", sample_edges, "Edge count (instead of -d)")->excludes(d_opt);
    sample_cmd->add_option("--count", count, "Number of samples")->capture_default_str();
    sample_cmd->add_option("--chain-steps", chain_steps, "Chain length for uniform-tf");
    sample_cmd->add_option("--mis-budget", mis_budget, "Search nodes per independence number")->capture_default_str();
    sample_cmd->add_flag("--graph", emit_graph, "Include the graph6 string in each record");
    add_common(sample_cmd, true, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands())
            err << sub->help();
        return kParseError;
    }

    auto error_line = [&](const std::string& kind, const std::string& message, json extra = json::object()) {
        extra["error"] = kind;
        extra["message"] = message;
        err << extra.dump() << '\n';
    };

    try {
        if (bounds->parsed()) {
            const auto g = load(input, c, err);
            emit(c, "bounds.json", dump(json(compute_bounds(g, mis_budget))), out);
            return kOk;
        }
        if (construct->parsed()) {
            const auto g = load(input, c, err);
            Rng rng(c.seed);
            const ConstructOptions opts{mode == "exact" ? MisMode::Exact : MisMode::Greedy, bipartitions, mis_budget};
            const auto result = construct_admissible(g, opts, rng);
            const auto cert = certify(result, g);
            json j = result;
            j["certificate"] = cert;
            j["seed"] = c.seed;
            if (!graph_out.empty()) write_graph(graph_out, result.g, GraphFormat::Graph6);
            emit(c, "construct.json", dump(j), out);
            if (!cert.all_pass) {
                error_line("certificate", "construction failed its own certificate");
                return kInternalError;
            }
            return kOk;
        }
        if (exact->parsed()) {
            const auto g = load(input, c, err);
            const auto r = exact_ex(g, OracleOptions{oracle_budget, !no_compress});
            json j = r;
            if (with_bounds) {
                const auto b = compute_bounds(g, mis_budget);
                j["bounds"] = b;
                bool ok = true;
                if (r.proved && b.alpha_exact) ok = ok && static_cast<double>(r.value) <= b.upper_bound.value();
                if (r.proved && b.lower_bound) ok = ok && static_cast<double>(r.value) >= *b.lower_bound - 1e-9;
                j["sandwich_ok"] = ok;
            }
            emit(c, "exact.json", dump(j), out);
            if (!r.proved) {
                error_line("budget", "search budget exhausted; value is a lower bound", {{"value", r.value}});
                return kBudgetExhausted;
            }
            return kOk;
        }
        if (scaling->parsed()) {
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw ParseError("cannot open config " + config_path);
                apply_config(read_config_pairs(f), cfg);
            }
            std::map<std::string, std::string> overrides;
            if (!model_flag.empty()) overrides["model"] = model_flag;
            if (!n_flag.empty()) overrides["n"] = n_flag;
            if (!d_flag.empty()) overrides["d"] = d_flag;
            if (trials_flag) overrides["trials"] = std::to_string(*trials_flag);
            if (mis_flag) overrides["mis_budget"] = std::to_string(*mis_flag);
            if (burn_flag) overrides["burn_in"] = std::to_string(*burn_flag);
            if (scaling_seed) overrides["seed"] = std::to_string(*scaling_seed);
            if (scaling_jobs) overrides["jobs"] = std::to_string(*scaling_jobs);
            if (!output_dir_flag.empty()) overrides["output_dir"] = output_dir_flag;
            apply_config(overrides, cfg);
            validate(cfg);

            const fs::path dir = cfg.output_dir ? *cfg.output_dir : env_output_dir().value_or(fs::path("."));
            const auto result = run_scaling(cfg);
            for (const auto& f : result.failures) err << "trial failed: " << f << '\n';
            const auto summary = summarize(cfg, result);
            fs::create_directories(dir);
            std::ofstream(dir / "scaling.csv", std::ios::binary) << to_csv(result.rows);
            std::ofstream(dir / "scaling_summary.json", std::ios::binary) << dump(summary);
            out << "wrote " << result.rows.size() << " rows to " << (dir / "scaling.csv").string() << '\n';
            return kOk;
        }
        if (worst->parsed()) {
            const auto r = worst_case_ex(wc_m, wc_n, WorstCaseOptions{oracle_budget, c.jobs, 8, 10});
            std::string text;
            for (const auto& row : r.table) text += json(row).dump() + '\n';
            json summary = r;
            summary["record"] = "summary";
            text += summary.dump() + '\n';
            emit(c, "worst_case.jsonl", text, out);
            return kOk;
        }
        if (sample_cmd->parsed()) {
            const auto model = parse_model(sample_model);
            if (!sample_d && !sample_edges) throw ParseError("sample needs -d or --edges");
            const std::size_t edges = sample_edges ? *sample_edges : edges_for_average_degree(sample_n, *sample_d);
            std::vector<std::string> lines(count);
            parallel_for(count, c.jobs, [&](std::size_t i) {
                auto rng = make_stream(c.seed, i);
                Graph g;
                switch (model) {
                case Model::Process: g = triangle_free_process(sample_n, edges, rng).graph; break;
                case Model::UniformTf:
                    g = sample_uniform_triangle_free(sample_n, edges, chain_steps.value_or(default_burn_in(sample_n, edges)), rng);
                    break;
                case Model::ErdosRenyi: {
                    const double pairs = static_cast<double>(sample_n) * static_cast<double>(sample_n - 1) / 2.0;
                    g = erdos_renyi(sample_n, pairs > 0 ? std::min(1.0, static_cast<double>(edges) / pairs) : 0.0, rng);
                    break;
                }
                }
                json j = model_stats(g, mis_budget, stream_seed(c.seed, i));
                j["index"] = i;
                j["triangle_free"] = is_triangle_free(g);
                if (emit_graph) j["graph6"] = to_graph6(g);
                lines[i] = j.dump() + '\n';
            });
            std::string text;
            for (const auto& l : lines) text += l;
            emit(c, "samples.jsonl", text, out);
            return kOk;
        }
    } catch (const ParseError& e) {
        error_line("parse", e.what());
        return kParseError;
    } catch (const NotTriangleFree& e) {
        const auto t = e.triangle();
        error_line("not_triangle_free", e.what(), {{"triangle", {t[0], t[1], t[2]}}});
        return kSemanticError;
    } catch (const BudgetExceeded& e) {
        error_line("budget", e.what(), {{"remaining", e.remaining()}});
        return kBudgetExhausted;
    } catch (const Error& e) {
        error_line("domain", e.what());
        return kSemanticError;
    } catch (const std::exception& e) {
        error_line("internal", e.what());
        return kInternalError;
    }
    return kInternalError;
}

} // namespace pinturan::cli
