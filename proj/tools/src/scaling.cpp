#include "pinturan_cli/scaling.hpp"

#include "pinturan/bounds.hpp"
#include "pinturan/errors.hpp"
#include "pinturan/graph.hpp"
#include "pinturan/mis.hpp"
#include "pinturan/parallel.hpp"
#include "pinturan/random_models.hpp"
#include "pinturan/rng.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>

namespace pinturan::cli {

using nlohmann::json;

Model parse_model(const std::string& name) {
    if (name == "process") return Model::Process;
    if (name == "uniform-tf") return Model::UniformTf;
    if (name == "erdos-renyi") return Model::ErdosRenyi;
    throw ParseError("unknown model '" + name + "' (process, uniform-tf, erdos-renyi)");
}

std::string to_string(Model m) {
    switch (m) {
    case Model::Process: return "process";
    case Model::UniformTf: return "uniform-tf";
    case Model::ErdosRenyi: return "erdos-renyi";
    }
    return "?";
}

namespace {

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
    T value{};
    if constexpr (std::is_floating_point_v<T>) {
        // from_chars for doubles is missing from older libstdc++
        std::size_t used = 0;
        try {
            value = static_cast<T>(std::stod(text, &used));
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != text.size() || text.empty()) throw ParseError(key + ": not a number: '" + text + "'");
    } else {
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw ParseError(key + ": not a non-negative integer: '" + text + "'");
    }
    return value;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

double normalizer(std::size_t n, double d) {
    const auto nn = static_cast<double>(n);
    return nn * nn * std::log(d) / d;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto k = v.size();
    return k % 2 == 1 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

} // namespace

std::map<std::string, std::string> read_config_pairs(std::istream& in) {
    std::map<std::string, std::string> pairs;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
        const auto key = trim(line.substr(0, eq));
        if (key.empty()) throw ParseError("empty key", lineno);
        if (!pairs.emplace(key, trim(line.substr(eq + 1))).second) throw ParseError("duplicate key '" + key + "'", lineno);
    }
    return pairs;
}

void apply_config(const std::map<std::string, std::string>& pairs, ExperimentConfig& cfg) {
    for (const auto& [key, value] : pairs) {
        if (key == "model") {
            cfg.model = parse_model(value);
        } else if (key == "n") {
            cfg.n_values.clear();
            for (const auto& item : split_list(value)) cfg.n_values.push_back(parse_number<std::size_t>(key, item));
        } else if (key == "d") {
            cfg.d_values.clear();
            for (const auto& item : split_list(value)) cfg.d_values.push_back(parse_number<double>(key, item));
        } else if (key == "trials") {
            cfg.trials = parse_number<std::size_t>(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_number<std::uint64_t>(key, value);
        } else if (key == "mis_budget") {
            cfg.mis_budget = parse_number<std::uint64_t>(key, value);
        } else if (key == "burn_in") {
            cfg.burn_in = parse_number<std::uint64_t>(key, value);
        } else if (key == "jobs") {
            cfg.jobs = parse_number<std::size_t>(key, value);
        } else if (key == "output_dir") {
            cfg.output_dir = value;
        } else {
            throw ParseError("unknown config key '" + key + "'");
        }
    }
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw ParseError("trials must be at least 1");
    if (cfg.n_values.empty()) throw ParseError("no n values");
    if (cfg.d_values.empty()) throw ParseError("no d values");
    for (const auto n : cfg.n_values)
        if (n < 3) throw ParseError("n must be at least 3");
    for (const auto d : cfg.d_values)
        if (!(d > 1.0) || !std::isfinite(d)) throw ParseError("d must be a finite value above 1");
}

std::uint64_t trial_key(std::uint64_t seed, std::size_t n, double d) {
    return stream_seed(stream_seed(seed, n), std::bit_cast<std::uint64_t>(d));
}

namespace {

Graph sample(const ExperimentConfig& cfg, std::size_t n, double d, Rng& rng) {
    const auto edges = edges_for_average_degree(n, d);
    switch (cfg.model) {
    case Model::Process: return triangle_free_process(n, edges, rng).graph;
    case Model::UniformTf:
        return sample_uniform_triangle_free(n, edges, cfg.burn_in ? cfg.burn_in : default_burn_in(n, edges), rng);
    case Model::ErdosRenyi: return erdos_renyi(n, std::min(1.0, d / static_cast<double>(n)), rng);
    }
    throw std::logic_error("unreachable");
}

} // namespace

ScalingRun run_scaling(const ExperimentConfig& cfg) {
    validate(cfg);
    struct Task {
        std::size_t n;
        double d;
        std::size_t trial;
    };
    std::vector<Task> tasks;
    for (const auto n : cfg.n_values)
        for (const auto d : cfg.d_values)
            for (std::size_t t = 0; t < cfg.trials; ++t) tasks.push_back({n, d, t});

    std::vector<std::optional<ScalingRow>> rows(tasks.size());
    std::vector<std::string> errors(tasks.size());
    parallel_for(tasks.size(), cfg.jobs, [&](std::size_t i) {
        const auto& task = tasks[i];
        try {
            auto rng = make_stream(trial_key(cfg.seed, task.n, task.d), task.trial);
            const auto g = sample(cfg, task.n, task.d, rng);
            const auto report = compute_bounds(g, cfg.mis_budget);
            ScalingRow row;
            row.n = task.n;
            row.d = task.d;
            row.trial = task.trial;
            row.e_p = report.e_p;
            row.alpha = report.alpha_lo;
            row.alpha_upper = report.alpha_hi;
            row.alpha_exact = report.alpha_exact;
            row.delta = degree_summary(g).max;
            row.lower_bound = report.lower_bound;
            row.upper_bound = report.upper_bound.value();
            const double norm = normalizer(task.n, task.d);
            if (row.lower_bound) row.ratio_lower = *row.lower_bound / norm;
            row.ratio_upper = row.upper_bound / norm;
            rows[i] = row;
        } catch (const std::exception& e) {
            errors[i] = "n=" + std::to_string(task.n) + " d=" + fmt(task.d) + " trial=" + std::to_string(task.trial) +
                        ": " + e.what();
        }
    });

    ScalingRun run;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (rows[i]) run.rows.push_back(*rows[i]);
        else run.failures.push_back(errors[i]);
    }
    std::sort(run.rows.begin(), run.rows.end(), [](const ScalingRow& a, const ScalingRow& b) {
        return std::tie(a.n, a.d, a.trial) < std::tie(b.n, b.d, b.trial);
    });
    return run;
}

std::string to_csv(const std::vector<ScalingRow>& rows) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + fmt(r.d) + ',' + std::to_string(r.trial) + ',' + std::to_string(r.e_p) + ',' +
               std::to_string(r.alpha) + ',' + std::to_string(r.alpha_upper) + ',' + (r.alpha_exact ? "1" : "0") + ',' +
               std::to_string(r.delta) + ',' + (r.lower_bound ? fmt(*r.lower_bound) : "") + ',' + fmt(r.upper_bound) +
               ',' + (r.ratio_lower ? fmt(*r.ratio_lower) : "") + ',' + fmt(r.ratio_upper) + '\n';
    }
    return out;
}

json summarize(const ExperimentConfig& cfg, const ScalingRun& run) {
    json cells = json::array();
    // per d: n -> median ratio (absent when no trial had the value)
    std::map<double, std::map<std::size_t, std::optional<double>>> lower_by_d, upper_by_d;
    std::size_t order_violations = 0;

    for (const auto n : cfg.n_values) {
        for (const auto d : cfg.d_values) {
            std::vector<double> lower, upper;
            std::size_t exact = 0, count = 0;
            for (const auto& r : run.rows) {
                if (r.n != n || r.d != d) continue;
                ++count;
                if (r.ratio_lower) lower.push_back(*r.ratio_lower);
                upper.push_back(r.ratio_upper);
                exact += r.alpha_exact ? 1 : 0;
                if (r.lower_bound && *r.lower_bound > r.upper_bound) ++order_violations;
            }
            std::optional<double> ml, mu;
            if (!lower.empty()) ml = median(lower);
            if (!upper.empty()) mu = median(upper);
            lower_by_d[d][n] = ml;
            upper_by_d[d][n] = mu;
            cells.push_back(json{{"n", n},
                                 {"d", d},
                                 {"trials_ok", count},
                                 {"lower_defined", lower.size()},
                                 {"alpha_exact", exact},
                                 {"median_ratio_lower", ml ? json(*ml) : json(nullptr)},
                                 {"median_ratio_upper", mu ? json(*mu) : json(nullptr)}});
        }
    }

    auto drift_of = [](const std::map<std::size_t, std::optional<double>>& by_n) -> json {
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (const auto& [n, v] : by_n) {
            if (!v || !(*v > 0.0)) return nullptr;
            lo = first ? *v : std::min(lo, *v);
            hi = first ? *v : std::max(hi, *v);
            first = false;
        }
        if (first) return nullptr;
        return hi / lo;
    };

    json drift = json::array();
    bool pass = order_violations == 0 && run.failures.empty();
    for (const auto d : cfg.d_values) {
        const auto dl = drift_of(lower_by_d[d]);
        const auto du = drift_of(upper_by_d[d]);
        std::vector<std::size_t> missing;
        for (const auto& [n, v] : lower_by_d[d])
            if (!v) missing.push_back(n);
        const bool ok = !dl.is_null() && !du.is_null() && dl.get<double>() <= kDriftLimit && du.get<double>() <= kDriftLimit;
        pass = pass && ok;
        drift.push_back(json{{"d", d}, {"ratio_lower", dl}, {"ratio_upper", du}, {"lower_undefined_at_n", missing}, {"within_limit", ok}});
    }

    return json{{"model", to_string(cfg.model)},
                {"seed", cfg.seed},
                {"trials", cfg.trials},
                {"mis_budget", cfg.mis_budget},
                {"n_values", cfg.n_values},
                {"d_values", cfg.d_values},
                {"rows", run.rows.size()},
                {"failed_trials", run.failures.size()},
                {"failures", run.failures},
                {"lower_above_upper", order_violations},
                {"cells", cells},
                {"drift", drift},
                {"drift_limit", kDriftLimit},
                {"bounded_ratio_check", pass}};
}

} // namespace pinturan::cli
