#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pinturan::cli {

enum class Model { Process, UniformTf, ErdosRenyi };

Model parse_model(const std::string& name);
std::string to_string(Model m);

struct ExperimentConfig {
    Model model = Model::Process;
    std::vector<std::size_t> n_values;
    std::vector<double> d_values;
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::uint64_t mis_budget = 1'000'000;
    /// Chain length for the uniform model; 0 picks the default burn-in.
    std::uint64_t burn_in = 0;
    std::size_t jobs = 1;
    std::optional<std::filesystem::path> output_dir;
};

/// Flat "key = value" lines; '#' starts a comment; lists are comma separated.
/// Keys: model, n, d, trials, seed, mis_budget, burn_in, jobs, output_dir.
std::map<std::string, std::string> read_config_pairs(std::istream& in);
/// Applies pairs onto cfg. Unknown keys and malformed values throw ParseError.
void apply_config(const std::map<std::string, std::string>& pairs, ExperimentConfig& cfg);
/// Throws ParseError when the sweep is empty or d <= 1 anywhere.
void validate(const ExperimentConfig& cfg);

struct ScalingRow {
    std::size_t n = 0;
    double d = 0.0;
    std::size_t trial = 0;
    std::uint64_t e_p = 0;
    std::size_t alpha = 0;
    std::size_t alpha_upper = 0;
    bool alpha_exact = false;
    std::size_t delta = 0;
    std::optional<double> lower_bound;
    /// n * alpha_upper / 2, so it stays a valid bound when alpha is only bracketed.
    double upper_bound = 0.0;
    std::optional<double> ratio_lower;
    double ratio_upper = 0.0;
};

struct ScalingRun {
    std::vector<ScalingRow> rows;
    /// "n=.. d=.. trial=..: message" for every trial that threw.
    std::vector<std::string> failures;
};

/// The stream of trial (n, d, t) is make_stream(trial_key(seed, n, d), t); results are
/// sorted by (n, d, trial) so the job count never changes the output.
std::uint64_t trial_key(std::uint64_t seed, std::size_t n, double d);
ScalingRun run_scaling(const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader =
    "n,d,trial,e_P,alpha,alpha_upper,alpha_exact,delta,lower_bound,upper_bound,ratio_lower,ratio_upper";
std::string to_csv(const std::vector<ScalingRow>& rows);

/// Drift threshold for the bounded-ratio check across n.
inline constexpr double kDriftLimit = 4.0;
nlohmann::json summarize(const ExperimentConfig& cfg, const ScalingRun& run);

} // namespace pinturan::cli
