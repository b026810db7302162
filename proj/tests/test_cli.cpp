#include "doctest.h"

#include "pinturan/errors.hpp"
#include "pinturan/graph_io.hpp"
#include "pinturan/oracle.hpp"
#include "pinturan/rng.hpp"
#include "pinturan_cli/cli.hpp"
#include "pinturan_cli/scaling.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pinturan;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "pinturan_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const Graph& g) {
    const auto path = scratch(name);
    write_graph(path, g);
    return path.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

} // namespace

TEST_CASE("bounds command") {
    auto r = call({"bounds", write("empty6.txt", Graph(6))});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["lower_bound"] == 9.0);
    CHECK(j["upper_bound"]["value"] == 18.0);

    r = call({"bounds", write("edge6.g6", Graph::from_edges(6, std::vector<Edge>{{0, 1}}))});
    j = json::parse(r.out);
    CHECK(j["lower_bound"].get<double>() == doctest::Approx(4.0));
    CHECK(j["upper_bound"]["value"] == 15.0);

    r = call({"bounds", write("c5.g6", cycle_graph(5))});
    j = json::parse(r.out);
    CHECK(j["lower_bound"].is_null());
    CHECK(j["lower_bound_defined"] == false);
    CHECK(j["upper_bound"]["value"] == 5.0);

    r = call({"bounds", write("k4.txt", complete_graph(4))});
    CHECK(r.code == 2);
    const auto e = json::parse(r.err);
    CHECK(e["triangle"] == json::array({0, 1, 2}));
}

TEST_CASE("parse failures exit with 1") {
    const auto bad = scratch("bad.txt");
    std::ofstream(bad) << "3 1\n0 0\n";
    CHECK(call({"bounds", bad.string()}).code == 1);
    CHECK(call({"bounds", scratch("missing.g6").string()}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"exact"}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("construct command") {
    auto r = call({"construct", write("empty6.txt", Graph(6))});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(from_graph6(j["graph6"].get<std::string>()) == complete_bipartite(3, 3));
    CHECK(j["certificate"]["all_pass"] == true);

    r = call({"construct", write("edge6.txt", Graph::from_edges(6, std::vector<Edge>{{0, 3}}))});
    CHECK(json::parse(r.out)["edges"] == 9);

    Rng rng(20);
    Graph p(20);
    for (int i = 0; i < 25; ++i) {
        const auto u = static_cast<Vertex>(uniform_below(rng, 20));
        const auto v = static_cast<Vertex>(uniform_below(rng, 20));
        if (u == v || p.has_edge(u, v)) continue;
        p.add_edge(u, v);
        if (!is_triangle_free(p)) p.remove_edge(u, v);
    }
    const auto out_graph = scratch("constructed.g6");
    r = call({"construct", write("random20.g6", p), "--seed", "3", "--graph-out", out_graph.string()});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["certificate"]["all_pass"] == true);
    if (!j["formula_floor"].is_null())
        CHECK(j["i_size"].get<double>() >= j["formula_floor"].get<double>() - 1e-9);
    CHECK(subgraph_of(p, read_graph(out_graph)));
}

TEST_CASE("exact command") {
    auto r = call({"exact", write("empty7.txt", Graph(7))});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["value"] == 12);

    r = call({"exact", write("k16.g6", star_graph(6, 9))});
    CHECK(json::parse(r.out)["value"] == 18);

    r = call({"exact", write("c5_8.g6", embed(cycle_graph(5), 8)), "--with-bounds"});
    auto j = json::parse(r.out);
    CHECK(j["proved"] == true);
    CHECK(j["sandwich_ok"] == true);

    r = call({"exact", write("empty9.txt", Graph(9)), "--budget", "1", "--no-compress"});
    CHECK(r.code == 3);
    CHECK(json::parse(r.out)["proved"] == false);
}

TEST_CASE("worst-case command") {
    auto r = call({"worst-case", "-m", "1", "-n", "8"});
    REQUIRE(r.code == 0);
    std::vector<json> lines;
    std::istringstream in(r.out);
    for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
    CHECK(lines.back()["value"] == 16);

    r = call({"worst-case", "-m", "5", "-n", "10", "-j", "2"});
    REQUIRE(r.code == 0);
    const auto c5 = canonical_code(cycle_graph(5));
    const auto k15 = canonical_code(star_graph(5, 6));
    bool saw_c5 = false, saw_k15 = false;
    std::istringstream rows(r.out);
    for (std::string line; std::getline(rows, line);) {
        const auto j = json::parse(line);
        if (!j.contains("support")) continue;
        const auto code = canonical_code(from_graph6(j["support"].get<std::string>()));
        saw_c5 |= code == c5 && j["proved"] == true;
        saw_k15 |= code == k15 && j["proved"] == true;
    }
    CHECK(saw_c5);
    CHECK(saw_k15);

    CHECK(call({"worst-case", "-m", "3", "-n", "9", "--budget", "1"}).code == 3);
    CHECK(call({"worst-case", "-m", "9", "-n", "9"}).code == 2);
}

TEST_CASE("sample command is deterministic across job counts") {
    const auto a = call({"sample", "--model", "uniform-tf", "-n", "12", "--edges", "20", "--count", "6", "--seed", "5", "--graph"});
    const auto b = call({"sample", "--model", "uniform-tf", "-n", "12", "--edges", "20", "--count", "6", "--seed", "5", "--graph", "-j", "4"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    for (std::string line; std::getline(in, line);) {
        const auto j = json::parse(line);
        CHECK(j["triangle_free"] == true);
        CHECK(j["edge_count"] == 20);
    }
}

TEST_CASE("config files") {
    std::istringstream text("# sweep\nmodel = process\nn = 16, 32\nd = 3\ntrials = 2 # per cell\nseed=9\n");
    cli::ExperimentConfig cfg;
    cli::apply_config(cli::read_config_pairs(text), cfg);
    CHECK(cfg.n_values == std::vector<std::size_t>{16, 32});
    CHECK(cfg.d_values == std::vector<double>{3.0});
    CHECK(cfg.trials == 2);
    CHECK(cfg.seed == 9);

    std::istringstream unknown("colour = blue\n");
    CHECK_THROWS_AS(cli::apply_config(cli::read_config_pairs(unknown), cfg), ParseError);
    std::istringstream noeq("model process\n");
    CHECK_THROWS_AS(cli::read_config_pairs(noeq), ParseError);
    cfg.d_values = {1.0};
    CHECK_THROWS_AS(cli::validate(cfg), ParseError);

    const auto cfg_path = scratch("bad.cfg");
    std::ofstream(cfg_path) << "trials = many\n";
    CHECK(call({"scaling", "-c", cfg_path.string()}).code == 1);
}

TEST_CASE("scaling command") {
    const auto cfg_path = scratch("sweep.cfg");
    std::ofstream(cfg_path) << "model = process\nn = 64, 128\nd = 4, 8\ntrials = 20\nseed = 1\nmis_budget = 200000\n";
    const auto dir1 = scratch("sweep1"), dir2 = scratch("sweep2");
    REQUIRE(call({"scaling", "-c", cfg_path.string(), "--output-dir", dir1.string()}).code == 0);
    REQUIRE(call({"scaling", "-c", cfg_path.string(), "--output-dir", dir2.string(), "-j", "4"}).code == 0);
    const auto csv = slurp(dir1 / "scaling.csv");
    CHECK(csv == slurp(dir2 / "scaling.csv"));
    CHECK(slurp(dir1 / "scaling_summary.json") == slurp(dir2 / "scaling_summary.json"));

    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == cli::kCsvHeader);
    std::size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 80);

    const auto summary = json::parse(slurp(dir1 / "scaling_summary.json"));
    CHECK(summary["failed_trials"] == 0);
    CHECK(summary["lower_above_upper"] == 0);

    // flags override the file
    const auto dir3 = scratch("sweep3");
    REQUIRE(call({"scaling", "-c", cfg_path.string(), "--n", "20", "--d", "2", "--trials", "3", "--output-dir", dir3.string()}).code == 0);
    CHECK(json::parse(slurp(dir3 / "scaling_summary.json"))["rows"] == 3);
}
