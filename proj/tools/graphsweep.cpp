// graphsweep: compute clearing schedules for a searcher with limited
// visibility hunting an invisible target on a graph; also generates
// the experiment instances and runs the batch suites.

#include "sweep/exhaustive.hpp"
#include "sweep/generators.hpp"
#include "sweep/graph_json.hpp"
#include "sweep/info_search.hpp"
#include "sweep/schedule.hpp"
#include "sweep/suite.hpp"
#include "sweep/visibility.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

namespace {

constexpr int kExitCleared = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnclearable = 2;
constexpr int kExitResource = 3;  // timeout or state cap

int exit_for(sweep::SolveStatus st) {
    switch (st) {
        case sweep::SolveStatus::Cleared: return kExitCleared;
        case sweep::SolveStatus::Unclearable: return kExitUnclearable;
        case sweep::SolveStatus::Timeout:
        case sweep::SolveStatus::StateLimit: return kExitResource;
    }
    return kExitUsage;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        sweep::write_text_file(out_path, text);
    }
}

std::pair<int, int> parse_range(const std::string& text, const char* what) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("bad ") + what + " range \"" + text +
                                 "\"; expected N or LO..HI");
    }
}

int parse_speed(const std::string& text) {
    if (text == "inf") return sweep::kInfiniteSpeed;
    try {
        const int s = std::stoi(text);
        if (s < 1) throw std::invalid_argument("");
        return s;
    } catch (const std::exception&) {
        throw std::runtime_error("bad --speed \"" + text + "\"; expected inf or an integer >= 1");
    }
}

struct SolveArgs {
    std::string graph_path;
    std::string visibility = "range:1";
    std::string solver = "dijkstra";
    std::string mode = "lazy";
    double timeout = 300.0;
    std::uint64_t max_states = 1ull << 24;
    std::string schedule_path;
    std::string dot_path;
};

void print_schedule_summary(const sweep::Schedule& s) {
    std::cout << "status: " << sweep::to_string(s.status) << "\n";
    if (s.clearable()) {
        std::cout << "cost: " << s.cost << "\n";
        std::cout << "placement: " << s.placement << "\n";
        std::cout << "moves:";
        for (sweep::Vertex v : s.moves) std::cout << ' ' << v;
        std::cout << "\n";
    } else if (s.status == sweep::SolveStatus::Unclearable) {
        std::cout << "cost: inf\n";
    }
    std::cout << "states-expanded: " << s.states_expanded << "\n";
}

int run_solve(const SolveArgs& a, bool force_dfs) {
    const sweep::Graph g = sweep::load_graph(a.graph_path);
    const sweep::BoolMatrix b = sweep::build_visibility(g, sweep::parse_visibility_arg(a.visibility));

    sweep::InfoOptions opt;
    opt.mode = a.mode == "eager" ? sweep::SolveMode::Eager : sweep::SolveMode::Lazy;
    opt.timeout_seconds = a.timeout;
    opt.max_states = a.max_states;

    const bool use_dfs = force_dfs || a.solver == "dfs";
    const sweep::Schedule s = use_dfs ? sweep::solve_dfs(g, b, opt) : sweep::solve_info(g, b, opt);
    print_schedule_summary(s);
    if (!a.schedule_path.empty()) {
        sweep::write_text_file(a.schedule_path, sweep::schedule_to_json(s));
    }
    if (!a.dot_path.empty()) {
        const sweep::InfoGraph ig = sweep::build_info_graph(g, b, a.max_states);
        sweep::write_text_file(a.dot_path, sweep::export_dot(ig));
    }
    return exit_for(s.status);
}

struct OracleArgs {
    std::string graph_path;
    std::string visibility = "range:1";
    int searchers = 1;
    std::string speed = "inf";
    double timeout = 300.0;
    std::uint64_t max_states = 1ull << 24;
    std::string schedule_path;
};

int run_oracle(const OracleArgs& a) {
    const sweep::Graph g = sweep::load_graph(a.graph_path);
    const sweep::BoolMatrix b = sweep::build_visibility(g, sweep::parse_visibility_arg(a.visibility));

    sweep::NaiveOptions opt;
    opt.searchers = a.searchers;
    opt.speed = parse_speed(a.speed);
    opt.timeout_seconds = a.timeout;
    opt.max_states = a.max_states;
    const sweep::NaiveSchedule s = sweep::solve_naive(g, b, opt);

    std::cout << "status: " << sweep::to_string(s.status) << "\n";
    if (s.clearable()) {
        std::cout << "cost: " << s.cost << "\n";
        std::cout << "placement:";
        for (sweep::Vertex v : s.placement) std::cout << ' ' << v;
        std::cout << "\nmoves:";
        for (const auto& step : s.moves) {
            std::cout << ' ';
            for (std::size_t k = 0; k < step.size(); ++k) {
                if (k) std::cout << ',';
                std::cout << step[k];
            }
        }
        std::cout << "\n";
    } else if (s.status == sweep::SolveStatus::Unclearable) {
        std::cout << "cost: inf\n";
    }
    std::cout << "states-expanded: " << s.states_expanded << "\n";

    if (!a.schedule_path.empty() && s.clearable()) {
        nlohmann::ordered_json j;
        j["clearable"] = true;
        j["cost"] = s.cost;
        j["placement"] = a.searchers == 1 ? nlohmann::ordered_json(s.placement.front())
                                          : nlohmann::ordered_json(s.placement);
        j["moves"] = nlohmann::ordered_json::array();
        for (const auto& step : s.moves) {
            j["moves"].push_back(a.searchers == 1 ? nlohmann::ordered_json(step.front())
                                                  : nlohmann::ordered_json(step));
        }
        const auto replay = sweep::replay_naive(g, b, s.placement, s.moves, opt.speed);
        j["dirty"] = nlohmann::ordered_json::array();
        for (const auto& bits : replay.dirty_steps) {
            std::vector<int> verts;
            bits.for_each_set([&](std::size_t i) { verts.push_back(static_cast<int>(i + 1)); });
            j["dirty"].push_back(verts);
        }
        sweep::write_text_file(a.schedule_path, j.dump() + "\n");
    } else if (!a.schedule_path.empty()) {
        nlohmann::ordered_json j;
        j["clearable"] = false;
        j["status"] = sweep::to_string(s.status);
        sweep::write_text_file(a.schedule_path, j.dump() + "\n");
    }
    return exit_for(s.status);
}

struct GenArgs {
    std::string family;
    int n = 0;
    int depth = -1;
    int rows = 0, cols = 0;
    int max_depth = 5;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_gen(const GenArgs& a) {
    sweep::Graph g(1, {});
    if (a.family == "path") {
        if (a.n < 1) throw std::runtime_error("gen path needs --n >= 1");
        g = sweep::gen_path(a.n);
    } else if (a.family == "complete-binary-tree") {
        if (a.depth < 0) throw std::runtime_error("gen complete-binary-tree needs --depth >= 0");
        g = sweep::gen_complete_binary_tree(a.depth);
    } else if (a.family == "grid") {
        if (a.rows < 1 || a.cols < 1) throw std::runtime_error("gen grid needs --rows and --cols >= 1");
        g = sweep::gen_grid(a.rows, a.cols);
    } else if (a.family == "random-tree") {
        g = sweep::gen_random_tree(a.max_depth, a.seed);
    } else if (a.family == "deleted-grid") {
        if (a.rows < 1 || a.cols < 1) throw std::runtime_error("gen deleted-grid needs --rows and --cols >= 1");
        g = sweep::gen_deleted_grid(a.rows, a.cols, a.p, a.seed);
    } else {
        throw std::runtime_error("unknown family \"" + a.family +
                                 "\"; expected path, complete-binary-tree, grid, random-tree, or deleted-grid");
    }
    emit(sweep::graph_to_json(g), a.out_path);
    return 0;
}

struct SuiteArgs {
    std::string family;
    std::string n_range = "1..20";
    std::string depth_range = "1..4";
    std::string l_range;
    int rows = 3, cols = 3;
    int max_depth = 5;
    int count = 100;
    double p = 0.5;
    std::uint64_t seed = 1;
    double timeout = 300.0;
    std::uint64_t max_states = 1ull << 24;
    int jobs = 1;
    bool no_timing = false;
    std::string out_path;
};

int run_suite_cmd(const SuiteArgs& a) {
    sweep::SuiteConfig cfg;
    cfg.family = a.family;
    std::tie(cfg.n_min, cfg.n_max) = parse_range(a.n_range, "--n");
    std::tie(cfg.depth_min, cfg.depth_max) = parse_range(a.depth_range, "--depth");
    const std::string l_range = a.l_range.empty() ? (a.family == "trees" ? "1..5" : "1..4") : a.l_range;
    std::tie(cfg.l_min, cfg.l_max) = parse_range(l_range, "--L");
    cfg.rows = a.rows;
    cfg.cols = a.cols;
    cfg.max_depth = a.max_depth;
    cfg.count = a.count;
    cfg.p = a.p;
    cfg.seed = a.seed;
    cfg.timeout_seconds = a.timeout;
    cfg.max_states = a.max_states;
    cfg.jobs = a.jobs;
    cfg.no_timing = a.no_timing;

    const sweep::SuiteOutcome outcome = sweep::run_suite(cfg);
    if (a.out_path.empty()) {
        std::cout << outcome.csv;
        std::cerr << outcome.stats_text;
    } else {
        sweep::write_text_file(a.out_path, outcome.csv);
        std::cout << outcome.stats_text;
    }
    return 0;
}

struct ExportArgs {
    std::string graph_path;
    std::string visibility = "range:1";
    std::uint64_t max_states = 1ull << 24;
    std::string out_path;
};

int run_export(const ExportArgs& a) {
    const sweep::Graph g = sweep::load_graph(a.graph_path);
    const sweep::BoolMatrix b = sweep::build_visibility(g, sweep::parse_visibility_arg(a.visibility));
    const sweep::InfoGraph ig = sweep::build_info_graph(g, b, a.max_states);
    emit(sweep::export_dot(ig), a.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clearing schedules for a limited-visibility searcher versus an invisible target"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "optimal clearing schedule via the information graph");
    solve_cmd->add_option("--graph", solve_args.graph_path, "graph JSON file")->required();
    solve_cmd->add_option("--visibility", solve_args.visibility, "range:L | matrix:PATH | line[:eps]");
    solve_cmd->add_option("--solver", solve_args.solver, "dijkstra | dfs")
        ->check(CLI::IsMember({"dijkstra", "dfs"}));
    solve_cmd->add_option("--mode", solve_args.mode, "lazy | eager state construction")
        ->check(CLI::IsMember({"lazy", "eager"}));
    solve_cmd->add_option("--timeout", solve_args.timeout, "wall-clock budget in seconds");
    solve_cmd->add_option("--max-states", solve_args.max_states, "state cap");
    solve_cmd->add_option("--schedule", solve_args.schedule_path, "write schedule JSON here");
    solve_cmd->add_option("--dot", solve_args.dot_path, "write the information graph as DOT here");

    SolveArgs dfs_args;
    auto* dfs_cmd = app.add_subcommand("dfs", "first clearing schedule found depth-first (not minimal)");
    dfs_cmd->add_option("--graph", dfs_args.graph_path, "graph JSON file")->required();
    dfs_cmd->add_option("--visibility", dfs_args.visibility, "range:L | matrix:PATH | line[:eps]");
    dfs_cmd->add_option("--timeout", dfs_args.timeout, "wall-clock budget in seconds");
    dfs_cmd->add_option("--max-states", dfs_args.max_states, "state cap");
    dfs_cmd->add_option("--schedule", dfs_args.schedule_path, "write schedule JSON here");

    OracleArgs oracle_args;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force search over the full state space");
    oracle_cmd->add_option("--graph", oracle_args.graph_path, "graph JSON file")->required();
    oracle_cmd->add_option("--visibility", oracle_args.visibility, "range:L | matrix:PATH | line[:eps]");
    oracle_cmd->add_option("--searchers", oracle_args.searchers, "number of searchers K")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--speed", oracle_args.speed, "target speed: inf or hops per step");
    oracle_cmd->add_option("--timeout", oracle_args.timeout, "wall-clock budget in seconds");
    oracle_cmd->add_option("--max-states", oracle_args.max_states, "state cap");
    oracle_cmd->add_option("--schedule", oracle_args.schedule_path, "write schedule JSON here");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "emit a generator instance as graph JSON");
    gen_cmd->add_option("--family", gen_args.family,
                        "path | complete-binary-tree | grid | random-tree | deleted-grid")
        ->required();
    gen_cmd->add_option("--n", gen_args.n, "path length");
    gen_cmd->add_option("--depth", gen_args.depth, "complete binary tree depth");
    gen_cmd->add_option("--rows", gen_args.rows, "grid rows");
    gen_cmd->add_option("--cols", gen_args.cols, "grid columns");
    gen_cmd->add_option("--max-depth", gen_args.max_depth, "random tree depth bound");
    gen_cmd->add_option("--p", gen_args.p, "edge deletion probability");
    gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed");
    gen_cmd->add_option("--out", gen_args.out_path, "output path (default stdout)");

    SuiteArgs suite_args;
    auto* suite_cmd = app.add_subcommand("suite", "run an experiment family and emit CSV plus statistics");
    suite_cmd->add_option("--family", suite_args.family,
                          "paths | trees | grids | random-trees | deleted-grids")
        ->required();
    suite_cmd->add_option("--n", suite_args.n_range, "path sizes, N or LO..HI");
    suite_cmd->add_option("--depth", suite_args.depth_range, "tree depths, N or LO..HI");
    suite_cmd->add_option("--L", suite_args.l_range, "visibility ranges, N or LO..HI");
    suite_cmd->add_option("--rows", suite_args.rows, "deleted-grid rows");
    suite_cmd->add_option("--cols", suite_args.cols, "deleted-grid columns");
    suite_cmd->add_option("--max-depth", suite_args.max_depth, "random tree depth bound");
    suite_cmd->add_option("--count", suite_args.count, "instances per random family");
    suite_cmd->add_option("--p", suite_args.p, "edge deletion probability");
    suite_cmd->add_option("--seed", suite_args.seed, "PRNG seed");
    suite_cmd->add_option("--timeout", suite_args.timeout, "per-instance budget in seconds");
    suite_cmd->add_option("--max-states", suite_args.max_states, "per-instance state cap");
    suite_cmd->add_option("--jobs", suite_args.jobs, "parallel workers")->check(CLI::PositiveNumber);
    suite_cmd->add_flag("--no-timing", suite_args.no_timing, "report time_ms as 0 for byte-stable CSV");
    suite_cmd->add_option("--out", suite_args.out_path, "CSV path (default stdout)");

    ExportArgs export_args;
    auto* export_cmd = app.add_subcommand("export-dot", "emit the information graph in DOT format");
    export_cmd->add_option("--graph", export_args.graph_path, "graph JSON file")->required();
    export_cmd->add_option("--visibility", export_args.visibility, "range:L | matrix:PATH | line[:eps]");
    export_cmd->add_option("--max-states", export_args.max_states, "state cap");
    export_cmd->add_option("--out", export_args.out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve_args, false);
        if (*dfs_cmd) return run_solve(dfs_args, true);
        if (*oracle_cmd) return run_oracle(oracle_args);
        if (*gen_cmd) return run_gen(gen_args);
        if (*suite_cmd) return run_suite_cmd(suite_args);
        if (*export_cmd) return run_export(export_args);
    } catch (const std::length_error& e) {
        // state-count overflow from the eager construction
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
