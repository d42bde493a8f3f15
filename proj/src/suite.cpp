#include "sweep/suite.hpp"

#include "sweep/generators.hpp"
#include "sweep/info_search.hpp"
#include "sweep/rng.hpp"
#include "sweep/visibility.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sweep {

namespace {

std::string pad(int value, int width) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%0*d", width, value);
    return buf;
}

std::string format_p(double p) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

struct Instance {
    std::string name;
    std::string params;
    Graph graph;
};

std::vector<Instance> build_instances(const SuiteConfig& cfg) {
    std::vector<Instance> out;
    if (cfg.family == "paths") {
        if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw std::invalid_argument("bad path size range");
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
            out.push_back({"path-" + pad(n, 2), "n=" + std::to_string(n), gen_path(n)});
        }
    } else if (cfg.family == "trees") {
        if (cfg.depth_min < 0 || cfg.depth_max < cfg.depth_min) throw std::invalid_argument("bad depth range");
        for (int d = cfg.depth_min; d <= cfg.depth_max; ++d) {
            out.push_back({"tree-d" + std::to_string(d), "depth=" + std::to_string(d),
                           gen_complete_binary_tree(d)});
        }
    } else if (cfg.family == "grids") {
        auto sizes = cfg.grid_sizes.empty() ? default_grid_sizes() : cfg.grid_sizes;
        for (auto [r, c] : sizes) {
            out.push_back({"grid-" + std::to_string(r) + "x" + std::to_string(c),
                           "rows=" + std::to_string(r) + ";cols=" + std::to_string(c), gen_grid(r, c)});
        }
    } else if (cfg.family == "random-trees") {
        std::uint64_t stream = cfg.seed;
        for (int i = 1; i <= cfg.count; ++i) {
            const std::uint64_t inst_seed = splitmix64(stream);
            out.push_back({"rtree-" + pad(i, 3),
                           "maxDepth=" + std::to_string(cfg.max_depth) + ";seed=" + std::to_string(cfg.seed),
                           gen_random_tree(cfg.max_depth, inst_seed)});
        }
    } else if (cfg.family == "deleted-grids") {
        std::uint64_t stream = cfg.seed;
        for (int i = 1; i <= cfg.count; ++i) {
            const std::uint64_t inst_seed = splitmix64(stream);
            out.push_back({"dgrid-" + std::to_string(cfg.rows) + "x" + std::to_string(cfg.cols) + "-" + pad(i, 3),
                           "rows=" + std::to_string(cfg.rows) + ";cols=" + std::to_string(cfg.cols) +
                               ";p=" + format_p(cfg.p) + ";seed=" + std::to_string(cfg.seed),
                           gen_deleted_grid(cfg.rows, cfg.cols, cfg.p, inst_seed)});
        }
    } else {
        throw std::invalid_argument("unknown family \"" + cfg.family +
                                 "\"; expected paths, trees, grids, random-trees, or deleted-grids");
    }
    return out;
}

void render_csv(const std::vector<SuiteRow>& rows, std::string& csv) {
    std::ostringstream out;
    out << "family,instance,params,L,clearable,cost,states_expanded,time_ms\n";
    for (const auto& r : rows) {
        out << r.family << ',' << r.instance << ',' << r.params << ',' << r.L << ',';
        switch (r.status) {
            case SolveStatus::Cleared:
                out << "true," << r.cost;
                break;
            case SolveStatus::Unclearable:
                out << "false,inf";
                break;
            default:
                out << "n/a,n/a";  // timed out or hit the state cap
                break;
        }
        out << ',' << r.states_expanded << ',' << r.time_ms << '\n';
    }
    csv = out.str();
}

std::string render_stats(const std::vector<SuiteRow>& rows, int l_min, int l_max) {
    std::ostringstream out;
    for (int L = l_min; L <= l_max; ++L) {
        int total = 0, cleared = 0, completed = 0;
        long long len_min = 0, len_max = 0, len_sum = 0;
        long long t_min = 0, t_max = 0, t_sum = 0;
        for (const auto& r : rows) {
            if (r.L != L) continue;
            ++total;
            if (r.status == SolveStatus::Cleared) {
                if (cleared == 0 || r.cost < len_min) len_min = r.cost;
                if (cleared == 0 || r.cost > len_max) len_max = r.cost;
                len_sum += r.cost;
                ++cleared;
            }
            if (r.status == SolveStatus::Cleared || r.status == SolveStatus::Unclearable) {
                if (completed == 0 || r.time_ms < t_min) t_min = r.time_ms;
                if (completed == 0 || r.time_ms > t_max) t_max = r.time_ms;
                t_sum += r.time_ms;
                ++completed;
            }
        }
        if (total == 0) continue;
        out << "L=" << L << ": cleared " << cleared << "/" << total;
        if (cleared > 0) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f", static_cast<double>(len_sum) / cleared);
            out << "; length min/avg/max = " << len_min << "/" << buf << "/" << len_max;
        } else {
            out << "; length n/a";
        }
        if (completed > 0) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f", static_cast<double>(t_sum) / completed);
            out << "; time_ms min/avg/max = " << t_min << "/" << buf << "/" << t_max;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::vector<std::pair<int, int>> default_grid_sizes() {
    std::vector<std::pair<int, int>> sizes;
    for (int r = 2; r <= 6; ++r) {
        for (int c = r; c <= 6; ++c) sizes.emplace_back(r, c);
    }
    return sizes;
}

SuiteOutcome run_suite(const SuiteConfig& cfg) {
    if (cfg.l_min < 0 || cfg.l_max < cfg.l_min) throw std::invalid_argument("bad L range");
    if (cfg.count < 0) throw std::invalid_argument("count must be >= 0");

    const std::vector<Instance> instances = build_instances(cfg);

    struct Task {
        const Instance* inst;
        int L;
    };
    std::vector<Task> tasks;
    tasks.reserve(instances.size() * static_cast<std::size_t>(cfg.l_max - cfg.l_min + 1));
    for (const auto& inst : instances) {
        for (int L = cfg.l_min; L <= cfg.l_max; ++L) tasks.push_back({&inst, L});
    }

    SuiteOutcome outcome;
    outcome.rows.resize(tasks.size());
    const auto run_task = [&](std::size_t i) {
        const Task& t = tasks[i];
        SuiteRow row;
        row.family = cfg.family;
        row.instance = t.inst->name;
        row.params = t.inst->params;
        row.L = t.L;
        const auto t0 = std::chrono::steady_clock::now();
        InfoOptions opt;
        opt.timeout_seconds = cfg.timeout_seconds;
        opt.max_states = cfg.max_states;
        const BoolMatrix b = range_visibility(t.inst->graph, t.L);
        const Schedule s = solve_info(t.inst->graph, b, opt);
        const auto t1 = std::chrono::steady_clock::now();
        row.status = s.status;
        row.cost = s.cost;
        row.states_expanded = s.states_expanded;
        row.time_ms = cfg.no_timing
                          ? 0
                          : std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        outcome.rows[i] = std::move(row);
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        const std::size_t nthreads = std::min(static_cast<std::size_t>(jobs), tasks.size());
        workers.reserve(nthreads);
        for (std::size_t w = 0; w < nthreads; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                    run_task(i);
                }
            });
        }
        for (auto& th : workers) th.join();
    }

    std::sort(outcome.rows.begin(), outcome.rows.end(), [](const SuiteRow& a, const SuiteRow& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        return a.L < b.L;
    });
    render_csv(outcome.rows, outcome.csv);
    outcome.stats_text = render_stats(outcome.rows, cfg.l_min, cfg.l_max);
    return outcome;
}

}  // namespace sweep
