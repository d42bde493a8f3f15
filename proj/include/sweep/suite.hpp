#pragma once

#include "sweep/graph.hpp"
#include "sweep/schedule.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sweep {

/// Experiment-suite configuration. Size fields apply to the family
/// that uses them; the rest are ignored.
struct SuiteConfig {
    std::string family;  ///< paths | trees | grids | random-trees | deleted-grids

    int n_min = 1, n_max = 20;          ///< paths
    int depth_min = 1, depth_max = 4;   ///< trees
    std::vector<std::pair<int, int>> grid_sizes;  ///< grids; empty = all of 2x2..6x6
    int rows = 3, cols = 3;             ///< deleted-grids
    int max_depth = 5;                  ///< random-trees
    int count = 100;                    ///< instances per random family
    double p = 0.5;                     ///< deletion probability

    int l_min = 1, l_max = 4;           ///< visibility ranges to sweep
    std::uint64_t seed = 1;
    double timeout_seconds = 300.0;
    std::uint64_t max_states = 1ull << 24;
    int jobs = 1;
    bool no_timing = false;             ///< report time_ms as 0 for byte-stable output
};

struct SuiteRow {
    std::string family;
    std::string instance;
    std::string params;
    int L = 0;
    SolveStatus status = SolveStatus::Unclearable;
    long long cost = -1;
    std::uint64_t states_expanded = 0;
    long long time_ms = 0;
};

struct SuiteOutcome {
    std::vector<SuiteRow> rows;  ///< sorted by (instance, L)
    std::string csv;             ///< header + one line per row
    std::string stats_text;      ///< per-L cleared counts and length/time aggregates
};

/// Runs one experiment family: generates the instances, solves each at
/// every visibility range, and renders the CSV and statistics block.
/// Output is deterministic for a fixed seed, independent of `jobs`.
SuiteOutcome run_suite(const SuiteConfig& cfg);

/// The 15 grid sizes rows x cols with 2 <= rows <= cols <= 6.
std::vector<std::pair<int, int>> default_grid_sizes();

}  // namespace sweep
