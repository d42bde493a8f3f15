#pragma once

#include "sweep/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sweep {

enum class SolveStatus {
    Cleared,      ///< a clearing schedule was found
    Unclearable,  ///< exhausted the reachable states without clearing
    Timeout,      ///< wall-clock budget ran out
    StateLimit    ///< state cap reached before an answer
};

const char* to_string(SolveStatus s);

/// Situation after one schedule step: the searcher position, the
/// connected components of the invisible region (canonical order:
/// sorted by smallest vertex, members ascending), and one 0/1 flag per
/// component marking the ones that may still hold the target.
struct TraceStep {
    Vertex position = kNotPlaced;
    std::vector<std::vector<Vertex>> components;
    std::vector<int> dirty;
};

/// Solver outcome for the single-searcher problem. Cost counts moves
/// only; the initial placement is free. `trace` holds one entry for the
/// placement and one per move.
struct Schedule {
    SolveStatus status = SolveStatus::Unclearable;
    long long cost = -1;
    Vertex placement = kNotPlaced;
    std::vector<Vertex> moves;
    std::vector<TraceStep> trace;
    std::uint64_t states_expanded = 0;

    bool clearable() const { return status == SolveStatus::Cleared; }
};

/// JSON text for a schedule, one line, stable byte-for-byte:
///   {"clearable":true,"cost":2,"placement":2,"moves":[1,3],
///    "trace":[{"pos":2,"components":[[3,6,7]],"dirty":[1]}, ...]}
/// Unsolved runs serialize as {"clearable":false,"status":...}.
std::string schedule_to_json(const Schedule& s);

}  // namespace sweep
