#pragma once

#include "sweep/bool_matrix.hpp"
#include "sweep/graph.hpp"
#include "sweep/schedule.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sweep {

/// Full search state: where the K searchers stand (or nowhere, before
/// placement) and which vertices may still hold the target. The
/// not-yet-placed state is the unique one with empty positions and an
/// all-ones dirty vector.
struct FullState {
    std::optional<std::vector<Vertex>> positions;
    Bitset dirty;

    bool placed() const { return positions.has_value(); }
};

/// Where each searcher goes next; one entry per searcher.
using Control = std::vector<Vertex>;

/// Target speed: hops of contamination spread per searcher move.
/// 0 stands for an unbounded-speed target (equivalent to s = n).
inline constexpr int kInfiniteSpeed = 0;

/// Applies one round: searchers move to `control`, then contamination
/// escapes and spreads `s` hops through the newly invisible region.
/// From the unplaced state any control is legal (the free placement);
/// afterwards searcher k may only stay or cross an edge. Illegal moves
/// throw std::invalid_argument naming the offending searcher.
FullState evolve(const Graph& g, const BoolMatrix& b, const FullState& state, const Control& control,
                 int s = kInfiniteSpeed);

/// Dirty-vector part of evolve, usable without building FullStates.
Bitset evolve_dirty(const Graph& g, const BoolMatrix& b, const Bitset& dirty,
                    std::span<const Vertex> new_positions, int s = kInfiniteSpeed);

struct NaiveOptions {
    int searchers = 1;                        ///< K >= 1
    int speed = kInfiniteSpeed;               ///< 1..n, or 0 for unbounded
    std::uint64_t max_states = 1ull << 24;    ///< cap on distinct states touched
    double timeout_seconds = 0.0;             ///< <= 0 disables the clock
};

/// Oracle result. `placement` has one vertex per searcher; each entry
/// of `moves` is the K-tuple for that step.
struct NaiveSchedule {
    SolveStatus status = SolveStatus::Unclearable;
    long long cost = -1;
    std::vector<Vertex> placement;
    std::vector<std::vector<Vertex>> moves;
    std::uint64_t states_expanded = 0;

    bool clearable() const { return status == SolveStatus::Cleared; }
};

/// Exhaustive Dijkstra over the full state space: shortest schedule
/// from the unplaced all-dirty state to any all-clear state. Placement
/// costs 0, every later step costs 1. Ties are broken toward the
/// numerically smallest encoded state, so results are reproducible.
NaiveSchedule solve_naive(const Graph& g, const BoolMatrix& b, const NaiveOptions& opt = {});

/// Number of conceivable states: n^K * 2^n plus the unplaced state.
/// Throws std::overflow_error when the count exceeds 64 bits.
std::uint64_t state_space_size(int n, int k);

/// Runs a K-searcher schedule through evolve, recording the dirty
/// vector after placement and after each move. `cleared` reports
/// whether the final vector is all-zero.
struct ReplayResult {
    bool cleared = false;
    std::vector<Bitset> dirty_steps;
};
ReplayResult replay_naive(const Graph& g, const BoolMatrix& b, const Control& placement,
                          const std::vector<Control>& moves, int s = kInfiniteSpeed);

}  // namespace sweep
