#pragma once

#include "sweep/bool_matrix.hpp"
#include "sweep/graph.hpp"
#include "sweep/schedule.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sweep {

/// Search state as the searcher can actually distinguish it: the
/// current position and one dirty bit per invisible component. The
/// not-yet-placed state is position 0 with the single bit 1.
struct InfoState {
    Vertex position = kNotPlaced;
    std::uint64_t mask = 1;  ///< bit m = component m may hold the target

    bool clear() const { return position != kNotPlaced && mask == 0; }
    bool operator==(const InfoState& o) const { return position == o.position && mask == o.mask; }
};

/// What a position induces: its visible set and the connected
/// components of the rest, in canonical order (sorted by smallest
/// vertex, members ascending).
struct Decomposition {
    Vertex position = kNotPlaced;
    VertexSet visible;
    std::vector<std::vector<Vertex>> components;
    std::vector<VertexSet> component_sets;  ///< same components, as sets

    int component_count() const { return static_cast<int>(components.size()); }
};

Decomposition decompose(const Graph& g, const BoolMatrix& b, Vertex position);

/// Decompositions for every position, computed once per solve. Packing
/// dirty bits into 64-bit masks limits positions to 63 components;
/// construction throws past that.
class DecompositionTable {
public:
    DecompositionTable(const Graph& g, const BoolMatrix& b);

    const Decomposition& at(Vertex position) const { return decs_[static_cast<std::size_t>(position - 1)]; }
    int component_count(Vertex position) const { return at(position).component_count(); }
    int vertex_count() const { return static_cast<int>(decs_.size()); }

private:
    std::vector<Decomposition> decs_;
};

/// One step of the information dynamics: the searcher relocates to
/// `move`, the target may slip out of freshly observed vertices into
/// adjacent invisible ones, and anything unresolved fills its whole
/// invisible component. Legal moves are any vertex from the unplaced
/// state and the closed neighborhood afterwards; illegal moves throw.
InfoState transition(const Graph& g, const DecompositionTable& table, const InfoState& state, Vertex move);

/// Convenience overload that builds the table internally.
InfoState transition(const Graph& g, const BoolMatrix& b, const InfoState& state, Vertex move);

/// Vertices covered by the dirty components of `state` (all of V for
/// the unplaced state).
VertexSet dirty_vertices(const DecompositionTable& table, const InfoState& state);

struct InfoArc {
    std::size_t from = 0;
    std::size_t to = 0;
    Vertex move = kNotPlaced;
    int cost = 1;
};

/// Fully materialized information graph. State 0 is the unplaced
/// state; the rest are ordered by position, then mask. Arcs are grouped
/// by source in that same order, moves ascending, and include the
/// self-arcs produced by staying put.
struct InfoGraph {
    std::vector<InfoState> states;
    std::vector<InfoArc> arcs;
    std::vector<int> comp_counts;  ///< per position, index position-1

    std::size_t total_states() const { return states.size(); }
    std::size_t non_lambda_states() const { return states.size() - 1; }
};

/// Enumerates every information state (reachable or not) and all its
/// transitions. The state count is sum of 2^(components at i) over
/// positions i; exceeding `max_states` throws with a pointer to the
/// lazy solver, which only visits reachable states.
InfoGraph build_info_graph(const Graph& g, const BoolMatrix& b, std::uint64_t max_states = 1ull << 24);

enum class SolveMode { Lazy, Eager };

struct InfoOptions {
    SolveMode mode = SolveMode::Lazy;
    double timeout_seconds = 0.0;          ///< <= 0 disables the clock
    std::uint64_t max_states = 1ull << 24;
};

/// Minimum-move clearing schedule by Dijkstra over the information
/// graph (placement free, each move cost 1). Lazy mode discovers states
/// on demand; eager mode searches the full graph; both return the same
/// cost and schedule. Ties break toward the smallest (position, mask),
/// so output is reproducible byte-for-byte.
Schedule solve_info(const Graph& g, const BoolMatrix& b, const InfoOptions& opt = {});

/// Depth-first fallback: returns some clearing schedule, not
/// necessarily minimal, visiting each state at most once. Useful when
/// the optimal search is too slow.
Schedule solve_dfs(const Graph& g, const BoolMatrix& b, const InfoOptions& opt = {});

/// GraphViz text for an information graph: one node per state labeled
/// "(pos,[bits])" with the unplaced state as "(λ,[1])", all-clear
/// states drawn as double circles, arcs labeled "move/cost".
/// Byte-identical for identical inputs.
std::string export_dot(const InfoGraph& ig);

}  // namespace sweep
