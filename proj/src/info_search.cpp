#include "sweep/info_search.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace sweep {

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_for(double seconds) {
    if (seconds <= 0) return Clock::time_point::max();
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
}

std::vector<int> mask_to_bits(std::uint64_t mask, int m) {
    std::vector<int> bits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) bits[static_cast<std::size_t>(i)] = static_cast<int>(mask >> i & 1u);
    return bits;
}

/// Trace for the post-placement part of a schedule (λ excluded).
std::vector<TraceStep> make_trace(const DecompositionTable& table, const std::vector<InfoState>& chain) {
    std::vector<TraceStep> trace;
    trace.reserve(chain.size());
    for (const auto& s : chain) {
        TraceStep step;
        step.position = s.position;
        step.components = table.at(s.position).components;
        step.dirty = mask_to_bits(s.mask, table.component_count(s.position));
        trace.push_back(std::move(step));
    }
    return trace;
}

Schedule make_schedule(const DecompositionTable& table, const std::vector<InfoState>& full_chain,
                       long long cost, std::uint64_t expanded) {
    Schedule s;
    s.status = SolveStatus::Cleared;
    s.cost = cost;
    s.states_expanded = expanded;
    std::vector<InfoState> placed(full_chain.begin() + 1, full_chain.end());
    s.placement = placed.front().position;
    for (std::size_t i = 1; i < placed.size(); ++i) s.moves.push_back(placed[i].position);
    s.trace = make_trace(table, placed);
    return s;
}

struct LazyKey {
    Vertex pos = kNotPlaced;
    std::uint64_t mask = 1;
    bool operator==(const LazyKey&) const = default;
};

struct LazyKeyHash {
    std::size_t operator()(const LazyKey& k) const {
        std::uint64_t x = static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.pos)) * 0x9E3779B97F4A7C15ull ^ k.mask;
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ull;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBull;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

Schedule solve_lazy(const Graph& g, const DecompositionTable& table, const InfoOptions& opt) {
    const int n = g.vertex_count();
    const auto deadline = deadline_for(opt.timeout_seconds);

    struct Rec {
        long long dist = 0;
        LazyKey parent;
    };
    std::unordered_map<LazyKey, Rec, LazyKeyHash> recs;
    using Entry = std::tuple<long long, Vertex, std::uint64_t>;  // (dist, pos, mask)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

    const LazyKey start{kNotPlaced, 1};
    recs.emplace(start, Rec{0, start});
    queue.emplace(0, start.pos, start.mask);

    Schedule result;
    std::uint64_t expanded = 0;
    while (!queue.empty()) {
        auto [d, pos, mask] = queue.top();
        queue.pop();
        const LazyKey key{pos, mask};
        auto it = recs.find(key);
        if (it == recs.end() || it->second.dist != d) continue;  // stale
        ++expanded;
        if (Clock::now() > deadline) {
            result.status = SolveStatus::Timeout;
            result.states_expanded = expanded;
            return result;
        }

        if (pos != kNotPlaced && mask == 0) {
            // Rebuild the state chain from the parent pointers.
            std::vector<InfoState> chain;
            LazyKey cur = key;
            while (true) {
                chain.push_back(InfoState{cur.pos, cur.mask});
                if (cur == start) break;
                cur = recs.at(cur).parent;
            }
            std::reverse(chain.begin(), chain.end());
            result = make_schedule(table, chain, d, expanded);
            return result;
        }

        const InfoState state{pos, mask};
        const long long step_cost = pos == kNotPlaced ? 0 : 1;
        auto relax = [&](Vertex move) -> bool {
            const InfoState child = transition(g, table, state, move);
            const LazyKey ck{child.position, child.mask};
            const long long nd = d + step_cost;
            auto cit = recs.find(ck);
            if (cit == recs.end()) {
                if (recs.size() >= opt.max_states) return false;
                recs.emplace(ck, Rec{nd, key});
                queue.emplace(nd, ck.pos, ck.mask);
            } else if (nd < cit->second.dist) {
                cit->second.dist = nd;
                cit->second.parent = key;
                queue.emplace(nd, ck.pos, ck.mask);
            }
            return true;
        };
        bool ok = true;
        if (pos == kNotPlaced) {
            for (Vertex v = 1; v <= n && ok; ++v) ok = relax(v);
        } else {
            for (Vertex j : g.neighbors(pos)) {
                if (!(ok = relax(j))) break;  // staying put never changes an info state
            }
        }
        if (!ok) {
            result.status = SolveStatus::StateLimit;
            result.states_expanded = expanded;
            return result;
        }
    }
    result.status = SolveStatus::Unclearable;
    result.states_expanded = expanded;
    return result;
}

Schedule solve_eager(const Graph& g, const BoolMatrix& b, const DecompositionTable& table,
                     const InfoOptions& opt) {
    Schedule result;
    InfoGraph ig;
    try {
        ig = build_info_graph(g, b, opt.max_states);
    } catch (const std::length_error&) {
        result.status = SolveStatus::StateLimit;
        return result;
    }
    const auto deadline = deadline_for(opt.timeout_seconds);

    // Arcs are grouped by source; index the group boundaries.
    std::vector<std::size_t> first(ig.states.size() + 1, ig.arcs.size());
    for (std::size_t a = ig.arcs.size(); a-- > 0;) first[ig.arcs[a].from] = a;
    for (std::size_t i = ig.states.size(); i-- > 0;) {
        if (first[i] > first[i + 1]) first[i] = first[i + 1];
    }

    constexpr long long kInf = -1;
    std::vector<long long> dist(ig.states.size(), kInf);
    std::vector<std::size_t> parent(ig.states.size(), 0);
    using Entry = std::pair<long long, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[0] = 0;
    queue.emplace(0, 0);

    std::uint64_t expanded = 0;
    while (!queue.empty()) {
        auto [d, idx] = queue.top();
        queue.pop();
        if (dist[idx] != d) continue;
        ++expanded;
        if (Clock::now() > deadline) {
            result.status = SolveStatus::Timeout;
            result.states_expanded = expanded;
            return result;
        }
        if (ig.states[idx].clear()) {
            std::vector<InfoState> chain;
            for (std::size_t cur = idx;; cur = parent[cur]) {
                chain.push_back(ig.states[cur]);
                if (cur == 0) break;
            }
            std::reverse(chain.begin(), chain.end());
            result = make_schedule(table, chain, d, expanded);
            return result;
        }
        for (std::size_t a = first[idx]; a < first[idx + 1]; ++a) {
            const InfoArc& arc = ig.arcs[a];
            if (arc.to == arc.from) continue;  // staying put is a no-op
            const long long nd = d + arc.cost;
            if (dist[arc.to] == kInf || nd < dist[arc.to]) {
                dist[arc.to] = nd;
                parent[arc.to] = idx;
                queue.emplace(nd, arc.to);
            }
        }
    }
    result.status = SolveStatus::Unclearable;
    result.states_expanded = expanded;
    return result;
}

}  // namespace

Decomposition decompose(const Graph& g, const BoolMatrix& b, Vertex position) {
    const int n = g.vertex_count();
    g.check_vertex(position, "position");
    if (static_cast<int>(b.rows()) != n || static_cast<int>(b.cols()) != n) {
        throw std::invalid_argument("visibility matrix shape does not match the graph");
    }
    Decomposition d;
    d.position = position;
    d.visible = VertexSet(Bitset(b.row(static_cast<std::size_t>(position - 1))));
    VertexSet invisible = VertexSet::all(n);
    invisible.subtract(d.visible);
    d.components = connected_components(g, invisible);
    d.component_sets.reserve(d.components.size());
    for (const auto& comp : d.components) {
        VertexSet cs(n);
        for (Vertex v : comp) cs.insert(v);
        d.component_sets.push_back(std::move(cs));
    }
    return d;
}

DecompositionTable::DecompositionTable(const Graph& g, const BoolMatrix& b) {
    const int n = g.vertex_count();
    decs_.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        decs_.push_back(decompose(g, b, v));
        const int m = decs_.back().component_count();
        if (m > 63) {
            throw std::invalid_argument("position " + std::to_string(v) + " induces " + std::to_string(m) +
                                        " invisible components; packed dirty vectors support at most 63");
        }
    }
}

VertexSet dirty_vertices(const DecompositionTable& table, const InfoState& state) {
    const int n = table.vertex_count();
    if (state.position == kNotPlaced) return VertexSet::all(n);
    const Decomposition& dec = table.at(state.position);
    VertexSet dirty(n);
    for (int m = 0; m < dec.component_count(); ++m) {
        if (state.mask >> m & 1u) dirty |= dec.component_sets[static_cast<std::size_t>(m)];
    }
    return dirty;
}

InfoState transition(const Graph& g, const DecompositionTable& table, const InfoState& state, Vertex move) {
    const int n = g.vertex_count();
    g.check_vertex(move, "move");
    if (state.position != kNotPlaced) {
        g.check_vertex(state.position, "position");
        if (move != state.position && !g.has_edge(state.position, move)) {
            throw std::invalid_argument("illegal move " + std::to_string(state.position) + " -> " +
                                        std::to_string(move) + " (no such edge)");
        }
    }
    const VertexSet d_old = dirty_vertices(table, state);
    const Decomposition& dec = table.at(move);

    // Unseen dirty vertices survive as they are; a dirty vertex that
    // just became visible is caught unless the target can first slip
    // into an unseen neighbor.
    VertexSet survivors = d_old;
    survivors.subtract(dec.visible);
    VertexSet caught = d_old;
    caught &= dec.visible;
    VertexSet escape(n);
    caught.for_each([&](Vertex v) { escape |= g.neighbor_set(v); });
    escape.subtract(dec.visible);
    survivors |= escape;

    // Unbounded speed: one surviving vertex taints its whole component.
    std::uint64_t mask = 0;
    for (int m = 0; m < dec.component_count(); ++m) {
        if (dec.component_sets[static_cast<std::size_t>(m)].intersects(survivors)) {
            mask |= std::uint64_t(1) << m;
        }
    }
    return InfoState{move, mask};
}

InfoState transition(const Graph& g, const BoolMatrix& b, const InfoState& state, Vertex move) {
    DecompositionTable table(g, b);
    return transition(g, table, state, move);
}

InfoGraph build_info_graph(const Graph& g, const BoolMatrix& b, std::uint64_t max_states) {
    const int n = g.vertex_count();
    DecompositionTable table(g, b);

    InfoGraph ig;
    ig.comp_counts.resize(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> base(static_cast<std::size_t>(n));
    std::uint64_t total = 1;  // the unplaced state
    for (Vertex v = 1; v <= n; ++v) {
        const int m = table.component_count(v);
        ig.comp_counts[static_cast<std::size_t>(v - 1)] = m;
        base[static_cast<std::size_t>(v - 1)] = total;
        const std::uint64_t here = std::uint64_t(1) << m;
        if (here > max_states - total) {  // total + here > max_states, without overflow
            throw std::length_error("information graph needs more than " + std::to_string(max_states) +
                                    " states; the lazy solver visits only reachable states and may still cope");
        }
        total += here;
    }

    const auto index_of = [&](const InfoState& s) -> std::size_t {
        if (s.position == kNotPlaced) return 0;
        return static_cast<std::size_t>(base[static_cast<std::size_t>(s.position - 1)] + s.mask);
    };

    ig.states.reserve(static_cast<std::size_t>(total));
    ig.states.push_back(InfoState{kNotPlaced, 1});
    for (Vertex v = 1; v <= n; ++v) {
        const std::uint64_t count = std::uint64_t(1) << table.component_count(v);
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            ig.states.push_back(InfoState{v, mask});
        }
    }

    for (Vertex v = 1; v <= n; ++v) {
        const InfoState from{kNotPlaced, 1};
        const InfoState child = transition(g, table, from, v);
        ig.arcs.push_back(InfoArc{0, index_of(child), v, 0});
    }
    for (std::size_t idx = 1; idx < ig.states.size(); ++idx) {
        const InfoState& s = ig.states[idx];
        std::vector<Vertex> closed = g.neighbors(s.position);
        closed.push_back(s.position);
        std::sort(closed.begin(), closed.end());
        for (Vertex j : closed) {
            const InfoState child = transition(g, table, s, j);
            ig.arcs.push_back(InfoArc{idx, index_of(child), j, 1});
        }
    }
    return ig;
}

Schedule solve_info(const Graph& g, const BoolMatrix& b, const InfoOptions& opt) {
    DecompositionTable table(g, b);
    if (opt.mode == SolveMode::Eager) {
        return solve_eager(g, b, table, opt);
    }
    return solve_lazy(g, table, opt);
}

Schedule solve_dfs(const Graph& g, const BoolMatrix& b, const InfoOptions& opt) {
    const int n = g.vertex_count();
    DecompositionTable table(g, b);
    const auto deadline = deadline_for(opt.timeout_seconds);

    struct Frame {
        InfoState state;
        std::vector<Vertex> succ;
        std::size_t next = 0;
    };
    const auto successors = [&](const InfoState& s) {
        std::vector<Vertex> out;
        if (s.position == kNotPlaced) {
            out.resize(static_cast<std::size_t>(n));
            for (Vertex v = 1; v <= n; ++v) out[static_cast<std::size_t>(v - 1)] = v;
        } else {
            out = g.neighbors(s.position);  // staying put never helps: same info state
        }
        return out;
    };

    std::unordered_set<LazyKey, LazyKeyHash> visited;
    std::vector<Frame> stack;
    const InfoState start{kNotPlaced, 1};
    visited.insert(LazyKey{start.position, start.mask});
    stack.push_back(Frame{start, successors(start), 0});

    Schedule result;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next >= f.succ.size()) {
            stack.pop_back();
            continue;
        }
        const Vertex move = f.succ[f.next++];
        const InfoState child = transition(g, table, f.state, move);
        if (Clock::now() > deadline) {
            result.status = SolveStatus::Timeout;
            result.states_expanded = visited.size();
            return result;
        }
        if (child.clear()) {
            std::vector<InfoState> chain;
            chain.reserve(stack.size() + 1);
            for (const Frame& fr : stack) chain.push_back(fr.state);
            chain.push_back(child);
            result = make_schedule(table, chain, static_cast<long long>(chain.size()) - 2, visited.size());
            return result;
        }
        const LazyKey ck{child.position, child.mask};
        if (visited.insert(ck).second) {
            if (visited.size() > opt.max_states) {
                result.status = SolveStatus::StateLimit;
                result.states_expanded = visited.size();
                return result;
            }
            stack.push_back(Frame{child, successors(child), 0});
        }
    }
    result.status = SolveStatus::Unclearable;
    result.states_expanded = visited.size();
    return result;
}

std::string export_dot(const InfoGraph& ig) {
    std::ostringstream out;
    out << "digraph info_graph {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < ig.states.size(); ++i) {
        const InfoState& s = ig.states[i];
        out << "  s" << i << " [label=\"(";
        if (s.position == kNotPlaced) {
            out << "\xce\xbb,[1]";  // λ
        } else {
            out << s.position << ",[";
            const int m = ig.comp_counts[static_cast<std::size_t>(s.position - 1)];
            for (int bit = 0; bit < m; ++bit) {
                if (bit) out << ",";
                out << (s.mask >> bit & 1u);
            }
            out << "]";
        }
        out << ")\"";
        if (s.clear()) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (const InfoArc& a : ig.arcs) {
        out << "  s" << a.from << " -> s" << a.to << " [label=\"" << a.move << "/" << a.cost << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sweep
