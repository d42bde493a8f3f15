#include "sweep/exhaustive.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sweep {

namespace {

Bitset bits_from_mask(std::uint64_t mask, int n) {
    Bitset b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) b.set(static_cast<std::size_t>(i));
    }
    return b;
}

std::uint64_t mask_from_bits(const Bitset& b) {
    std::uint64_t mask = 0;
    b.for_each_set([&](std::size_t i) { mask |= std::uint64_t(1) << i; });
    return mask;
}

int effective_speed(int s, int n) {
    if (s < 0) {
        throw std::invalid_argument("target speed must be >= 1 (or 0 for unbounded), got " + std::to_string(s));
    }
    if (s == kInfiniteSpeed || s > n) s = n;
    return std::max(1, s);
}

/// The oracle packs a state into 64 bits: position digits in base n+1
/// (digit 0 = unplaced) above n dirty bits. Rejects instances where
/// that would not fit.
void check_encoding(int n, int k) {
    if (n > 58) {
        throw std::invalid_argument("oracle state encoding supports at most 58 vertices, got n=" +
                                    std::to_string(n));
    }
    const std::uint64_t limit = std::uint64_t(1) << (64 - n);
    std::uint64_t max_pos = 1;
    for (int i = 0; i < k; ++i) {
        if (max_pos > limit / static_cast<std::uint64_t>(n + 1)) {
            throw std::invalid_argument("oracle state encoding overflows 64 bits for n=" + std::to_string(n) +
                                        ", K=" + std::to_string(k) + "; reduce the instance or searcher count");
        }
        max_pos *= static_cast<std::uint64_t>(n + 1);
    }
}

std::uint64_t encode_positions(std::span<const Vertex> positions, int n) {
    std::uint64_t idx = 0;
    for (std::size_t k = positions.size(); k-- > 0;) {
        idx = idx * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(positions[k]);
    }
    return idx;
}

std::vector<Vertex> decode_positions(std::uint64_t idx, int n, int k) {
    std::vector<Vertex> p(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        p[static_cast<std::size_t>(i)] = static_cast<Vertex>(idx % static_cast<std::uint64_t>(n + 1));
        idx /= static_cast<std::uint64_t>(n + 1);
    }
    return p;
}

/// Enumerates tuples over per-slot choice lists in lexicographic order.
template <typename Fn>
void for_each_tuple(const std::vector<std::vector<Vertex>>& choices, Fn&& fn) {
    const std::size_t k = choices.size();
    std::vector<std::size_t> idx(k, 0);
    std::vector<Vertex> tuple(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) tuple[i] = choices[i][idx[i]];
        fn(tuple);
        std::size_t pos = k;
        while (pos-- > 0) {
            if (++idx[pos] < choices[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
    }
}

}  // namespace

Bitset evolve_dirty(const Graph& g, const BoolMatrix& b, const Bitset& dirty,
                    std::span<const Vertex> new_positions, int s) {
    const int n = g.vertex_count();
    const int steps = effective_speed(s, n);
    return row_star(dirty, contamination_flow(g, b, new_positions), steps);
}

FullState evolve(const Graph& g, const BoolMatrix& b, const FullState& state, const Control& control, int s) {
    const int n = g.vertex_count();
    if (control.empty()) {
        throw std::invalid_argument("control needs at least one searcher position");
    }
    for (std::size_t k = 0; k < control.size(); ++k) {
        if (control[k] < 1 || control[k] > n) {
            throw std::invalid_argument("searcher " + std::to_string(k + 1) + ": target vertex " +
                                        std::to_string(control[k]) + " out of range 1.." + std::to_string(n));
        }
    }
    if (state.placed()) {
        const auto& pos = *state.positions;
        if (pos.size() != control.size()) {
            throw std::invalid_argument("control has " + std::to_string(control.size()) +
                                        " entries but the state has " + std::to_string(pos.size()) +
                                        " searchers");
        }
        for (std::size_t k = 0; k < control.size(); ++k) {
            if (control[k] != pos[k] && !g.has_edge(pos[k], control[k])) {
                throw std::invalid_argument("searcher " + std::to_string(k + 1) + ": illegal move " +
                                            std::to_string(pos[k]) + " -> " + std::to_string(control[k]) +
                                            " (no such edge)");
            }
        }
    }
    FullState next;
    next.positions = control;
    next.dirty = evolve_dirty(g, b, state.dirty, control, s);
    return next;
}

std::uint64_t state_space_size(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("state_space_size needs n >= 1 and K >= 1");
    }
    unsigned __int128 total = 1;
    for (int i = 0; i < k; ++i) {
        total *= static_cast<unsigned>(n);
        if (total > UINT64_MAX) throw std::overflow_error("state space size exceeds 64 bits");
    }
    if (n >= 64) throw std::overflow_error("state space size exceeds 64 bits");
    total <<= n;
    total += 1;
    if (total > UINT64_MAX) throw std::overflow_error("state space size exceeds 64 bits");
    return static_cast<std::uint64_t>(total);
}

NaiveSchedule solve_naive(const Graph& g, const BoolMatrix& b, const NaiveOptions& opt) {
    const int n = g.vertex_count();
    const int k = opt.searchers;
    if (k < 1) {
        throw std::invalid_argument("searcher count must be >= 1, got " + std::to_string(k));
    }
    if (static_cast<int>(b.rows()) != n || static_cast<int>(b.cols()) != n) {
        throw std::invalid_argument("visibility matrix shape does not match the graph");
    }
    check_encoding(n, k);
    const int speed = effective_speed(opt.speed, n);
    const std::uint64_t dirty_all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    const std::uint64_t start_key = dirty_all;  // position digits all zero

    const auto deadline = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(opt.timeout_seconds > 0 ? opt.timeout_seconds : 0));

    // Sorted closed neighborhoods, reused for every expansion.
    std::vector<std::vector<Vertex>> closed(static_cast<std::size_t>(n));
    std::vector<Vertex> all_vertices(static_cast<std::size_t>(n));
    for (Vertex v = 1; v <= n; ++v) {
        all_vertices[static_cast<std::size_t>(v - 1)] = v;
        auto& c = closed[static_cast<std::size_t>(v - 1)];
        c = g.neighbors(v);
        c.push_back(v);
        std::sort(c.begin(), c.end());
    }

    std::unordered_map<std::uint64_t, long long> dist;
    std::unordered_map<std::uint64_t, std::uint64_t> parent;
    using Entry = std::pair<long long, std::uint64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

    dist.emplace(start_key, 0);
    queue.emplace(0, start_key);

    NaiveSchedule result;
    result.status = SolveStatus::Unclearable;
    std::uint64_t expanded = 0;
    std::uint64_t goal_key = 0;
    bool found = false;
    bool capped = false;

    std::vector<std::vector<Vertex>> choices(static_cast<std::size_t>(k));
    while (!queue.empty()) {
        auto [d, key] = queue.top();
        queue.pop();
        auto it = dist.find(key);
        if (it == dist.end() || it->second != d) continue;  // stale entry
        ++expanded;
        if (opt.timeout_seconds > 0 && std::chrono::steady_clock::now() > deadline) {
            result.status = SolveStatus::Timeout;
            result.states_expanded = expanded;
            return result;
        }

        const std::uint64_t dirty_mask = key & dirty_all;
        const std::uint64_t pos_idx = key >> n;
        if (dirty_mask == 0) {
            found = true;
            goal_key = key;
            break;
        }

        const Bitset dirty_bits = bits_from_mask(dirty_mask, n);
        const long long step_cost = pos_idx == 0 ? 0 : 1;
        if (pos_idx == 0) {
            for (auto& c : choices) c = all_vertices;
        } else {
            const auto pos = decode_positions(pos_idx, n, k);
            for (int i = 0; i < k; ++i) {
                choices[static_cast<std::size_t>(i)] = closed[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)] - 1)];
            }
        }
        bool overflowed = false;
        for_each_tuple(choices, [&](const std::vector<Vertex>& control) {
            if (overflowed) return;
            const Bitset next_dirty = evolve_dirty(g, b, dirty_bits, control, speed);
            const std::uint64_t next_key = (encode_positions(control, n) << n) | mask_from_bits(next_dirty);
            const long long nd = d + step_cost;
            auto found_it = dist.find(next_key);
            if (found_it == dist.end()) {
                if (dist.size() >= opt.max_states) {
                    overflowed = true;
                    return;
                }
                dist.emplace(next_key, nd);
                parent.emplace(next_key, key);
                queue.emplace(nd, next_key);
            } else if (nd < found_it->second) {
                found_it->second = nd;
                parent[next_key] = key;
                queue.emplace(nd, next_key);
            }
        });
        if (overflowed) {
            capped = true;
            break;
        }
    }

    result.states_expanded = expanded;
    if (capped) {
        result.status = SolveStatus::StateLimit;
        return result;
    }
    if (!found) {
        result.status = SolveStatus::Unclearable;
        return result;
    }

    std::vector<std::uint64_t> chain{goal_key};
    while (chain.back() != start_key) {
        chain.push_back(parent.at(chain.back()));
    }
    std::reverse(chain.begin(), chain.end());

    result.status = SolveStatus::Cleared;
    result.cost = dist.at(goal_key);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        auto pos = decode_positions(chain[i] >> n, n, k);
        if (i == 1) {
            result.placement = std::move(pos);
        } else {
            result.moves.push_back(std::move(pos));
        }
    }
    return result;
}

ReplayResult replay_naive(const Graph& g, const BoolMatrix& b, const Control& placement,
                          const std::vector<Control>& moves, int s) {
    FullState state;
    state.dirty = Bitset(static_cast<std::size_t>(g.vertex_count()));
    state.dirty.set_all();
    ReplayResult out;
    state = evolve(g, b, state, placement, s);
    out.dirty_steps.push_back(state.dirty);
    for (const auto& m : moves) {
        state = evolve(g, b, state, m, s);
        out.dirty_steps.push_back(state.dirty);
    }
    out.cleared = state.dirty.none();
    return out;
}

}  // namespace sweep
