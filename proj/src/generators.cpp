#include "sweep/generators.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sweep {

namespace {

/// Connectivity of an n-vertex graph given as an edge list, with one
/// edge optionally ignored. Small inputs only; used by the deleted-grid
/// guard.
bool connected_without(int n, const std::vector<Graph::Edge>& edges, std::size_t skip) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i == skip) continue;
        adj[static_cast<std::size_t>(edges[i].first - 1)].push_back(edges[i].second - 1);
        adj[static_cast<std::size_t>(edges[i].second - 1)].push_back(edges[i].first - 1);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

}  // namespace

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1, got " + std::to_string(n));
    std::vector<Graph::Edge> edges;
    std::vector<Point2> coords;
    edges.reserve(static_cast<std::size_t>(n - 1));
    coords.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < n; ++i) coords.push_back({static_cast<double>(i), 0.0});
    return Graph(n, std::move(edges), std::move(coords));
}

Graph gen_complete_binary_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("tree depth must be >= 0, got " + std::to_string(depth));
    if (depth > 30) throw std::invalid_argument("tree depth " + std::to_string(depth) + " is out of scale");
    const int n = (1 << (depth + 1)) - 1;
    std::vector<Graph::Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 2; i <= n; ++i) edges.emplace_back(i / 2, i);
    return Graph(n, std::move(edges));
}

Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("grid needs rows, cols >= 1, got " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    const int n = rows * cols;
    std::vector<Graph::Edge> edges;
    std::vector<Point2> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            const int v = (r - 1) * cols + c;
            if (c < cols) edges.emplace_back(v, v + 1);
            if (r < rows) edges.emplace_back(v, v + cols);
            coords.push_back({static_cast<double>(c - 1), static_cast<double>(r - 1)});
        }
    }
    return Graph(n, std::move(edges), std::move(coords));
}

Graph gen_random_tree(int max_depth, Rng& rng) {
    if (max_depth < 1) {
        throw std::invalid_argument("random tree needs maxDepth >= 1, got " + std::to_string(max_depth));
    }
    std::vector<Graph::Edge> edges;
    // (vertex, depth) in creation order; children appended breadth-first.
    std::deque<std::pair<int, int>> frontier{{1, 0}};
    int next_id = 1;
    while (!frontier.empty()) {
        auto [v, depth] = frontier.front();
        frontier.pop_front();
        int children = 0;
        if (v == 1) {
            children = 2;  // the seed shape is always the depth-1 tree
        } else if (depth < max_depth) {
            children = static_cast<int>(rng.next_below(3));
        }
        for (int c = 0; c < children; ++c) {
            ++next_id;
            edges.emplace_back(v, next_id);
            frontier.emplace_back(next_id, depth + 1);
        }
    }
    return Graph(next_id, std::move(edges));
}

Graph gen_random_tree(int max_depth, std::uint64_t seed) {
    Rng rng(seed);
    return gen_random_tree(max_depth, rng);
}

Graph gen_deleted_grid(int rows, int cols, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("deletion probability must lie in [0,1], got " + std::to_string(p));
    }
    Graph full = gen_grid(rows, cols);
    std::vector<Graph::Edge> edges = full.edges();  // already in ascending (min,max) order
    const int n = rows * cols;
    std::size_t i = 0;
    while (i < edges.size()) {
        if (connected_without(n, edges, i) && rng.next_double() < p) {
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    std::vector<Point2> coords = full.coords();
    return Graph(n, std::move(edges), std::move(coords));
}

Graph gen_deleted_grid(int rows, int cols, double p, std::uint64_t seed) {
    Rng rng(seed);
    return gen_deleted_grid(rows, cols, p, rng);
}

Graph gen_random_connected(int n, double edge_prob, Rng& rng) {
    if (n < 1) throw std::invalid_argument("random graph needs n >= 1");
    if (edge_prob < 0.0 || edge_prob > 1.0) {
        throw std::invalid_argument("edge probability must lie in [0,1]");
    }
    std::vector<Graph::Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) {
            if (rng.next_double() < edge_prob) edges.emplace_back(u, v);
        }
    }
    // Tie any leftover components together deterministically.
    Graph draft(n, edges);
    auto comps = connected_components(draft, VertexSet::all(n));
    for (std::size_t c = 1; c < comps.size(); ++c) {
        edges.emplace_back(comps[0].front(), comps[c].front());
    }
    return Graph(n, std::move(edges));
}

}  // namespace sweep
