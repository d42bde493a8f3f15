#include "sweep/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sweep {

Graph::Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Point2>> coords)
    : n_(n), adjacency_(std::max(n, 1), std::max(n, 1)), coords_(std::move(coords)) {
    if (n < 1) {
        throw std::invalid_argument("graph needs at least one vertex, got n=" + std::to_string(n));
    }
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_) {
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range 1.." + std::to_string(n_));
        }
        if (u == v) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u) + " is not allowed");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    if (coords_ && static_cast<int>(coords_->size()) != n_) {
        throw std::invalid_argument("coords size " + std::to_string(coords_->size()) +
                                    " does not match vertex count " + std::to_string(n_));
    }

    adj_.assign(static_cast<std::size_t>(n_), {});
    nbr_sets_.assign(static_cast<std::size_t>(n_), VertexSet(n_));
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u - 1)].push_back(v);
        adj_[static_cast<std::size_t>(v - 1)].push_back(u);
        nbr_sets_[static_cast<std::size_t>(u - 1)].insert(v);
        nbr_sets_[static_cast<std::size_t>(v - 1)].insert(u);
        adjacency_.set(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
        adjacency_.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1));
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::check_vertex(Vertex v, const char* what) const {
    if (v < 1 || v > n_) {
        throw std::invalid_argument(std::string(what) + " " + std::to_string(v) +
                                    " out of range 1.." + std::to_string(n_));
    }
}

bool Graph::is_connected() const {
    auto comps = connected_components(*this, VertexSet::all(n_));
    return comps.size() == 1;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& keep) {
    std::vector<std::vector<Vertex>> comps;
    VertexSet seen(g.vertex_count());
    std::vector<Vertex> stack;
    keep.for_each([&](Vertex start) {
        if (seen.contains(start)) return;
        std::vector<Vertex> comp;
        stack.push_back(start);
        seen.insert(start);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (keep.contains(w) && !seen.contains(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    });
    // for_each visits starts ascending, so components already come out
    // ordered by smallest vertex.
    return comps;
}

VertexSet visible_from(const BoolMatrix& b, std::span<const Vertex> positions) {
    VertexSet vis(static_cast<int>(b.rows()));
    for (Vertex p : positions) {
        if (p == kNotPlaced) continue;
        vis.bits() |= b.row(static_cast<std::size_t>(p - 1));
    }
    return vis;
}

BoolMatrix modified_adjacency(const Graph& g, const BoolMatrix& b, std::span<const Vertex> positions) {
    const int n = g.vertex_count();
    VertexSet vis = visible_from(b, positions);
    BoolMatrix m(n, n);
    for (const auto& [u, v] : g.edges()) {
        if (!vis.contains(u) && !vis.contains(v)) {
            m.set(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
            m.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1));
        }
    }
    for (Vertex x = 1; x <= n; ++x) {
        if (!vis.contains(x)) {
            m.set(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x - 1));
        }
    }
    return m;
}

BoolMatrix contamination_flow(const Graph& g, const BoolMatrix& b, std::span<const Vertex> positions) {
    const int n = g.vertex_count();
    VertexSet vis = visible_from(b, positions);
    BoolMatrix m(n, n);
    for (const auto& [u, v] : g.edges()) {
        if (!vis.contains(v)) m.set(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
        if (!vis.contains(u)) m.set(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1));
    }
    for (Vertex x = 1; x <= n; ++x) {
        if (!vis.contains(x)) {
            m.set(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x - 1));
        }
    }
    return m;
}

}  // namespace sweep
