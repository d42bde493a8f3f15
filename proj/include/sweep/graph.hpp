#pragma once

#include "sweep/bitset.hpp"
#include "sweep/bool_matrix.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace sweep {

/// Vertex ids are 1-based throughout; 0 is reserved for the
/// not-yet-placed searcher marker.
using Vertex = int;
inline constexpr Vertex kNotPlaced = 0;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Set of vertices of a fixed universe 1..n. Thin 1-based wrapper over
/// Bitset (vertex v lives at bit v-1, matching matrix row/column v-1).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : bits_(static_cast<std::size_t>(n)) {}
    explicit VertexSet(Bitset bits) : bits_(std::move(bits)) {}

    static VertexSet all(int n) {
        VertexSet s(n);
        s.bits_.set_all();
        return s;
    }

    int universe_size() const { return static_cast<int>(bits_.size()); }
    bool contains(Vertex v) const { return bits_.test(static_cast<std::size_t>(v - 1)); }
    void insert(Vertex v) { bits_.set(static_cast<std::size_t>(v - 1)); }
    void erase(Vertex v) { bits_.reset(static_cast<std::size_t>(v - 1)); }

    int count() const { return static_cast<int>(bits_.count()); }
    bool empty() const { return bits_.none(); }

    VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
    VertexSet& subtract(const VertexSet& o) { bits_.subtract(o.bits_); return *this; }
    bool intersects(const VertexSet& o) const { return bits_.intersects(o.bits_); }

    bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        bits_.for_each_set([&](std::size_t i) { fn(static_cast<Vertex>(i + 1)); });
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    const Bitset& bits() const { return bits_; }
    Bitset& bits() { return bits_; }

private:
    Bitset bits_;
};

/// Undirected simple graph on vertices 1..n with an optional 2-D
/// embedding. Immutable after construction.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph(int n, std::vector<Edge> edges, std::optional<std::vector<Point2>> coords = std::nullopt);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_coords() const { return coords_.has_value(); }
    const std::vector<Point2>& coords() const { return *coords_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v - 1)]; }
    const VertexSet& neighbor_set(Vertex v) const { return nbr_sets_[static_cast<std::size_t>(v - 1)]; }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(Vertex u, Vertex v) const { return neighbor_set(u).contains(v); }

    /// Symmetric 0/1 adjacency with zero diagonal; entry (u-1, v-1).
    const BoolMatrix& adjacency() const { return adjacency_; }

    bool is_connected() const;

    void check_vertex(Vertex v, const char* what) const;

private:
    int n_;
    std::vector<Edge> edges_;                 // normalized (min,max), sorted, unique
    std::vector<std::vector<Vertex>> adj_;    // sorted ascending
    std::vector<VertexSet> nbr_sets_;
    BoolMatrix adjacency_;
    std::optional<std::vector<Point2>> coords_;
};

/// Partitions `keep` into the connected components of the subgraph
/// induced by it. Components are ordered by their smallest vertex and
/// each component's vertex list is ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g, const VertexSet& keep);

/// Adjacency of the graph restricted to vertices invisible from every
/// given position (per visibility matrix `b`), with a self-loop on each
/// invisible vertex so that an isolated occupant can stay put.
/// Rows and columns of visible vertices are zero.
BoolMatrix modified_adjacency(const Graph& g, const BoolMatrix& b, std::span<const Vertex> positions);

/// One-step moves the target can make without being observed by
/// searchers at `positions`: along an edge into an invisible vertex, or
/// staying on an invisible vertex. Unlike modified_adjacency, rows of
/// visible vertices are kept where the destination is invisible — a
/// target on a vertex that has just come into view may still slip into
/// an adjacent unseen region before it is observed.
BoolMatrix contamination_flow(const Graph& g, const BoolMatrix& b, std::span<const Vertex> positions);

/// Union of the visibility rows of `positions`.
VertexSet visible_from(const BoolMatrix& b, std::span<const Vertex> positions);

}  // namespace sweep
