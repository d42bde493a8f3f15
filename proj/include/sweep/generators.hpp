#pragma once

#include "sweep/graph.hpp"
#include "sweep/rng.hpp"

#include <cstdint>

namespace sweep {

/// Path 1 - 2 - ... - n with coordinates (i-1, 0).
Graph gen_path(int n);

/// Complete binary tree in level order: root 1, children of i are 2i
/// and 2i+1, 2^(depth+1)-1 vertices. Depth 0 is a single vertex.
Graph gen_complete_binary_tree(int depth);

/// rows x cols grid, row-major ids (vertex = (r-1)*cols + c), 4-neighbor
/// edges, coordinates (c-1, r-1).
Graph gen_grid(int rows, int cols);

/// Random tree: the root always gets two children; every other vertex,
/// when created at depth < maxDepth, draws its child count from
/// {0,1,2} uniformly (one draw per vertex, at creation); vertices at
/// maxDepth stay leaves. Vertices are numbered in creation order,
/// breadth-first, so the seed fully determines the edge list.
Graph gen_random_tree(int max_depth, Rng& rng);
Graph gen_random_tree(int max_depth, std::uint64_t seed);

/// Connectivity-guarded random edge deletion on the full grid: edges
/// are visited in ascending (min,max) order; an edge whose removal
/// would disconnect the graph is kept outright (no draw consumed),
/// otherwise it is removed with probability p. Always connected;
/// p=1 leaves a spanning tree.
Graph gen_deleted_grid(int rows, int cols, double p, Rng& rng);
Graph gen_deleted_grid(int rows, int cols, double p, std::uint64_t seed);

/// Random connected graph on n vertices: each pair becomes an edge
/// with probability edge_prob, then any remaining components are tied
/// together by linking their smallest vertices (no extra draws), so
/// the result is connected without rejection loops.
Graph gen_random_connected(int n, double edge_prob, Rng& rng);

}  // namespace sweep
