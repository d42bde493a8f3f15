#pragma once

// Shared helpers for the test binaries: fixture paths and a few graphs small
// enough to reason about by hand.

#include <string>
#include <vector>

#include "sweep/generators.hpp"
#include "sweep/graph.hpp"
#include "sweep/visibility.hpp"

#ifndef SWEEP_FIXTURE_DIR
#define SWEEP_FIXTURE_DIR "tests/fixtures"
#endif

inline std::string fixture(const std::string& name) {
    return std::string(SWEEP_FIXTURE_DIR) + "/" + name;
}

// Balanced binary tree on 7 vertices: 1 at the root, children 2/3, leaves 4..7.
inline sweep::Graph tree7() {
    return sweep::Graph(7, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
}

inline std::vector<int> to_vector(const sweep::VertexSet& s) { return s.to_vector(); }

inline sweep::VertexSet make_set(int n, const std::vector<int>& vs) {
    sweep::VertexSet s(n);
    for (int v : vs) s.insert(v);
    return s;
}
