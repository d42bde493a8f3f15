#pragma once

#include "sweep/bool_matrix.hpp"
#include "sweep/graph.hpp"

#include <string>

namespace sweep {

/// How the visibility matrix is obtained.
enum class VisibilityModel {
    Range,    ///< everything within graph distance L of the observer
    Line,     ///< straight, monotone edge paths in the plane embedding
    Explicit  ///< user-supplied 0/1 matrix
};

struct VisibilitySpec {
    VisibilityModel model = VisibilityModel::Range;
    int range = 1;                 ///< L, for the range model (L >= 0)
    std::string matrix_path;       ///< for the explicit model
    double epsilon = 1e-9;         ///< collinearity tolerance, line model

    static VisibilitySpec range_spec(int L) {
        VisibilitySpec s;
        s.model = VisibilityModel::Range;
        s.range = L;
        return s;
    }
};

/// Builds the n-by-n visibility matrix for `g` under `spec`. Entry
/// (x-1, y-1) is 1 when an observer at x sees y. Every vertex sees
/// itself; symmetry is not required for explicit matrices.
BoolMatrix build_visibility(const Graph& g, const VisibilitySpec& spec);

/// Range-L visibility: b_xy = 1 iff dist(x, y) <= L. L = 0 gives the
/// identity matrix.
BoolMatrix range_visibility(const Graph& g, int L);

/// Line-of-sight visibility for an embedded graph: x sees y when some
/// edge path from x to y runs along the straight segment through x and
/// y — every intermediate vertex collinear (within `eps`, scaled by the
/// squared segment length) and the path strictly monotone along it.
BoolMatrix line_visibility(const Graph& g, double eps);

/// Parses a whitespace-separated 0/1 matrix, one row per line. Blank
/// lines are ignored. Throws std::runtime_error naming the offending
/// line on ragged rows or entries other than 0/1.
BoolMatrix parse_matrix_text(const std::string& text);

/// Loads an explicit visibility matrix for an n-vertex graph and
/// validates its shape and unit diagonal.
BoolMatrix load_visibility_matrix(const std::string& path, int n);

/// Parses the command-line form: "range:<L>", "matrix:<path>", or
/// "line[:<eps>]".
VisibilitySpec parse_visibility_arg(const std::string& arg);

}  // namespace sweep
