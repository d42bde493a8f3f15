#include "sweep/visibility.hpp"

#include "sweep/graph_json.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sweep {

BoolMatrix range_visibility(const Graph& g, int L) {
    if (L < 0) {
        throw std::invalid_argument("visibility range must be >= 0, got " + std::to_string(L));
    }
    const int n = g.vertex_count();
    BoolMatrix b(n, n);
    std::vector<int> dist(static_cast<std::size_t>(n));
    for (Vertex x = 1; x <= n; ++x) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<Vertex> queue{x};
        dist[static_cast<std::size_t>(x - 1)] = 0;
        b.set(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x - 1));
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            int dv = dist[static_cast<std::size_t>(v - 1)];
            if (dv == L) continue;
            for (Vertex w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w - 1)] < 0) {
                    dist[static_cast<std::size_t>(w - 1)] = dv + 1;
                    b.set(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(w - 1));
                    queue.push_back(w);
                }
            }
        }
    }
    return b;
}

BoolMatrix line_visibility(const Graph& g, double eps) {
    if (!g.has_coords()) {
        throw std::invalid_argument("line visibility needs vertex coordinates (\"coords\" in the graph file)");
    }
    if (eps < 0.0) {
        throw std::invalid_argument("line visibility tolerance must be >= 0");
    }
    const int n = g.vertex_count();
    const auto& pts = g.coords();
    BoolMatrix b(n, n);
    // Scratch: projection of each vertex onto the current sight line,
    // or NaN when the vertex is off the line.
    std::vector<double> proj(static_cast<std::size_t>(n));
    std::vector<char> on_line(static_cast<std::size_t>(n));
    std::vector<char> reached(static_cast<std::size_t>(n));

    for (Vertex x = 1; x <= n; ++x) {
        b.set(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(x - 1));
        const Point2 a = pts[static_cast<std::size_t>(x - 1)];
        for (Vertex y = 1; y <= n; ++y) {
            if (y == x) continue;
            const Point2 c = pts[static_cast<std::size_t>(y - 1)];
            const double dx = c.x - a.x;
            const double dy = c.y - a.y;
            const double len2 = dx * dx + dy * dy;
            if (len2 == 0.0) continue;  // coincident points: no direction to look along
            const double tol = eps * len2;
            for (Vertex v = 1; v <= n; ++v) {
                const Point2 p = pts[static_cast<std::size_t>(v - 1)];
                const double cross = dx * (p.y - a.y) - dy * (p.x - a.x);
                on_line[static_cast<std::size_t>(v - 1)] = std::fabs(cross) <= tol ? 1 : 0;
                proj[static_cast<std::size_t>(v - 1)] = dx * (p.x - a.x) + dy * (p.y - a.y);
            }
            const double target = proj[static_cast<std::size_t>(y - 1)];
            // Walk along edges between collinear vertices, projection
            // strictly increasing; the sight line is unbroken iff y is
            // reachable this way.
            std::fill(reached.begin(), reached.end(), 0);
            reached[static_cast<std::size_t>(x - 1)] = 1;
            std::vector<Vertex> stack{x};
            bool seen = false;
            while (!stack.empty() && !seen) {
                Vertex v = stack.back();
                stack.pop_back();
                const double tv = proj[static_cast<std::size_t>(v - 1)];
                for (Vertex w : g.neighbors(v)) {
                    const std::size_t wi = static_cast<std::size_t>(w - 1);
                    if (reached[wi] || !on_line[wi]) continue;
                    if (proj[wi] <= tv || proj[wi] > target + tol) continue;
                    if (w == y) {
                        seen = true;
                        break;
                    }
                    reached[wi] = 1;
                    stack.push_back(w);
                }
            }
            if (seen) {
                b.set(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1));
            }
        }
    }
    return b;
}

BoolMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<char>> rows;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::istringstream toks(line);
        std::string tok;
        std::vector<char> row;
        while (toks >> tok) {
            if (tok == "0") {
                row.push_back(0);
            } else if (tok == "1") {
                row.push_back(1);
            } else {
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": matrix entries must be 0 or 1, got \"" + tok + "\"");
            }
        }
        if (row.empty()) continue;  // blank line
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(rows.front().size()) + " entries, got " +
                                     std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::runtime_error("matrix file contains no rows");
    }
    BoolMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c]) m.set(r, c);
        }
    }
    return m;
}

BoolMatrix load_visibility_matrix(const std::string& path, int n) {
    BoolMatrix m(1, 1);
    try {
        m = parse_matrix_text(read_text_file(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    if (static_cast<int>(m.rows()) != n || static_cast<int>(m.cols()) != n) {
        throw std::runtime_error(path + ": visibility matrix is " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + " but the graph has " + std::to_string(n) +
                                 " vertices");
    }
    if (!m.has_unit_diagonal()) {
        throw std::runtime_error(path + ": every vertex must see itself (unit diagonal required)");
    }
    return m;
}

BoolMatrix build_visibility(const Graph& g, const VisibilitySpec& spec) {
    switch (spec.model) {
        case VisibilityModel::Range:
            return range_visibility(g, spec.range);
        case VisibilityModel::Line:
            return line_visibility(g, spec.epsilon);
        case VisibilityModel::Explicit:
            return load_visibility_matrix(spec.matrix_path, g.vertex_count());
    }
    throw std::logic_error("unknown visibility model");
}

VisibilitySpec parse_visibility_arg(const std::string& arg) {
    VisibilitySpec spec;
    const auto colon = arg.find(':');
    const std::string head = arg.substr(0, colon);
    const std::string rest = colon == std::string::npos ? std::string() : arg.substr(colon + 1);
    if (head == "range") {
        spec.model = VisibilityModel::Range;
        try {
            std::size_t used = 0;
            spec.range = std::stoi(rest, &used);
            if (used != rest.size() || rest.empty()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error("bad visibility \"" + arg + "\": expected range:<L> with integer L >= 0");
        }
        if (spec.range < 0) {
            throw std::runtime_error("bad visibility \"" + arg + "\": range must be >= 0");
        }
    } else if (head == "matrix") {
        if (rest.empty()) {
            throw std::runtime_error("bad visibility \"" + arg + "\": expected matrix:<path>");
        }
        spec.model = VisibilityModel::Explicit;
        spec.matrix_path = rest;
    } else if (head == "line") {
        spec.model = VisibilityModel::Line;
        if (colon != std::string::npos) {
            try {
                std::size_t used = 0;
                spec.epsilon = std::stod(rest, &used);
                if (used != rest.size() || rest.empty()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::runtime_error("bad visibility \"" + arg + "\": expected line or line:<eps>");
            }
            if (spec.epsilon < 0.0) {
                throw std::runtime_error("bad visibility \"" + arg + "\": tolerance must be >= 0");
            }
        }
    } else {
        throw std::runtime_error("bad visibility \"" + arg + "\": expected range:<L>, matrix:<path>, or line[:<eps>]");
    }
    return spec;
}

}  // namespace sweep
