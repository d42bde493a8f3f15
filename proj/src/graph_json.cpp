#include "sweep/graph_json.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sweep {

using nlohmann::json;
using nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    out << text;
}

Graph parse_graph_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("graph JSON parse error: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::runtime_error("graph JSON must be an object with \"n\" and \"edges\"");
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::runtime_error("graph JSON needs an integer field \"n\"");
    }
    const int n = j["n"].get<int>();
    if (!j.contains("edges") || !j["edges"].is_array()) {
        throw std::runtime_error("graph JSON needs an array field \"edges\"");
    }

    std::vector<Graph::Edge> edges;
    edges.reserve(j["edges"].size());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw std::runtime_error("each edge must be a pair of integer vertex ids, got " + e.dump());
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }

    std::optional<std::vector<Point2>> coords;
    if (j.contains("coords") && !j["coords"].is_null()) {
        if (!j["coords"].is_array()) {
            throw std::runtime_error("\"coords\" must be an array of [x, y] pairs");
        }
        std::vector<Point2> pts;
        pts.reserve(j["coords"].size());
        for (const auto& c : j["coords"]) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
                throw std::runtime_error("each coordinate must be an [x, y] number pair, got " + c.dump());
            }
            pts.push_back({c[0].get<double>(), c[1].get<double>()});
        }
        coords = std::move(pts);
    }

    try {
        return Graph(n, std::move(edges), std::move(coords));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("invalid graph: ") + e.what());
    }
}

Graph load_graph(const std::string& path) {
    try {
        return parse_graph_json(read_text_file(path));
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

std::string graph_to_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["edges"] = ordered_json::array();
    for (const auto& [u, v] : g.edges()) {
        j["edges"].push_back({u, v});
    }
    if (g.has_coords()) {
        j["coords"] = ordered_json::array();
        for (const auto& p : g.coords()) {
            j["coords"].push_back({p.x, p.y});
        }
    }
    return j.dump() + "\n";
}

}  // namespace sweep
