#include "gcx/graph_io.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace gcx {

using nlohmann::json;

RotationGraph read_graph_json(std::istream& in) {
    json j;
    in >> j;
    if (!j.contains("valence") || !j.contains("rotation"))
        throw std::invalid_argument("graph json: missing valence/rotation");
    int valence = j.at("valence").get<int>();
    if (valence != 3 && valence != 4)
        throw std::invalid_argument("graph json: valence must be 3 or 4");
    std::vector<std::vector<int>> rot =
        j.at("rotation").get<std::vector<std::vector<int>>>();
    std::vector<std::string> labels;
    if (j.contains("vertices")) labels = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& r : rot)
        if (static_cast<int>(r.size()) != valence)
            throw std::invalid_argument("graph json: vertex degree != valence");
    RotationGraph g(std::move(rot), std::move(labels));
    if (!g.is_connected()) throw std::invalid_argument("graph json: not connected");
    return g;
}

RotationGraph read_graph_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph_json(in);
}

void write_graph_json(const RotationGraph& g, std::ostream& out) {
    json j;
    int valence = g.num_vertices() ? g.degree(0) : 3;
    for (int v = 0; v < g.num_vertices(); ++v) valence = std::max(valence, g.degree(v));
    j["valence"] = valence;
    std::vector<std::string> names = g.labels();
    if (names.empty())
        for (int v = 0; v < g.num_vertices(); ++v) names.push_back("v" + std::to_string(v));
    j["vertices"] = names;
    std::vector<std::vector<int>> rot;
    for (int v = 0; v < g.num_vertices(); ++v) rot.push_back(g.rotation(v));
    j["rotation"] = rot;
    out << j.dump(1) << "\n";
}

void write_graph_dot(const RotationGraph& g, std::ostream& out) {
    out << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v) out << "  n" << v << ";\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            Dart d{v, i};
            Dart r = g.theta(d);
            if (std::pair{d.v, d.i} < std::pair{r.v, r.i})
                out << "  n" << v << " -- n" << r.v << ";\n";
        }
    out << "}\n";
}

void write_edge_csv(const RotationGraph& g, std::ostream& out) {
    out << "source,target\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            Dart d{v, i};
            Dart r = g.theta(d);
            if (std::pair{d.v, d.i} < std::pair{r.v, r.i})
                out << v << "," << r.v << "\n";
        }
    out << std::flush;
}

}  // namespace gcx
