#include "mmc/graph_io.hpp"

#include "mmc/error.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace mmc {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MmError(ErrorCode::InvalidArgument, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MmError(ErrorCode::ParseError, e.what());
    }
}

size_t as_index(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw MmError(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
    return j.get<size_t>();
}

std::vector<std::vector<size_t>> faces_from(const json& j) {
    if (!j.is_array()) throw MmError(ErrorCode::ParseError, "faces must be a list of vertex lists");
    std::vector<std::vector<size_t>> faces;
    for (const auto& f : j) {
        if (!f.is_array()) throw MmError(ErrorCode::ParseError, "each face must be a list of vertices");
        std::vector<size_t> cyc;
        for (const auto& v : f) cyc.push_back(as_index(v, "face vertex"));
        faces.push_back(std::move(cyc));
    }
    return faces;
}

}  // namespace

GraphFile parse_graph_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw MmError(ErrorCode::ParseError, "graph JSON needs \"vertices\" and \"edges\"");
    size_t n = as_index(j["vertices"], "vertices");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw MmError(ErrorCode::ParseError, "each edge must be [u, v]");
        edges.push_back({as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint")});
    }
    GraphFile file{TrivalentGraph(n, std::move(edges)), std::nullopt, {}};
    if (j.contains("faces")) file.faces = faces_from(j["faces"]);
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) file.labels.push_back(l.is_string() ? l.get<std::string>() : l.dump());
        if (file.labels.size() != n) throw MmError(ErrorCode::ParseError, "labels must have one entry per vertex");
    } else {
        for (size_t v = 0; v < n; ++v) file.labels.push_back(std::to_string(v));
    }
    return file;
}

GraphFile load_graph_file(const std::string& path) { return parse_graph_json(read_text_file(path)); }

std::string graph_to_json(const GraphFile& file) {
    json j;
    j["vertices"] = file.graph.vertex_count();
    json edges = json::array();
    for (const auto& e : file.graph.edges()) edges.push_back({e.a, e.b});
    j["edges"] = edges;
    if (file.faces) j["faces"] = *file.faces;
    bool default_labels = true;
    for (size_t v = 0; v < file.labels.size(); ++v) default_labels &= file.labels[v] == std::to_string(v);
    if (!default_labels) j["labels"] = file.labels;
    return j.dump();
}

std::vector<std::vector<size_t>> parse_faces_json(const std::string& text) { return faces_from(parse_json(text)); }

std::string edge_label(const GraphFile& file, size_t edge_id) {
    const Edge& e = file.graph.edge(edge_id);
    return file.labels.at(e.a) + file.labels.at(e.b);
}

std::optional<size_t> edge_by_label(const GraphFile& file, const std::string& label) {
    for (size_t id = 0; id < file.graph.edge_count(); ++id) {
        const Edge& e = file.graph.edge(id);
        if (file.labels[e.a] + file.labels[e.b] == label || file.labels[e.b] + file.labels[e.a] == label) return id;
    }
    return std::nullopt;
}

}  // namespace mmc
