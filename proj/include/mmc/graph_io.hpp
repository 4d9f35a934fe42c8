#pragma once

#include "mmc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mmc {

/// Graph file: {"vertices": n, "edges": [[u,v],...]} plus optional "faces" and "labels".
struct GraphFile {
    TrivalentGraph graph;
    std::optional<std::vector<std::vector<size_t>>> faces;
    /// Vertex labels (default: decimal vertex ids).
    std::vector<std::string> labels;
};

GraphFile parse_graph_json(const std::string& text);
GraphFile load_graph_file(const std::string& path);
std::string graph_to_json(const GraphFile& file);
/// Faces file: a JSON list of vertex cycles.
std::vector<std::vector<size_t>> parse_faces_json(const std::string& text);

/// Concatenated endpoint labels, e.g. "47".
std::string edge_label(const GraphFile& file, size_t edge_id);
/// Edge id for a label produced by edge_label (either endpoint order).
std::optional<size_t> edge_by_label(const GraphFile& file, const std::string& label);

std::string read_text_file(const std::string& path);

}  // namespace mmc
