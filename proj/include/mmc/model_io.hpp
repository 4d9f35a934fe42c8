#pragma once

#include "mmc/curve_model.hpp"
#include "mmc/graph_io.hpp"

#include <string>
#include <vector>

namespace mmc {

/// {"vars": [...], "labels": [...], "lines": [{"prime": ["b+d", ...]} | {"points": [[...],[...]]}]}
struct LinesFile {
    std::vector<std::string> vars;
    std::vector<std::string> labels;
    std::vector<LineInput> lines;
};

LinesFile parse_lines_json(const std::string& text);
LinesFile load_lines_file(const std::string& path);

/// Ingests a lines file; `expected` fixes the edge order when given.
GraphCurveModel model_from_lines(const LinesFile& lines, const std::optional<GraphFile>& expected = std::nullopt);

/// Vertex labels of the model (from a lines or graph file) as a GraphFile view.
GraphFile graph_file_of(const GraphCurveModel& m, const std::vector<std::string>& labels);

}  // namespace mmc
