#include "mmc/model_io.hpp"

#include "mmc/error.hpp"
#include "mmc/poly_io.hpp"

#include "json.hpp"

namespace mmc {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw MmError(ErrorCode::ParseError, e.what());
    }
}

RatVec rat_vector(const json& j) {
    if (!j.is_array()) throw MmError(ErrorCode::ParseError, "expected a list of rationals");
    RatVec v;
    for (const auto& x : j) v.push_back(x.is_string() ? parse_rat(x.get<std::string>()) : parse_rat(x.dump()));
    return v;
}

}  // namespace

LinesFile parse_lines_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("vars") || !j.contains("lines"))
        throw MmError(ErrorCode::ParseError, "lines JSON needs \"vars\" and \"lines\"");
    LinesFile f;
    for (const auto& v : j["vars"]) f.vars.push_back(v.get<std::string>());
    const size_t n = f.vars.size();
    for (const auto& l : j["lines"]) {
        LineInput li;
        if (l.contains("prime")) {
            for (const auto& form : l["prime"]) {
                MPoly p = parse_poly(form.get<std::string>(), f.vars);
                if (!p.is_zero() && (p.degree() != 1 || !p.is_homogeneous()))
                    throw MmError(ErrorCode::ParseError, "line prime entries must be linear forms");
                RatVec c(n);
                for (const auto& [m, coef] : p.terms()) {
                    for (size_t i = 0; i < n; ++i)
                        if (m[i] == 1) c[i] = coef;
                }
                li.prime.push_back(c);
            }
        } else if (l.contains("points")) {
            for (const auto& pt : l["points"]) li.points.push_back(rat_vector(pt));
        } else {
            throw MmError(ErrorCode::ParseError, "each line needs \"prime\" or \"points\"");
        }
        f.lines.push_back(std::move(li));
    }
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) f.labels.push_back(l.get<std::string>());
        if (f.labels.size() != f.lines.size()) throw MmError(ErrorCode::ParseError, "one label per line expected");
    } else {
        for (size_t i = 0; i < f.lines.size(); ++i) f.labels.push_back(std::to_string(i));
    }
    return f;
}

LinesFile load_lines_file(const std::string& path) { return parse_lines_json(read_text_file(path)); }

GraphCurveModel model_from_lines(const LinesFile& lines, const std::optional<GraphFile>& expected) {
    std::optional<TrivalentGraph> g;
    std::optional<std::vector<std::vector<size_t>>> faces;
    if (expected) {
        g = expected->graph;
        faces = expected->faces;
    }
    GraphCurveModel m = ingest_model(lines.lines, lines.vars.size(), g, faces);
    m.var_names = lines.vars;
    return m;
}

GraphFile graph_file_of(const GraphCurveModel& m, const std::vector<std::string>& labels) {
    GraphFile f{m.graph, std::nullopt, labels};
    if (f.labels.empty()) {
        for (size_t v = 0; v < m.graph.vertex_count(); ++v) f.labels.push_back(std::to_string(v));
    }
    return f;
}

}  // namespace mmc
