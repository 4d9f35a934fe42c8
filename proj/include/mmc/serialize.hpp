#pragma once

#include "mmc/certify.hpp"
#include "mmc/graph_io.hpp"

#include <string>
#include <vector>

namespace mmc {

/// Model JSON: graph (with vertex labels), variable names, pairing bits, nodes as rational
/// strings and generators in the polynomial text format.
std::string model_to_json(const GraphCurveModel& m, const std::vector<std::string>& labels);

struct ModelFile {
    GraphCurveModel model;
    std::vector<std::string> labels;
};

ModelFile model_from_json(const std::string& text);

/// Adapted basis JSON: PGL vectors, per-edge vectors and their sign data.
std::string basis_to_json(const GraphCurveModel& m, const AdaptedBasis& b, const std::vector<std::string>& labels);
/// Restores a basis written by basis_to_json; node functionals and local data are recomputed.
AdaptedBasis basis_from_json(const GraphCurveModel& m, const std::string& text);

std::string deformation_to_json(const GraphCurveModel& m, const MMDeformation& d, const std::vector<std::string>& labels);
MMDeformation deformation_from_json(const GraphCurveModel& m, const std::string& text);

/// Macaulay2 text: ring, ideal and (when given) one tuple of generator images per line.
std::string model_to_m2(const GraphCurveModel& m);
std::string basis_to_m2(const GraphCurveModel& m, const AdaptedBasis& b, const std::vector<std::string>& labels);

/// Rational vector as strings and back.
std::vector<std::string> rat_strings(const RatVec& v);

}  // namespace mmc
