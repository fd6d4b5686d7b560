#pragma once

#include "frolicher/metric.hpp"

#include <json.hpp>
#include <optional>
#include <string>

namespace frolicher {

// Model file layout:
//   {"name": "...", "n": 3,
//    "partial": [{"i":3, "j":1, "k":2, "re":-1, "im":0}, ...],
//    "dbar":    [{"i":2, "j":1, "k":1, "re":"1/2"}, ...],
//    "metric":  [[[re, im], ...], ...]}          (optional)
// Indices are 1-based.  Numbers are JSON integers, JSON floats or "p/q"
// strings; integers and fractions are kept exact.
struct ModelFile {
    InvariantComplexStructure structure;
    std::optional<HermitianMetric> metric;
};

ModelFile parse_model(const nlohmann::json &doc);
ModelFile load_model(const std::string &path);

// Accepts either a bare matrix [[[re,im],...],...] or {"metric": matrix}.
HermitianMetric parse_metric(const nlohmann::json &doc, const std::string &where = "metric");
HermitianMetric load_metric(const std::string &path);

nlohmann::json structure_to_json(const InvariantComplexStructure &s);
nlohmann::json metric_to_json(const HermitianMetric &g);

}  // namespace frolicher
