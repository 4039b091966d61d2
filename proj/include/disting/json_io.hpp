#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "disting/crosscheck.hpp"
#include "disting/labeling.hpp"
#include "disting/search.hpp"
#include "disting/table_report.hpp"

namespace disting {

// Certificate JSON shape (stable interchange format):
//   {
//     "graph": "p 4 4\ne 0 1\n...",   edge-list text
//     "kind": "edge" | "vertex",
//     "k": 3,
//     "labels": [1, 2, 3, ...],        canonical edge order / vertex order
//     "proper": true,
//     "distinguishing": true,
//     "witness": null | [images]       preserving automorphism when not
//   }                                  distinguishing; optional "note"
nlohmann::json certificate_to_json(const labeling_certificate& cert);
labeling_certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json result_to_json(const parameter_result& r, const std::string& graph_source);
nlohmann::json table_report_to_json(const reproduction_report& report);
nlohmann::json crosscheck_report_to_json(const crosscheck_report& report);

// Structural validator for the subset of JSON Schema the shipped schemas
// use: "type", "enum", "required", "properties", "additionalProperties"
// (boolean), "items", and "oneOf".  Returns human-readable violations with
// JSON-pointer-style paths; empty means valid.
std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& value);

}  // namespace disting
