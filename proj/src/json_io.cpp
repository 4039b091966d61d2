#include "disting/json_io.hpp"

#include <sstream>

#include "disting/errors.hpp"
#include "disting/graph_io.hpp"
#include "disting/permutation.hpp"

namespace disting {

using nlohmann::json;

json certificate_to_json(const labeling_certificate& cert) {
  json j;
  j["graph"] = format_edge_list(cert.g);
  j["kind"] = cert.is_edge_labeling() ? "edge" : "vertex";
  j["k"] = cert.label_count();
  if (cert.is_edge_labeling()) {
    j["labels"] = std::get<edge_labeling>(cert.labels).labels;
  } else {
    j["labels"] = std::get<vertex_labeling>(cert.labels).labels;
  }
  j["proper"] = cert.proper;
  j["distinguishing"] = cert.distinguishing;
  if (cert.witness.has_value()) {
    j["witness"] = cert.witness->images;
  } else {
    j["witness"] = nullptr;
  }
  if (cert.note.has_value()) j["note"] = *cert.note;
  return j;
}

labeling_certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("certificate JSON must be an object");
  for (const char* key : {"graph", "kind", "k", "labels", "proper", "distinguishing", "witness"}) {
    if (!j.contains(key)) {
      throw parse_error(std::string("certificate JSON is missing \"") + key + "\"");
    }
  }
  labeling_certificate cert;
  cert.g = parse_edge_list(j.at("graph").get<std::string>());
  const std::string kind = j.at("kind").get<std::string>();
  const int k = j.at("k").get<int>();
  const std::vector<int> labels = j.at("labels").get<std::vector<int>>();
  if (kind == "edge") {
    edge_labeling l;
    l.k = k;
    l.labels = labels;
    validate_labeling(cert.g, l);  // rejects wrong edge count / out-of-range labels
    cert.labels = std::move(l);
  } else if (kind == "vertex") {
    vertex_labeling l;
    l.k = k;
    l.labels = labels;
    validate_labeling(cert.g, l);
    cert.labels = std::move(l);
  } else {
    throw parse_error("certificate kind must be \"edge\" or \"vertex\"");
  }
  cert.proper = j.at("proper").get<bool>();
  cert.distinguishing = j.at("distinguishing").get<bool>();
  if (!j.at("witness").is_null()) {
    vertex_permutation w(j.at("witness").get<std::vector<int>>());
    if (w.size() != cert.g.vertex_count()) {
      throw parse_error("certificate witness has the wrong length");
    }
    cert.witness = std::move(w);
  }
  if (j.contains("note") && !j.at("note").is_null()) {
    cert.note = j.at("note").get<std::string>();
  }
  return cert;
}

json result_to_json(const parameter_result& r, const std::string& graph_source) {
  json j;
  j["parameter"] = to_string(r.param);
  j["graph"] = graph_source;
  j["lower"] = r.lo;
  j["upper"] = r.hi;
  j["exact"] = r.exact();
  j["method"] = to_string(r.how);
  j["certificate"] = r.certificate.has_value() ? certificate_to_json(*r.certificate) : json();
  return j;
}

namespace {

json cell_to_json(const report_cell& cell) {
  json j;
  j["parameter"] = to_string(cell.param);
  j["expected_lower"] = cell.expected.lo;
  j["expected_upper"] = cell.expected.hi;
  j["rule"] = cell.expected.rule;
  j["flagged"] = cell.expected.flagged;
  j["printed"] = cell.expected.printed.has_value() ? json(*cell.expected.printed) : json();
  j["computed_lower"] = cell.computed_lo;
  j["computed_upper"] = cell.computed_hi;
  j["method"] = to_string(cell.computed_how);
  j["agree"] = cell.agree;
  if (cell.note.has_value()) j["note"] = *cell.note;
  return j;
}

}  // namespace

json table_report_to_json(const reproduction_report& report) {
  json rows = json::array();
  for (const report_row& row : report.rows) {
    json r;
    r["row"] = row.row_id;
    r["instance"] = row.instance;
    r["family"] = to_string(row.spec);
    r["cells"] =
        json::array({cell_to_json(row.chi_prime), cell_to_json(row.d_prime),
                     cell_to_json(row.chi_prime_d)});
    r["wall_ms"] = row.wall_ms;
    rows.push_back(std::move(r));
  }
  json j;
  j["rows"] = std::move(rows);
  j["cells"] = report.cell_count;
  j["agreeing"] = report.agreeing_cells;
  j["flagged"] = report.flagged_cells;
  j["disagreeing"] = report.disagreeing_cells;
  j["total_wall_ms"] = report.total_wall_ms;
  return j;
}

json crosscheck_report_to_json(const crosscheck_report& report) {
  json batteries = json::array();
  for (const battery_outcome& battery : report.batteries) {
    json b;
    b["name"] = battery.name;
    b["checks"] = battery.checks;
    json violations = json::array();
    for (const check_violation& v : battery.violations) {
      violations.push_back(
          json{{"battery", v.battery}, {"instance", v.instance}, {"detail", v.detail}});
    }
    b["violations"] = std::move(violations);
    batteries.push_back(std::move(b));
  }
  json j;
  j["seed"] = report.seed;
  j["count"] = report.count;
  j["max_vertices"] = report.max_vertices;
  j["samples"] = report.samples;
  j["discarded_disconnected"] = report.discarded_disconnected;
  j["batteries"] = std::move(batteries);
  j["total_checks"] = report.total_checks;
  j["total_violations"] = report.total_violations;
  return j;
}

namespace {

bool type_matches(const std::string& type, const json& value) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
  if (type == "number") return value.is_number();
  if (type == "boolean") return value.is_boolean();
  if (type == "null") return value.is_null();
  return false;
}

void validate_node(const json& schema, const json& value, const std::string& path,
                   std::vector<std::string>& out) {
  if (schema.contains("oneOf")) {
    int matches = 0;
    for (const json& option : schema.at("oneOf")) {
      std::vector<std::string> local;
      validate_node(option, value, path, local);
      if (local.empty()) ++matches;
    }
    if (matches == 0) out.push_back(path + ": matches no oneOf alternative");
    return;
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const json& option : schema.at("enum")) {
      if (option == value) found = true;
    }
    if (!found) out.push_back(path + ": value not in enum");
    return;
  }
  if (schema.contains("type")) {
    const std::string type = schema.at("type").get<std::string>();
    if (!type_matches(type, value)) {
      out.push_back(path + ": expected type " + type);
      return;
    }
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const json& key : schema.at("required")) {
        if (!value.contains(key.get<std::string>())) {
          out.push_back(path + ": missing required key \"" + key.get<std::string>() + "\"");
        }
      }
    }
    const json* properties = schema.contains("properties") ? &schema.at("properties") : nullptr;
    const bool closed = schema.contains("additionalProperties") &&
                        schema.at("additionalProperties").is_boolean() &&
                        !schema.at("additionalProperties").get<bool>();
    for (const auto& [key, child] : value.items()) {
      if (properties != nullptr && properties->contains(key)) {
        validate_node(properties->at(key), child, path + "/" + key, out);
      } else if (closed) {
        out.push_back(path + ": unexpected key \"" + key + "\"");
      }
    }
  } else if (value.is_array() && schema.contains("items")) {
    int index = 0;
    for (const json& child : value) {
      std::ostringstream sub;
      sub << path << "/" << index;
      validate_node(schema.at("items"), child, sub.str(), out);
      ++index;
    }
  }
}

}  // namespace

std::vector<std::string> schema_violations(const json& schema, const json& value) {
  std::vector<std::string> out;
  validate_node(schema, value, "#", out);
  return out;
}

}  // namespace disting
