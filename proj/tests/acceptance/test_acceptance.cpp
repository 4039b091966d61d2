// Acceptance gate: one line per criterion, [PASS] or [FAIL]; the process
// exit code is the number of failed criteria, so a zero exit means the whole
// gate is green.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "disting/automorphisms.hpp"
#include "disting/bounds.hpp"
#include "disting/constructions.hpp"
#include "disting/crosscheck.hpp"
#include "disting/errors.hpp"
#include "disting/families.hpp"
#include "disting/formulas.hpp"
#include "disting/graph.hpp"
#include "disting/json_io.hpp"
#include "disting/labeling.hpp"
#include "disting/products.hpp"
#include "disting/random_graphs.hpp"
#include "disting/search.hpp"
#include "disting/table.hpp"

using namespace disting;
using nlohmann::json;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct gate {
  int failures = 0;

  void criterion(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
};

struct cli_outcome {
  int exit_code = -1;
  std::string output;
};

cli_outcome run_cli(const std::string& args) {
  const std::string command =
      std::string(DISTING_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  cli_outcome out;
  if (pipe == nullptr) return out;
  char buffer[512];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
    out.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

struct cell_values {
  int lower = -1;
  int upper = -1;
  bool flagged = false;
  std::optional<int> printed;
  std::string method;
  bool agree = false;
};

// family shorthand -> parameter name -> cell
using report_index = std::map<std::string, std::map<std::string, cell_values>>;

report_index index_report(const json& report) {
  report_index out;
  for (const json& row : report.at("rows")) {
    const std::string family = row.at("family").get<std::string>();
    for (const json& cell : row.at("cells")) {
      cell_values v;
      v.lower = cell.at("computed_lower").get<int>();
      v.upper = cell.at("computed_upper").get<int>();
      v.flagged = cell.at("flagged").get<bool>();
      if (!cell.at("printed").is_null()) {
        v.printed = cell.at("printed").get<int>();
      }
      v.method = cell.at("method").get<std::string>();
      v.agree = cell.at("agree").get<bool>();
      out[family][cell.at("parameter").get<std::string>()] = v;
    }
  }
  return out;
}

bool exact_cell(const report_index& idx, const std::string& family,
                const std::string& param, int expected, std::string& complaint) {
  auto row_it = idx.find(family);
  if (row_it == idx.end()) {
    complaint += family + " missing; ";
    return false;
  }
  auto cell_it = row_it->second.find(param);
  if (cell_it == row_it->second.end()) {
    complaint += family + " lacks " + param + "; ";
    return false;
  }
  const cell_values& v = cell_it->second;
  if (v.lower != expected || v.upper != expected || !v.agree) {
    complaint += family + " " + param + " = [" + std::to_string(v.lower) +
                 "," + std::to_string(v.upper) + "] wanted " +
                 std::to_string(expected) + "; ";
    return false;
  }
  return true;
}

}  // namespace

int run_gate(gate& g) {
  const std::string report_path = "acceptance_table_report.json";

  // ---- Reference-table reproduction through the command line ----
  json table;
  {
    const auto start = std::chrono::steady_clock::now();
    cli_outcome run = run_cli("table --out " + report_path);
    const double elapsed = seconds_since(start);
    bool ok = run.exit_code == 0 && elapsed < 600.0;
    std::ifstream in(report_path);
    if (in) {
      in >> table;
    } else {
      ok = false;
    }
    std::ostringstream detail;
    detail << "exit " << run.exit_code << ", "
           << (table.is_object() ? table.at("cells").get<int>() : 0)
           << " cells in " << elapsed << "s";
    g.criterion("table reproduction: command exits clean within budget", ok,
                detail.str());
  }
  std::remove(report_path.c_str());
  const report_index idx = index_report(table);

  {
    // Proper distinguishing index column, all 27 instances.  The reference
    // prints 3 for B_2, but no proper distinguishing 3-labeling of B_2
    // exists; the corrected cell must carry the printed value.
    const std::vector<std::pair<std::string, int>> expected = {
        {"complete:3", 3}, {"complete:5", 5},  {"complete:4", 5},
        {"complete:6", 5}, {"complete:8", 7},  {"complete:7", 7},
        {"path:4", 3},     {"path:6", 3},      {"path:5", 2},
        {"path:7", 2},     {"cycle:4", 4},     {"cycle:5", 3},
        {"cycle:6", 4},    {"cycle:8", 3},     {"cycle:10", 3},
        {"cycle:7", 3},    {"cycle:9", 3},     {"petersen", 4},
        {"bisymtree:2,3", 4}, {"symtree:2,3", 3}, {"kst:3,3", 5},
        {"kst:4,4", 5},    {"kst:4,3", 4},     {"kst:5,2", 5},
        {"friendship:3", 6}, {"book:2", 4},    {"book:3", 4}};
    std::string complaint;
    bool ok = true;
    for (const auto& [family, value] : expected) {
      if (!exact_cell(idx, family, "chi-prime-d", value, complaint)) ok = false;
    }
    const cell_values& b2 = idx.at("book:2").at("chi-prime-d");
    if (!(b2.flagged && b2.printed == 3)) {
      ok = false;
      complaint += "book:2 correction marker missing; ";
    }
    g.criterion("table reproduction: every proper distinguishing index cell",
                ok,
                ok ? "26 printed values confirmed, B_2 corrected 3 -> 4"
                   : complaint);
  }

  {
    // Distinguishing index column by search.
    const std::vector<std::pair<std::string, int>> expected = {
        {"path:4", 2},   {"path:5", 2},   {"path:6", 2},  {"path:7", 2},
        {"complete:3", 3}, {"cycle:4", 3}, {"cycle:5", 3}, {"cycle:6", 2},
        {"cycle:7", 2},  {"cycle:8", 2},  {"cycle:9", 2}, {"cycle:10", 2},
        {"complete:6", 2}, {"complete:7", 2}, {"complete:8", 2},
        {"kst:4,4", 2},  {"kst:3,3", 3},  {"symtree:2,3", 3},
        {"petersen", 2}};
    std::string complaint;
    bool ok = true;
    for (const auto& [family, value] : expected) {
      if (!exact_cell(idx, family, "d-prime", value, complaint)) ok = false;
      const cell_values& v = idx.at(family).at("d-prime");
      if (v.method != "search") {
        ok = false;
        complaint += family + " d-prime via " + v.method + "; ";
      }
    }
    const cell_values& petersen = idx.at("petersen").at("d-prime");
    if (!(petersen.flagged && petersen.printed == 3)) {
      ok = false;
      complaint += "petersen correction marker missing; ";
    }
    g.criterion("table reproduction: distinguishing index cells by search", ok,
                ok ? "all values searched, Petersen corrected 3 -> 2"
                   : complaint);
  }

  {
    // Chromatic index column: the class laws and the odd-cycle correction.
    std::string complaint;
    bool ok = true;
    for (const family_spec& spec : default_table_instances()) {
      const graph instance = make_family(spec);
      const int delta = instance.max_degree();
      const cell_values& v = idx.at(to_string(spec)).at("chi-prime");
      if (v.lower != v.upper || !v.agree) {
        ok = false;
        complaint += to_string(spec) + " inexact; ";
        continue;
      }
      if (v.lower != delta && v.lower != delta + 1) {
        ok = false;
        complaint += to_string(spec) + " violates the degree window; ";
      }
      if (instance.is_bipartite() && v.lower != delta) {
        ok = false;
        complaint += to_string(spec) + " bipartite but class two; ";
      }
    }
    const cell_values& c5 = idx.at("cycle:5").at("chi-prime");
    if (!(c5.lower == 3 && c5.flagged && c5.printed == 2)) {
      ok = false;
      complaint += "cycle:5 correction marker missing; ";
    }
    for (const char* family : {"cycle:7", "cycle:9", "complete:5",
                               "complete:7", "petersen"}) {
      const cell_values& v = idx.at(family).at("chi-prime");
      const graph instance = make_family(parse_family_spec(family));
      if (v.lower != instance.max_degree() + 1) {
        ok = false;
        complaint += std::string(family) + " should be class two; ";
      }
    }
    g.criterion("chromatic index column: class laws hold and C_5 is corrected",
                ok, ok ? "bipartite rows class one, odd rows class two" : complaint);
  }

  {
    // The subdivided star: the unique center is fixed by every automorphism,
    // so the proper distinguishing index collapses to the chromatic index.
    const auto start = std::chrono::steady_clock::now();
    parameter_result edge_side =
        compute_chromatic_distinguishing_index(make_subdivided_star(8));
    const double elapsed = seconds_since(start);
    parameter_result vertex_side =
        compute_chromatic_distinguishing_number(make_subdivided_star(8));
    cli_outcome cli = run_cli("compute --graph substar:8 --param chi-prime-d");
    bool ok = edge_side.exact() && edge_side.value() == 8 &&
              edge_side.how == method::closed_form && elapsed < 30.0 &&
              vertex_side.exact() && vertex_side.value() == 3 &&
              cli.exit_code == 0 &&
              cli.output.find("= 8") != std::string::npos;
    std::ostringstream detail;
    detail << "edge value " << edge_side.lo << " in " << elapsed
           << "s, vertex value " << vertex_side.lo;
    g.criterion("subdivided star: fixed-vertex shortcut settles both sides",
                ok, detail.str());
  }

  {
    // Circulant constructions across the full desk range, plus the minimality
    // probes one label below.
    std::string complaint;
    bool ok = true;
    for (int s = 2; s <= 6; ++s) {
      for (int t = 1; t < s; ++t) {
        labeling_certificate cert = construct_bipartite_labeling(s, t);
        const edge_labeling& l = std::get<edge_labeling>(cert.labels);
        const bool good = cert.label_count() == s && cert.proper &&
                          cert.distinguishing && is_proper(cert.g, l) &&
                          !find_preserving_automorphism(cert.g, l).has_value();
        if (!good) {
          ok = false;
          complaint += "K_{" + std::to_string(s) + "," + std::to_string(t) +
                       "} construction broken; ";
        }
      }
    }
    const std::vector<std::pair<int, int>> minimal = {
        {3, 2}, {4, 2}, {4, 3}, {5, 3}};
    for (const auto& [s, t] : minimal) {
      labeling_probe probe = probe_edge_labeling(
          make_complete_bipartite(s, t), probe_request{s - 1, true, true});
      if (probe.verdict != probe_verdict::unsatisfiable) {
        ok = false;
        complaint += "K_{" + std::to_string(s) + "," + std::to_string(t) +
                     "} not minimal; ";
      }
    }
    g.criterion(
        "complete bipartite constructions verify at k = s and are minimal",
        ok, ok ? "15 pairs constructed, 4 minimality probes" : complaint);
  }

  {
    // Join: the sharp odd-path instance and random sandwich checks.
    graph p3 = make_path(3), p5 = make_path(5);
    parameter_result sharp =
        compute_chromatic_distinguishing_index(join(p3, p5));
    bound_pair sharp_bounds = join_bounds(p3, p5, 3, 2);
    bool ok = sharp.exact() && sharp.value() == 7 && sharp_bounds.lower == 7;
    std::string complaint = ok ? "" : "P_3 + P_5 mismatch; ";

    connected_graph_sampler sampler(424242, 5);
    int tested = 0;
    for (int i = 0; i < 20; ++i) {
      graph a = sampler.next();
      graph b = sampler.next();
      parameter_result da = compute_chromatic_distinguishing_index(a);
      parameter_result db = compute_chromatic_distinguishing_index(b);
      bound_pair bounds = join_bounds(a, b, da.value(), db.value());
      parameter_result joined =
          compute_chromatic_distinguishing_index(join(a, b));
      if (!(joined.exact() && bounds.lower <= joined.value() &&
            joined.value() <= bounds.upper)) {
        ok = false;
        complaint += "pair " + std::to_string(i) + " escapes its bounds; ";
      }
      ++tested;
    }
    g.criterion("join: sharp value 7 at the lower bound and 20 sandwiched pairs",
                ok, ok ? "P_3 + P_5 = 7; " + std::to_string(tested) +
                             " random pairs bracketed"
                       : complaint);
  }

  {
    // Corona of K_8 by K_7: the middle-edge labeling meets the degree lower
    // bound, so the exact value needs no exhaustive search on 64 vertices.
    const auto start = std::chrono::steady_clock::now();
    graph k8 = make_complete(8), k7 = make_complete(7);
    labeling_certificate k8_cert = construct_complete_even_labeling(4);
    parameter_result k7_chi_prime = compute_chromatic_index(k7);
    labeling_certificate big = corona_upper_labeling(
        k8, k7, std::get<edge_labeling>(k8_cert.labels),
        std::get<edge_labeling>(k7_chi_prime.certificate->labels));
    bound_pair bounds = corona_bounds(k8, k7, 7, 7);
    const double elapsed = seconds_since(start);
    const bool ok = big.proper && big.distinguishing &&
                    big.label_count() == 14 &&
                    big.g.vertex_count() == 64 && bounds.lower == 14 &&
                    bounds.upper == 14 && elapsed < 60.0;
    std::ostringstream detail;
    detail << "verified 14-label certificate on 64 vertices in " << elapsed
           << "s, bounds [" << bounds.lower << ", " << bounds.upper << "]";
    g.criterion("corona of K_8 by K_7 settles exactly at 14", ok,
                detail.str());
  }

  {
    // The seeded property battery over sampled and enumerated graphs.
    const auto start = std::chrono::steady_clock::now();
    crosscheck_options opts;
    opts.seed = 1;
    opts.count = 50;
    opts.max_vertices = 7;
    crosscheck_report report = run_crosscheck(opts);
    const double elapsed = seconds_since(start);
    const bool ok = report.total_violations == 0 &&
                    report.samples == 50 && report.total_checks > 1000 &&
                    elapsed < 1800.0;
    std::ostringstream detail;
    detail << report.total_checks << " checks, "
           << report.total_violations << " violations in " << elapsed << "s";
    g.criterion("crosscheck battery: seed 1, 50 samples, zero violations", ok,
                detail.str());
  }

  {
    // Closed-form distinguishing index formulas against plain search.
    std::string complaint;
    bool ok = true;
    for (int p = 1; p <= 5; ++p) {
      for (int q = p; q <= 5; ++q) {
        if (p == 1 && q == 1) {
          bool formula_threw = false, search_threw = false;
          try {
            d_prime_complete_bipartite(1, 1);
          } catch (const parameter_error&) {
            formula_threw = true;
          }
          try {
            compute_distinguishing_index(make_complete_bipartite(1, 1));
          } catch (const parameter_error&) {
            search_threw = true;
          }
          if (!(formula_threw && search_threw)) {
            ok = false;
            complaint += "K_{1,1} should be rejected on both sides; ";
          }
          continue;
        }
        parameter_result formula = d_prime_complete_bipartite(p, q);
        parameter_result searched =
            compute_distinguishing_index(make_complete_bipartite(p, q));
        const bool in_range = formula.lo <= searched.value() &&
                              searched.value() <= formula.hi;
        bool resolved_ok = true;
        if (!formula.exact()) {
          parameter_result resolved = d_prime_complete_bipartite(p, q, true);
          resolved_ok =
              resolved.exact() && resolved.value() == searched.value();
        }
        if (!(searched.exact() && in_range && resolved_ok)) {
          ok = false;
          complaint += "K_{" + std::to_string(p) + "," + std::to_string(q) +
                       "} formula/search split; ";
        }
      }
    }
    for (int n : {2, 3}) {
      if (d_prime_friendship(n).value() !=
          compute_distinguishing_index(make_friendship(n)).value()) {
        ok = false;
        complaint += "friendship F_" + std::to_string(n) + " mismatch; ";
      }
    }
    for (int n : {2, 3, 4}) {
      if (d_prime_star_path(n, 2).value() !=
          compute_distinguishing_index(make_book(n)).value()) {
        ok = false;
        complaint += "book B_" + std::to_string(n) + " mismatch; ";
      }
    }
    if (d_prime_star_path(8, 2).value() != 3) {
      ok = false;
      complaint += "cube exception value; ";
    }
    g.criterion("formulas agree with search on bipartite, friendship, book",
                ok,
                ok ? "15 bipartite pairs, F_2, F_3, B_2..B_4, cube exception"
                   : complaint);
  }

  {
    // Exit codes are a total function of the outcome kind.
    cli_outcome exact = run_cli("compute --graph cycle:6 --param chi-prime");
    cli_outcome bounded = run_cli(
        "compute --graph petersen --param chi-prime-d --budget-secs 0.00001");
    cli_outcome broken = run_cli("compute --graph cycle:abc --param chi");
    cli_outcome refused = run_cli("compute --graph path:2 --param d-prime");
    const bool ok = exact.exit_code == 0 && bounded.exit_code == 2 &&
                    broken.exit_code == 1 && refused.exit_code == 1;
    std::ostringstream detail;
    detail << "exact " << exact.exit_code << ", bounds " << bounded.exit_code
           << ", parse error " << broken.exit_code << ", domain error "
           << refused.exit_code;
    g.criterion("command line exit codes: 0 exact, 2 bounds, 1 error", ok,
                detail.str());
  }

  {
    // Emitted JSON validates against the shipped schemas.
    const std::string share = DISTING_SHARE_DIR;
    auto load = [&share](const std::string& name) {
      std::ifstream in(share + "/schemas/" + name);
      json schema;
      if (in) in >> schema;
      return schema;
    };
    bool ok = true;
    std::string complaint;

    labeling_certificate cert = construct_bipartite_labeling(4, 3);
    if (!schema_violations(load("certificate.schema.json"),
                           certificate_to_json(cert))
             .empty()) {
      ok = false;
      complaint += "certificate schema; ";
    }
    parameter_result r = compute_parameter(make_cycle(6), parameter::d_prime);
    if (!schema_violations(load("result.schema.json"),
                           result_to_json(r, "cycle:6"))
             .empty()) {
      ok = false;
      complaint += "result schema; ";
    }
    if (!schema_violations(load("table_report.schema.json"), table).empty()) {
      ok = false;
      complaint += "table report schema; ";
    }
    crosscheck_options quick;
    quick.count = 2;
    if (!schema_violations(load("crosscheck_report.schema.json"),
                           crosscheck_report_to_json(run_crosscheck(quick)))
             .empty()) {
      ok = false;
      complaint += "crosscheck report schema; ";
    }
    g.criterion("all emitted JSON validates against the shipped schemas", ok,
                ok ? "certificate, result, table report, crosscheck report"
                   : complaint);
  }

  {
    // Crosscheck determinism at the byte level, and the empty run.
    const std::string a = "acceptance_cc_a.json";
    const std::string b = "acceptance_cc_b.json";
    cli_outcome first = run_cli("crosscheck --count 5 --out " + a);
    cli_outcome second = run_cli("crosscheck --count 5 --out " + b);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    cli_outcome none = run_cli("crosscheck --count 0");
    const bool ok = first.exit_code == 0 && second.exit_code == 0 &&
                    !sa.str().empty() && sa.str() == sb.str() &&
                    none.exit_code == 0;
    std::remove(a.c_str());
    std::remove(b.c_str());
    g.criterion("crosscheck runs are byte-identical and the empty run passes",
                ok, ok ? "two seeded runs match, count 0 exits 0" : "");
  }

  return g.failures;
}

int main() {
  gate g;
  try {
    run_gate(g);
  } catch (const std::exception& e) {
    g.criterion("gate completed without an unexpected exception", false,
                e.what());
  }
  std::cout << (g.failures == 0 ? "acceptance gate: all criteria hold"
                                : "acceptance gate: " +
                                      std::to_string(g.failures) +
                                      " criteria failed")
            << "\n";
  return g.failures;
}
