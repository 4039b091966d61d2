#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "disting/automorphisms.hpp"
#include "disting/constructions.hpp"
#include "disting/crosscheck.hpp"
#include "disting/errors.hpp"
#include "disting/families.hpp"
#include "disting/graph_io.hpp"
#include "disting/json_io.hpp"
#include "disting/labeling.hpp"
#include "disting/search.hpp"
#include "disting/table.hpp"
#include "disting/table_report.hpp"

namespace {

using disting::graph;
using nlohmann::json;

// Exit codes are a total function of the result kind:
//   0 - exact value / certificate verified / all cells and properties agree
//   2 - bounds only / certificate refuted / disagreement or violation found
//   1 - usage, parse, or precondition error
constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_disagree = 2;

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw disting::parameter_error("cannot open output file: " + path);
  out << text;
  if (!out) throw disting::parameter_error("cannot write output file: " + path);
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw disting::parse_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw disting::parse_error(path + ": " + e.what());
  }
  return j;
}

std::string describe_interval(const disting::parameter_result& r) {
  if (r.exact()) return std::to_string(r.value());
  return "[" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + "]";
}

int run_compute(const std::string& graph_source, const std::string& param_name,
                std::optional<double> budget_secs, const std::string& out_path) {
  const graph g = disting::graph_from_source(graph_source);
  const disting::parameter param = disting::parse_parameter(param_name);
  disting::search_options opts;
  opts.budget_secs = budget_secs;
  const disting::parameter_result result = disting::compute_parameter(g, param, opts);

  std::cout << disting::to_string(param) << "(" << graph_source
            << ") = " << describe_interval(result) << " (" << disting::to_string(result.how);
  if (!result.exact()) std::cout << "; budget exhausted, bounds are sound";
  std::cout << ")\n";
  if (result.certificate.has_value()) {
    const disting::labeling_certificate& cert = *result.certificate;
    std::cout << "certificate: " << (cert.proper ? "proper " : "")
              << (cert.distinguishing ? "distinguishing " : "")
              << (cert.is_edge_labeling() ? "edge" : "vertex") << " labeling with "
              << cert.label_count() << " labels\n";
  }
  if (!out_path.empty()) {
    write_json_file(out_path, disting::result_to_json(result, graph_source));
    std::cout << "wrote " << out_path << "\n";
  }
  return result.exact() ? exit_ok : exit_disagree;
}

int run_construct(const std::string& name, const std::string& family_shorthand,
                  const std::string& out_path) {
  const disting::family_spec spec = disting::parse_family_spec(family_shorthand);
  const disting::labeling_certificate cert = disting::run_construction(name, spec);
  const json j = disting::certificate_to_json(cert);
  if (!out_path.empty()) {
    write_json_file(out_path, j);
    std::cout << "wrote " << out_path << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  std::cout << "construction " << name << " on " << family_shorthand << ": "
            << (cert.proper ? "proper" : "NOT proper") << ", "
            << (cert.distinguishing ? "distinguishing" : "NOT distinguishing") << ", k = "
            << cert.label_count() << "\n";
  if (cert.note.has_value()) std::cout << "note: " << *cert.note << "\n";
  if (!(cert.proper && cert.distinguishing)) {
    std::cerr << "verification failed: the constructed labeling is not a proper"
                 " distinguishing labeling (see certificate)\n";
    return exit_disagree;
  }
  return exit_ok;
}

int run_verify(const std::string& graph_source, const std::string& cert_path) {
  const graph g = disting::graph_from_source(graph_source);
  const disting::labeling_certificate cert =
      disting::certificate_from_json(read_json_file(cert_path));
  if (!(cert.g == g)) {
    throw disting::parameter_error("certificate was issued for a different graph");
  }

  bool proper_now = false;
  std::optional<disting::vertex_permutation> preserving;
  if (cert.is_edge_labeling()) {
    const auto& l = std::get<disting::edge_labeling>(cert.labels);
    proper_now = disting::is_proper(g, l);
    preserving = disting::find_preserving_automorphism(g, l);
  } else {
    const auto& l = std::get<disting::vertex_labeling>(cert.labels);
    proper_now = disting::is_proper(g, l);
    preserving = disting::find_preserving_automorphism(g, l);
  }
  const bool distinguishing_now = !preserving.has_value();

  bool verified = proper_now == cert.proper && distinguishing_now == cert.distinguishing;
  std::string complaint;
  if (proper_now != cert.proper) {
    complaint = std::string("properness recomputes to ") + (proper_now ? "true" : "false");
  } else if (distinguishing_now != cert.distinguishing) {
    complaint =
        std::string("distinguishing recomputes to ") + (distinguishing_now ? "true" : "false");
  } else if (cert.witness.has_value()) {
    // Flags match; a claimed witness must still be a genuine preserving
    // automorphism or the certificate is internally inconsistent.
    const disting::vertex_permutation& w = *cert.witness;
    bool witness_ok = !w.is_identity() && w.is_automorphism_of(g);
    if (witness_ok) {
      const disting::edge_permutation action = disting::edge_action(g, w);
      if (cert.is_edge_labeling()) {
        const auto& l = std::get<disting::edge_labeling>(cert.labels);
        for (int i = 0; i < g.edge_count() && witness_ok; ++i) {
          if (l.labels[action[i]] != l.labels[i]) witness_ok = false;
        }
      } else {
        const auto& l = std::get<disting::vertex_labeling>(cert.labels);
        for (int v = 0; v < g.vertex_count() && witness_ok; ++v) {
          if (l.labels[w[v]] != l.labels[v]) witness_ok = false;
        }
      }
    }
    if (!witness_ok) {
      verified = false;
      complaint = "the claimed witness automorphism does not re-verify";
    }
  }

  if (verified) {
    std::cout << "verified: proper=" << (proper_now ? "true" : "false")
              << " distinguishing=" << (distinguishing_now ? "true" : "false") << "\n";
    return exit_ok;
  }
  std::cout << "refuted: " << complaint << "\n";
  if (preserving.has_value()) {
    std::cout << "preserving automorphism:";
    for (int image : preserving->images) std::cout << " " << image;
    std::cout << "\n";
  }
  return exit_disagree;
}

std::vector<disting::family_spec> load_instances(const std::string& rows_path) {
  std::string path = rows_path;
  if (path.empty()) {
#ifdef DISTING_SHARE_DIR
    path = std::string(DISTING_SHARE_DIR) + "/table1_rows.json";
#endif
  }
  if (!path.empty()) {
    std::ifstream probe(path);
    if (probe) {
      const json j = read_json_file(path);
      if (!j.contains("instances") || !j.at("instances").is_array()) {
        throw disting::parse_error(path + ": expected an \"instances\" array");
      }
      std::vector<disting::family_spec> out;
      for (const json& item : j.at("instances")) {
        out.push_back(disting::parse_family_spec(item.get<std::string>()));
      }
      return out;
    }
    if (!rows_path.empty()) {
      throw disting::parse_error("cannot open rows file: " + rows_path);
    }
  }
  return disting::default_table_instances();
}

int run_table(double budget_secs, const std::string& rows_path, const std::string& out_path) {
  const std::vector<disting::family_spec> instances = load_instances(rows_path);
  disting::search_options opts;
  opts.budget_secs = budget_secs;
  const disting::reproduction_report report = disting::run_table_report(instances, opts);
  std::cout << disting::render_table_report(report);
  if (!out_path.empty()) {
    write_json_file(out_path, disting::table_report_to_json(report));
    std::cout << "wrote " << out_path << "\n";
  }
  return report.disagreeing_cells == 0 ? exit_ok : exit_disagree;
}

int run_crosscheck_cmd(unsigned int seed, int count, int max_vertices,
                       const std::string& out_path) {
  disting::crosscheck_options opts;
  opts.seed = seed;
  opts.count = count;
  opts.max_vertices = max_vertices;
  const disting::crosscheck_report report = disting::run_crosscheck(opts);
  std::cout << disting::render_crosscheck_report(report);
  if (!out_path.empty()) {
    write_json_file(out_path, disting::crosscheck_report_to_json(report));
    std::cout << "wrote " << out_path << "\n";
  }
  return report.total_violations == 0 ? exit_ok : exit_disagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "disting: exact engines, certified constructions and reproduction reports for"
      " edge/vertex symmetry-breaking chromatic parameters"};
  app.require_subcommand(1);

  std::string graph_source;
  std::string param_name;
  std::string out_path;
  std::string construction_name;
  std::string cert_path;
  std::string rows_path;
  double budget_secs = 0.0;
  double table_budget_secs = 120.0;
  unsigned int seed = 1;
  int count = 50;
  int max_vertices = 7;

  CLI::App* compute = app.add_subcommand(
      "compute", "Compute a parameter exactly, or to sound bounds under a budget");
  compute->add_option("--graph", graph_source, "family shorthand (e.g. cycle:6) or edge-list file")
      ->required();
  compute->add_option("--param", param_name,
                      "one of: chi-prime, chi, d, d-prime, chi-d, chi-prime-d")
      ->required();
  compute->add_option("--budget-secs", budget_secs, "wall-clock budget; omit for unlimited");
  compute->add_option("--out", out_path, "write the result (with certificate) as JSON");

  CLI::App* construct =
      app.add_subcommand("construct", "Build and verify a closed-form labeling");
  construct
      ->add_option("name", construction_name,
                   "bipartite-circulant, one-factorization, book-labeling, even-cycle, even-path")
      ->required();
  construct->add_option("--graph", graph_source, "family shorthand the construction applies to")
      ->required();
  construct->add_option("--out", out_path, "write the certificate JSON here");

  CLI::App* verify =
      app.add_subcommand("verify", "Re-check a certificate against a graph from scratch");
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  verify->add_option("--graph", graph_source, "family shorthand or edge-list file")->required();

  CLI::App* table = app.add_subcommand(
      "table", "Reproduce the bundled reference table by search and report agreement");
  table->add_option("--budget-secs", table_budget_secs,
                    "per-engine-call budget (default 120); exhaustion degrades cells to bounds");
  table->add_option("--rows", rows_path, "instance list JSON (default: bundled table1_rows.json)");
  table->add_option("--out", out_path, "write the report as JSON");

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "Run the seeded property battery on random and enumerated graphs");
  crosscheck->add_option("--seed", seed, "sampler seed (default 1)");
  crosscheck->add_option("--count", count, "number of sampled graphs (0 = empty report)");
  crosscheck->add_option("--max-vertices", max_vertices, "sample size cap (default 7)");
  crosscheck->add_option("--out", out_path, "write the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      std::optional<double> budget;
      if (compute->count("--budget-secs") > 0) budget = budget_secs;
      return run_compute(graph_source, param_name, budget, out_path);
    }
    if (construct->parsed()) {
      return run_construct(construction_name, graph_source, out_path);
    }
    if (verify->parsed()) {
      return run_verify(graph_source, cert_path);
    }
    if (table->parsed()) {
      return run_table(table_budget_secs, rows_path, out_path);
    }
    if (crosscheck->parsed()) {
      return run_crosscheck_cmd(seed, count, max_vertices, out_path);
    }
  } catch (const disting::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
