#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "disting/crosscheck.hpp"
#include "disting/errors.hpp"
#include "disting/families.hpp"
#include "disting/graph_io.hpp"
#include "disting/json_io.hpp"
#include "disting/labeling.hpp"
#include "disting/search.hpp"
#include "disting/table.hpp"
#include "disting/table_report.hpp"

using namespace disting;
using nlohmann::json;

namespace {

#ifndef DISTING_CLI_PATH
#error "DISTING_CLI_PATH must point at the command line binary"
#endif
#ifndef DISTING_SHARE_DIR
#error "DISTING_SHARE_DIR must point at the shipped data directory"
#endif

struct cli_outcome {
  int exit_code = -1;
  std::string output;
};

// Runs the installed binary with stderr folded into stdout.
cli_outcome run_cli(const std::string& args) {
  const std::string command =
      std::string(DISTING_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  cli_outcome out;
  char buffer[512];
  while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
    out.output.append(buffer, got);
  }
  const int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

json load_schema(const std::string& name) {
  const std::string path =
      std::string(DISTING_SHARE_DIR) + "/schemas/" + name;
  std::ifstream in(path);
  REQUIRE(in);
  json schema;
  in >> schema;
  return schema;
}

std::string temp_path(const std::string& name) {
  return "harness_test_" + name;
}

}  // namespace

TEST_CASE("certificates round-trip through JSON") {
  labeling_certificate cert =
      verify_labeling(make_cycle(4), edge_labeling{2, {1, 2, 1, 2}});
  REQUIRE(cert.witness.has_value());
  json j = certificate_to_json(cert);
  labeling_certificate back = certificate_from_json(j);
  CHECK(back.g == cert.g);
  CHECK(back.proper == cert.proper);
  CHECK(back.distinguishing == cert.distinguishing);
  CHECK(std::get<edge_labeling>(back.labels).labels ==
        std::get<edge_labeling>(cert.labels).labels);
  REQUIRE(back.witness.has_value());
  CHECK(back.witness->images == cert.witness->images);

  labeling_certificate vertex_cert =
      verify_labeling(make_path(3), vertex_labeling{2, {1, 2, 1}});
  json vj = certificate_to_json(vertex_cert);
  CHECK(vj.at("kind") == "vertex");
  labeling_certificate vertex_back = certificate_from_json(vj);
  CHECK_FALSE(vertex_back.is_edge_labeling());
  CHECK(vertex_back.label_count() == 2);
}

TEST_CASE("malformed certificate JSON is rejected") {
  labeling_certificate cert =
      verify_labeling(make_cycle(4), edge_labeling{4, {1, 2, 3, 4}});
  const json good = certificate_to_json(cert);

  // Structural problems are parse errors ...
  json missing = good;
  missing.erase("labels");
  CHECK_THROWS_AS(certificate_from_json(missing), parse_error);

  json bad_kind = good;
  bad_kind["kind"] = "face";
  CHECK_THROWS_AS(certificate_from_json(bad_kind), parse_error);

  // ... while a well-formed file carrying an invalid labeling fails the
  // labeling validation instead.
  json short_labels = good;
  short_labels["labels"] = {1, 2};
  CHECK_THROWS_AS(certificate_from_json(short_labels), parameter_error);

  json bad_range = good;
  bad_range["labels"] = {1, 2, 3, 9};
  CHECK_THROWS_AS(certificate_from_json(bad_range), parameter_error);

  json bad_witness = good;
  bad_witness["witness"] = {0, 1};
  CHECK_THROWS_AS(certificate_from_json(bad_witness), parse_error);

  CHECK_THROWS_AS(certificate_from_json(json::array()), parse_error);
}

TEST_CASE("emitted JSON validates against the shipped schemas") {
  const json cert_schema = load_schema("certificate.schema.json");
  const json result_schema = load_schema("result.schema.json");
  const json table_schema = load_schema("table_report.schema.json");
  const json crosscheck_schema = load_schema("crosscheck_report.schema.json");

  labeling_certificate cert =
      verify_labeling(make_cycle(4), edge_labeling{2, {1, 2, 1, 2}});
  CHECK(schema_violations(cert_schema, certificate_to_json(cert)).empty());

  parameter_result exact = compute_parameter(make_cycle(5),
                                             parameter::chi_prime);
  CHECK(schema_violations(result_schema, result_to_json(exact, "cycle:5"))
            .empty());

  search_options strangled;
  strangled.budget_secs = 1e-7;
  parameter_result bounded =
      compute_parameter(make_petersen(), parameter::chi_prime_d, strangled);
  REQUIRE_FALSE(bounded.exact());
  CHECK(schema_violations(result_schema, result_to_json(bounded, "petersen"))
            .empty());

  std::vector<family_spec> two_rows = {parse_family_spec("path:4"),
                                       parse_family_spec("cycle:5")};
  reproduction_report table_report = run_table_report(two_rows, {});
  CHECK(schema_violations(table_schema, table_report_to_json(table_report))
            .empty());

  crosscheck_options quick;
  quick.count = 2;
  crosscheck_report cc = run_crosscheck(quick);
  CHECK(schema_violations(crosscheck_schema, crosscheck_report_to_json(cc))
            .empty());

  // The validator genuinely rejects off-schema documents.
  json broken = certificate_to_json(cert);
  broken["kind"] = "face";
  CHECK_FALSE(schema_violations(cert_schema, broken).empty());
  broken = certificate_to_json(cert);
  broken.erase("proper");
  CHECK_FALSE(schema_violations(cert_schema, broken).empty());
  broken = certificate_to_json(cert);
  broken["extra_field"] = 1;
  CHECK_FALSE(schema_violations(cert_schema, broken).empty());
  broken = certificate_to_json(cert);
  broken["k"] = "three";
  CHECK_FALSE(schema_violations(cert_schema, broken).empty());
}

TEST_CASE("table report flags corrections and catches disagreements") {
  std::vector<family_spec> rows = {parse_family_spec("cycle:5"),
                                   parse_family_spec("book:2"),
                                   parse_family_spec("path:4")};
  reproduction_report report = run_table_report(rows, {});
  CHECK(report.cell_count == 9);
  CHECK(report.agreeing_cells == 9);
  CHECK(report.disagreeing_cells == 0);
  CHECK(report.flagged_cells == 2);
  CHECK(report.rows[0].all_agree());

  const std::string rendered = render_table_report(report);
  CHECK(rendered.find("C_5") != std::string::npos);
  CHECK(rendered.find("B_2") != std::string::npos);
  CHECK(rendered.find("reference table prints") != std::string::npos);
  CHECK(rendered.find("0 disagreeing") != std::string::npos);
}

TEST_CASE("crosscheck reports are deterministic for a fixed seed") {
  crosscheck_options opts;
  opts.count = 3;
  crosscheck_report first = run_crosscheck(opts);
  crosscheck_report second = run_crosscheck(opts);
  CHECK(first.total_checks > 0);
  CHECK(first.total_violations == 0);
  CHECK(crosscheck_report_to_json(first) == crosscheck_report_to_json(second));
  CHECK(render_crosscheck_report(first) == render_crosscheck_report(second));

  crosscheck_options other_seed = opts;
  other_seed.seed = 2;
  crosscheck_report third = run_crosscheck(other_seed);
  CHECK(third.total_violations == 0);

  crosscheck_options empty;
  empty.count = 0;
  crosscheck_report none = run_crosscheck(empty);
  CHECK(none.total_checks == 0);
  CHECK(none.samples == 0);
  CHECK(none.batteries.empty());

  crosscheck_options bad;
  bad.count = -1;
  CHECK_THROWS_AS(run_crosscheck(bad), parameter_error);
}

TEST_CASE("cli compute reports values and uses exit codes as a contract") {
  cli_outcome exact = run_cli("compute --graph complete:4 --param chi-prime-d");
  CHECK(exact.exit_code == 0);
  CHECK(exact.output.find("= 5") != std::string::npos);

  cli_outcome bounded = run_cli(
      "compute --graph petersen --param chi-prime-d --budget-secs 0.00001");
  CHECK(bounded.exit_code == 2);
  CHECK(bounded.output.find("budget exhausted") != std::string::npos);

  cli_outcome unknown_family = run_cli("compute --graph heptagon:7 --param d");
  CHECK(unknown_family.exit_code == 1);
  cli_outcome unknown_param = run_cli("compute --graph cycle:5 --param girth");
  CHECK(unknown_param.exit_code == 1);
  cli_outcome domain_error = run_cli("compute --graph path:2 --param d-prime");
  CHECK(domain_error.exit_code == 1);
  cli_outcome no_args = run_cli("compute");
  CHECK(no_args.exit_code != 0);
}

TEST_CASE("cli compute writes schema-valid result files") {
  const std::string out = temp_path("result.json");
  cli_outcome run = run_cli(
      "compute --graph cycle:6 --param chi-prime-d --out " + out);
  CHECK(run.exit_code == 0);
  std::ifstream in(out);
  REQUIRE(in);
  json j;
  in >> j;
  CHECK(j.at("parameter") == "chi-prime-d");
  CHECK(j.at("lower") == 4);
  CHECK(j.at("upper") == 4);
  CHECK(j.at("exact") == true);
  CHECK(schema_violations(load_schema("result.schema.json"), j).empty());
  std::remove(out.c_str());
}

TEST_CASE("cli construct and verify close the loop, and tampering is caught") {
  const std::string cert_path = temp_path("cert.json");
  cli_outcome made = run_cli("construct bipartite-circulant --graph kst:4,3 --out " +
                             cert_path);
  CHECK(made.exit_code == 0);

  cli_outcome ok = run_cli("verify " + cert_path + " --graph kst:4,3");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("verified") != std::string::npos);

  cli_outcome wrong_graph = run_cli("verify " + cert_path + " --graph kst:5,3");
  CHECK(wrong_graph.exit_code == 1);

  // Flip the distinguishing claim; the verifier must refute it and print the
  // preserving automorphism it found.
  {
    std::ifstream in(cert_path);
    REQUIRE(in);
    json j;
    in >> j;
    j["labels"] = std::vector<int>(12, 1);
    j["proper"] = false;
    std::ofstream rewrite(cert_path);
    rewrite << j.dump();
  }
  cli_outcome refuted = run_cli("verify " + cert_path + " --graph kst:4,3");
  CHECK(refuted.exit_code == 2);
  CHECK(refuted.output.find("refuted") != std::string::npos);
  CHECK(refuted.output.find("preserving automorphism") != std::string::npos);
  std::remove(cert_path.c_str());

  // The K_4 one-factorization is proper but not distinguishing: the
  // constructor reports it honestly and the exit code says "not as claimed".
  cli_outcome k4 = run_cli("construct one-factorization --graph complete:4");
  CHECK(k4.exit_code == 2);
  CHECK(k4.output.find("NOT distinguishing") != std::string::npos);
}

TEST_CASE("cli table accepts custom row lists and writes reports") {
  const std::string rows_path = temp_path("rows.json");
  {
    std::ofstream rows(rows_path);
    rows << R"({"instances": ["path:4", "kst:4,3"]})";
  }
  const std::string out = temp_path("table.json");
  cli_outcome run = run_cli("table --rows " + rows_path + " --out " + out);
  CHECK(run.exit_code == 0);
  CHECK(run.output.find("P_4") != std::string::npos);
  CHECK(run.output.find("K_{4,3}") != std::string::npos);

  std::ifstream in(out);
  REQUIRE(in);
  json j;
  in >> j;
  CHECK(j.at("rows").size() == 2);
  CHECK(schema_violations(load_schema("table_report.schema.json"), j).empty());
  std::remove(rows_path.c_str());
  std::remove(out.c_str());

  cli_outcome missing = run_cli("table --rows no_such_rows.json");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("cli crosscheck is reproducible byte for byte") {
  const std::string a = temp_path("cc_a.json");
  const std::string b = temp_path("cc_b.json");
  cli_outcome first = run_cli("crosscheck --count 2 --out " + a);
  CHECK(first.exit_code == 0);
  cli_outcome second = run_cli("crosscheck --count 2 --out " + b);
  CHECK(second.exit_code == 0);

  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());
  std::remove(a.c_str());
  std::remove(b.c_str());

  cli_outcome none = run_cli("crosscheck --count 0");
  CHECK(none.exit_code == 0);
}

TEST_CASE("cli rejects unknown subcommands and offers help") {
  CHECK(run_cli("frobnicate").exit_code != 0);
  cli_outcome help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("compute") != std::string::npos);
  CHECK(help.output.find("crosscheck") != std::string::npos);
}

TEST_CASE("graph sources accept shorthands and edge-list files") {
  CHECK(graph_from_source("cycle:6") == make_cycle(6));
  const std::string path = temp_path("graph.txt");
  {
    std::ofstream out(path);
    out << format_edge_list(make_friendship(2));
  }
  CHECK(graph_from_source(path) == make_friendship(2));

  cli_outcome from_file = run_cli("compute --graph " + path + " --param chi");
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output.find("= 3") != std::string::npos);

  std::remove(path.c_str());
  CHECK_THROWS_AS(graph_from_source("no_such_file.txt"), parse_error);
}
