#pragma once

#include <string>
#include <vector>

#include "disting/search.hpp"

namespace disting {

struct crosscheck_options {
  unsigned int seed = 1;
  int count = 50;        // sampled connected graphs; 0 skips every battery
  int max_vertices = 7;  // sample size cap; fixed batteries ignore it
  search_options search;
};

struct check_violation {
  std::string battery;
  std::string instance;
  std::string detail;
};

struct battery_outcome {
  std::string name;
  long long checks = 0;
  std::vector<check_violation> violations;
};

// Deterministic function of the options: no timing fields, so two runs with
// the same seed produce byte-identical reports.
struct crosscheck_report {
  unsigned int seed = 1;
  int count = 0;
  int max_vertices = 0;
  long long samples = 0;
  long long discarded_disconnected = 0;
  std::vector<battery_outcome> batteries;
  long long total_checks = 0;
  long long total_violations = 0;
};

// Runs the full property battery: per-sample laws on seeded random connected
// graphs, tree characterizations over every tree with at most 9 vertices,
// line-graph transfer over every connected graph on 3..6 vertices, the
// automorphism-count transfer with its three exceptional graphs, corona
// automorphism restriction on ten fixed pairs, closed formulas against
// search, constructed labelings re-verified from scratch, and join/corona
// bound sandwiches.  count = 0 returns an empty report.
crosscheck_report run_crosscheck(const crosscheck_options& opts = {});

std::string render_crosscheck_report(const crosscheck_report& report);

}  // namespace disting
