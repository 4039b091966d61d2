#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "disting/graph.hpp"
#include "disting/labeling.hpp"

namespace disting {

enum class parameter { chi_prime, chi, d, d_prime, chi_d, chi_prime_d };

std::string to_string(parameter p);
parameter parse_parameter(const std::string& name);  // "chi-prime", "d", ...

enum class method { search, closed_form, construction, bounds };

std::string to_string(method m);

// Outcome of an exact computation: [lo, hi] collapses to a point when the
// value was determined; otherwise the interval is still sound.  Successful
// searches attach an independently re-verified witness labeling.
struct parameter_result {
  parameter param = parameter::chi;
  int lo = 0;
  int hi = 0;
  method how = method::search;
  std::optional<labeling_certificate> certificate;

  bool exact() const { return lo == hi; }
  int value() const;  // throws internal_error unless exact
};

struct search_options {
  // Wall-clock budget for the whole call; unset means unlimited.  On expiry
  // engines degrade to sound bounds instead of guessing.
  std::optional<double> budget_secs;
  // Above this group order the engines stop enumerating automorphisms and
  // fall back to leaf verification plus randomized probing.
  std::size_t aut_limit = 200000;
  // Closed-form fast paths (class-one criteria, fixed-vertex rule).  Turning
  // them off forces pure search, which tests use for cross-validation.
  bool use_shortcuts = true;
};

enum class probe_verdict { satisfiable, unsatisfiable, budget_exhausted };

struct probe_request {
  int k = 1;
  bool require_proper = true;
  bool require_distinguishing = true;
};

struct labeling_probe {
  probe_verdict verdict = probe_verdict::budget_exhausted;
  std::optional<edge_labeling> edge_witness;      // set on satisfiable edge probes
  std::optional<vertex_labeling> vertex_witness;  // set on satisfiable vertex probes
};

// Decides whether the graph admits a k-labeling with the requested
// properties.  Preconditions: connected graph; edge probes need at least one
// edge, and at least two when distinguishing is required (a lone edge is
// fixed setwise by the endpoint swap, so no edge labeling can break it).
labeling_probe probe_edge_labeling(const graph& g, const probe_request& req,
                                   const search_options& opts = {});
labeling_probe probe_vertex_labeling(const graph& g, const probe_request& req,
                                     const search_options& opts = {});

// The six parameters.  All require a connected graph; the edge parameters
// additionally require edges as described above.
parameter_result compute_chromatic_index(const graph& g,
                                         const search_options& opts = {});
parameter_result compute_chromatic_number(const graph& g,
                                          const search_options& opts = {});
parameter_result compute_distinguishing_number(const graph& g,
                                               const search_options& opts = {});
parameter_result compute_distinguishing_index(const graph& g,
                                              const search_options& opts = {});
parameter_result compute_chromatic_distinguishing_number(
    const graph& g, const search_options& opts = {});
parameter_result compute_chromatic_distinguishing_index(
    const graph& g, const search_options& opts = {});

parameter_result compute_parameter(const graph& g, parameter p,
                                   const search_options& opts = {});

}  // namespace disting
