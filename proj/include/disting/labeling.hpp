#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "disting/graph.hpp"
#include "disting/permutation.hpp"

namespace disting {

// labels[i] is the label of the edge with canonical index i; values 1..k.
struct edge_labeling {
  int k = 0;
  std::vector<int> labels;

  friend bool operator==(const edge_labeling& a, const edge_labeling& b) {
    return a.k == b.k && a.labels == b.labels;
  }
};

// labels[v] is the label of vertex v; values 1..k.
struct vertex_labeling {
  int k = 0;
  std::vector<int> labels;

  friend bool operator==(const vertex_labeling& a, const vertex_labeling& b) {
    return a.k == b.k && a.labels == b.labels;
  }
};

// Throw parameter_error unless the labeling has the right length and every
// label lies in 1..k.
void validate_labeling(const graph& g, const edge_labeling& l);
void validate_labeling(const graph& g, const vertex_labeling& l);

// Proper: no two edges sharing an endpoint (resp. no two adjacent vertices)
// carry the same label.
bool is_proper(const graph& g, const edge_labeling& l);
bool is_proper(const graph& g, const vertex_labeling& l);

// Checked record of a labeling's properties.  When the labeling fails to be
// distinguishing, `witness` holds a nonidentity automorphism preserving it.
struct labeling_certificate {
  graph g{0, {}};
  std::variant<edge_labeling, vertex_labeling> labels;
  bool proper = false;
  bool distinguishing = false;
  std::optional<vertex_permutation> witness;
  std::optional<std::string> note;

  bool is_edge_labeling() const {
    return std::holds_alternative<edge_labeling>(labels);
  }
  int label_count() const {
    return is_edge_labeling() ? std::get<edge_labeling>(labels).k
                              : std::get<vertex_labeling>(labels).k;
  }
};

// Builds a certificate by checking properness and searching for a
// preserving nonidentity automorphism (without enumerating the full group).
labeling_certificate verify_labeling(const graph& g, const edge_labeling& l);
labeling_certificate verify_labeling(const graph& g, const vertex_labeling& l);

}  // namespace disting
