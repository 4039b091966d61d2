#include "disting/labeling.hpp"

#include "disting/automorphisms.hpp"
#include "disting/errors.hpp"

namespace disting {

namespace {

void validate_values(const std::vector<int>& labels, int k, std::size_t want,
                     const char* what) {
  if (labels.size() != want)
    throw parameter_error(std::string(what) + " has " +
                          std::to_string(labels.size()) + " labels, expected " +
                          std::to_string(want));
  if (k < 0) throw parameter_error("label count must be nonnegative");
  for (int x : labels)
    if (x < 1 || x > k)
      throw parameter_error(std::string(what) + " label " + std::to_string(x) +
                            " outside 1.." + std::to_string(k));
}

}  // namespace

void validate_labeling(const graph& g, const edge_labeling& l) {
  validate_values(l.labels, l.k, static_cast<std::size_t>(g.edge_count()),
                  "edge labeling");
}

void validate_labeling(const graph& g, const vertex_labeling& l) {
  validate_values(l.labels, l.k, static_cast<std::size_t>(g.vertex_count()),
                  "vertex labeling");
}

bool is_proper(const graph& g, const edge_labeling& l) {
  validate_labeling(g, l);
  for (int v = 0; v < g.vertex_count(); v++) {
    std::vector<bool> seen(l.k + 1, false);
    for (int u : g.neighbors(v)) {
      int label = l.labels[g.edge_index(v, u)];
      if (seen[label]) return false;
      seen[label] = true;
    }
  }
  return true;
}

bool is_proper(const graph& g, const vertex_labeling& l) {
  validate_labeling(g, l);
  for (const edge& e : g.edges())
    if (l.labels[e.u] == l.labels[e.v]) return false;
  return true;
}

labeling_certificate verify_labeling(const graph& g, const edge_labeling& l) {
  labeling_certificate cert;
  cert.g = g;
  cert.labels = l;
  cert.proper = is_proper(g, l);
  cert.witness = find_preserving_automorphism(g, l);
  cert.distinguishing = !cert.witness.has_value();
  return cert;
}

labeling_certificate verify_labeling(const graph& g, const vertex_labeling& l) {
  labeling_certificate cert;
  cert.g = g;
  cert.labels = l;
  cert.proper = is_proper(g, l);
  cert.witness = find_preserving_automorphism(g, l);
  cert.distinguishing = !cert.witness.has_value();
  return cert;
}

}  // namespace disting
