#include "disting/constructions.hpp"

#include <string>
#include <utility>
#include <vector>

#include "disting/bipartite_matrix.hpp"
#include "disting/errors.hpp"
#include "disting/graph.hpp"
#include "disting/search.hpp"

namespace disting {

namespace {

int labeled_edge(const graph& g, int u, int v) {
  int idx = g.edge_index(u, v);
  if (idx < 0) throw internal_error("construction refers to a missing edge");
  return idx;
}

// 1..n representative of x mod n.
int rep(int x, int n) {
  int r = x % n;
  if (r <= 0) r += n;
  return r;
}

}  // namespace

labeling_certificate construct_bipartite_labeling(int s, int t) {
  if (t < 1 || s <= t) {
    throw parameter_error("circulant labeling requires s > t >= 1");
  }
  graph g = make_complete_bipartite(s, t);
  edge_labeling l = labeling_from_matrix(circulant_matrix(s, t));
  labeling_certificate cert = verify_labeling(g, l);
  cert.note = "circulant labeling of K_{" + std::to_string(s) + "," +
              std::to_string(t) + "}, k = s";
  return cert;
}

labeling_certificate construct_complete_even_labeling(int n) {
  if (n < 2) {
    throw parameter_error("one-factorization labeling requires n >= 2");
  }
  graph g = make_complete(2 * n);
  int rounds = 2 * n - 1;
  std::vector<int> labels(g.edge_count(), 0);
  for (int r = 0; r < rounds; ++r) {
    // Circle method: vertex 2n-1 pairs with r, the rest pair symmetrically
    // around r on the cycle 0..2n-2.
    labels[labeled_edge(g, r, 2 * n - 1)] = r + 1;
    for (int i = 1; i < n; ++i) {
      int a = (r + i) % rounds;
      int b = (r - i + rounds) % rounds;
      labels[labeled_edge(g, a, b)] = r + 1;
    }
  }
  labeling_certificate cert =
      verify_labeling(g, edge_labeling{rounds, std::move(labels)});
  cert.note = "round-robin one-factorization of K_" + std::to_string(2 * n) +
              ", factor r labeled r+1";
  return cert;
}

labeling_certificate construct_book_labeling(int n) {
  if (n < 2) throw parameter_error("book labeling requires n >= 2");
  graph g = make_book(n);
  std::vector<int> labels(g.edge_count(), 0);
  labels[labeled_edge(g, 0, 1)] = n + 1;
  for (int i = 1; i <= n; ++i) {
    int vi = 2 * i, wi = 2 * i + 1;
    labels[labeled_edge(g, 0, vi)] = rep(i, n);
    labels[labeled_edge(g, vi, wi)] = rep(i + 2, n);
    labels[labeled_edge(g, 1, wi)] = rep(i + 1, n);
  }
  labeling_certificate cert =
      verify_labeling(g, edge_labeling{n + 1, std::move(labels)});
  if (cert.proper && cert.distinguishing) {
    cert.note = "page labeling of B_" + std::to_string(n) +
                ", spine labeled n+1";
    return cert;
  }

  // The page arithmetic collides at n = 2 (i and i+2 agree mod 2); fall
  // back to a searched labeling rather than ship a broken one.
  labeling_probe probe =
      probe_edge_labeling(g, probe_request{n + 1, true, true});
  if (probe.verdict == probe_verdict::satisfiable && probe.edge_witness) {
    labeling_certificate fallback = verify_labeling(g, *probe.edge_witness);
    fallback.note = "page labeling collides at n = " + std::to_string(n) +
                    " under 1..n representatives; certificate found by search";
    return fallback;
  }

  // No proper distinguishing (n+1)-labeling exists at all: every proper
  // 3-labeling of B_2 is preserved by a page swap or a side swap, so the
  // searched minimum needs one extra label.
  parameter_result minimum = compute_chromatic_distinguishing_index(g, {});
  if (!minimum.exact() || !minimum.certificate.has_value()) {
    throw internal_error("book labeling fallback could not resolve B_" +
                         std::to_string(n));
  }
  labeling_certificate fallback = *minimum.certificate;
  fallback.note = "no proper distinguishing " + std::to_string(n + 1) +
                  "-labeling of B_" + std::to_string(n) +
                  " exists; searched minimum uses " +
                  std::to_string(minimum.value()) + " labels";
  return fallback;
}

labeling_certificate construct_even_cycle_labeling(int n) {
  if (n < 4) {
    throw parameter_error("even-cycle labeling requires C_{2n} with n >= 4");
  }
  graph g = make_cycle(2 * n);
  std::vector<int> labels(g.edge_count(), 0);
  // Consecutive edges e_1..e_2n: e_i = {i-1, i} and e_2n closes the cycle.
  for (int i = 1; i <= 2 * n; ++i) {
    int idx = i < 2 * n ? labeled_edge(g, i - 1, i)
                        : labeled_edge(g, 0, 2 * n - 1);
    if (i == 1 || i == 4) {
      labels[idx] = 3;
    } else {
      labels[idx] = i % 2 == 1 ? 2 : 1;
    }
  }
  labeling_certificate cert =
      verify_labeling(g, edge_labeling{3, std::move(labels)});
  cert.note = "three-label cycle labeling of C_" + std::to_string(2 * n);
  return cert;
}

labeling_certificate construct_even_path_labeling(int n) {
  if (n < 2) {
    throw parameter_error("even-path labeling requires P_{2n} with n >= 2");
  }
  graph g = make_path(2 * n);
  std::vector<int> labels(g.edge_count(), 0);
  labels[labeled_edge(g, 0, 1)] = 1;
  for (int i = 2; i < 2 * n; ++i) {
    labels[labeled_edge(g, i - 1, i)] = i % 2 == 0 ? 2 : 3;
  }
  labeling_certificate cert =
      verify_labeling(g, edge_labeling{3, std::move(labels)});
  cert.note = "alternating path labeling of P_" + std::to_string(2 * n);
  return cert;
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {
      "bipartite-circulant", "one-factorization", "book-labeling",
      "even-cycle", "even-path"};
  return names;
}

labeling_certificate run_construction(const std::string& name,
                                      const family_spec& spec) {
  if (name == "bipartite-circulant") {
    if (spec.fam != family::complete_bipartite) {
      throw parameter_error("bipartite-circulant needs a kst:s,t family");
    }
    return construct_bipartite_labeling(spec.params[0], spec.params[1]);
  }
  if (name == "one-factorization") {
    if (spec.fam != family::complete || spec.params[0] % 2 != 0) {
      throw parameter_error(
          "one-factorization needs a complete:2n family of even order");
    }
    return construct_complete_even_labeling(spec.params[0] / 2);
  }
  if (name == "book-labeling") {
    if (spec.fam != family::book) {
      throw parameter_error("book-labeling needs a book:n family");
    }
    return construct_book_labeling(spec.params[0]);
  }
  if (name == "even-cycle") {
    if (spec.fam != family::cycle || spec.params[0] % 2 != 0) {
      throw parameter_error("even-cycle needs a cycle:2n family of even order");
    }
    return construct_even_cycle_labeling(spec.params[0] / 2);
  }
  if (name == "even-path") {
    if (spec.fam != family::path || spec.params[0] % 2 != 0) {
      throw parameter_error("even-path needs a path:2n family of even order");
    }
    return construct_even_path_labeling(spec.params[0] / 2);
  }
  throw parameter_error("unknown construction '" + name + "'");
}

}  // namespace disting
