#include "disting/bounds.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "disting/errors.hpp"
#include "disting/permutation.hpp"
#include "disting/products.hpp"

namespace disting {

namespace {

void require_connected_pair(const graph& g, const graph& h,
                            const char* what) {
  if (!g.connected() || !h.connected()) {
    throw parameter_error(std::string(what) + " bounds need connected factors");
  }
}

bool is_single_edge(const graph& g) {
  return g.vertex_count() == 2 && g.edge_count() == 1;
}

}  // namespace

int chi_prime_d_complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) {
    throw parameter_error("complete bipartite sides must be positive");
  }
  if (s == 1 && t == 1) {
    throw parameter_error(
        "K_{1,1} is a single edge and has no distinguishing edge labeling");
  }
  if (s != t) return std::max(s, t);
  if (s == 2) return 4;
  if (s == 3) return 5;
  return s + 1;
}

bound_pair join_bounds(const graph& g, const graph& h, int chi_prime_d_g,
                       int chi_prime_d_h) {
  require_connected_pair(g, h, "join");
  int n = g.vertex_count();
  int m = h.vertex_count();
  if (n + m <= 2) {
    throw parameter_error("the join of two K_1 is a single edge");
  }
  // Valid in every case: a vertex of either side sees all of the other side.
  int lower = std::max(h.max_degree() + n, g.max_degree() + m);

  if (n < 3 || m < 3) {
    if (is_single_edge(g) && is_single_edge(h)) return bound_pair{5, 5};
    // Small side is K_1 or K_2; the larger factor plays H in the m+2 rule.
    return bound_pair{lower, std::max(n, m) + 2};
  }
  int upper = std::max(chi_prime_d_g, chi_prime_d_h) +
              chi_prime_d_complete_bipartite(n, m);
  return bound_pair{lower, upper};
}

bound_pair corona_bounds(const graph& g, const graph& h, int chi_prime_d_g,
                         int chi_prime_d_h) {
  require_connected_pair(g, h, "corona");
  int n = g.vertex_count();
  int m = h.vertex_count();
  if (n == 1) return join_bounds(g, h, chi_prime_d_g, chi_prime_d_h);
  if (n == 2) {
    // Every g-vertex meets its whole copy plus the other g-vertex.
    return bound_pair{m + 1, m + 2};
  }
  if (m < 3) {
    throw parameter_error("corona bounds need |V(h)| >= 3 when |V(g)| >= 3");
  }
  int lower = std::max(g.max_degree() + m, h.max_degree() + 1);
  int upper = std::max(chi_prime_d_g, chi_prime_d_h) + m;
  return bound_pair{lower, upper};
}

labeling_certificate corona_upper_labeling(const graph& g, const graph& h,
                                           const edge_labeling& g_labels,
                                           const edge_labeling& h_labels) {
  require_connected_pair(g, h, "corona");
  if (g.edge_count() < 2) {
    throw parameter_error(
        "corona labeling needs a first factor with at least two edges");
  }
  labeling_certificate g_check = verify_labeling(g, g_labels);
  if (!g_check.proper || !g_check.distinguishing) {
    throw parameter_error(
        "corona labeling needs a proper distinguishing labeling of g");
  }
  if (h.edge_count() > 0 && !is_proper(h, h_labels)) {
    throw parameter_error("corona labeling needs a proper labeling of h");
  }

  int n = g.vertex_count();
  int m = h.vertex_count();
  int base = std::max(g_labels.k, h.edge_count() > 0 ? h_labels.k : 0);
  graph product = corona(g, h);
  std::vector<int> labels(product.edge_count(), 0);

  for (int e = 0; e < g.edge_count(); ++e) {
    const edge& ge = g.edges()[e];
    labels[product.edge_index(ge.u, ge.v)] = g_labels.labels[e];
  }
  for (int i = 0; i < n; ++i) {
    int offset = n + i * m;
    for (int e = 0; e < h.edge_count(); ++e) {
      const edge& he = h.edges()[e];
      labels[product.edge_index(offset + he.u, offset + he.v)] =
          h_labels.labels[e];
    }
    for (int j = 0; j < m; ++j) {
      // Middle edges: base + 1 .. base + m, one per copy vertex, so any
      // labeling-preserving map must fix every copy pointwise.
      labels[product.edge_index(i, offset + j)] = base + j + 1;
    }
  }
  labeling_certificate cert =
      verify_labeling(product, edge_labeling{base + m, std::move(labels)});
  cert.note = "corona labeling: factors keep their labels, middle edges "
              "take base + copy position";
  return cert;
}

bool corona_automorphism_restriction_check(const graph& g, const graph& h,
                                           std::size_t limit) {
  require_connected_pair(g, h, "corona");
  if (g.vertex_count() < 2) {
    throw parameter_error("restriction check needs |V(g)| >= 2");
  }
  int n = g.vertex_count();
  int m = h.vertex_count();
  graph product = corona(g, h);
  std::vector<vertex_permutation> autos =
      enumerate_automorphisms(product, limit);

  for (const vertex_permutation& f : autos) {
    std::vector<int> g_part(f.images.begin(), f.images.begin() + n);
    std::vector<int> sorted_g = g_part;
    std::sort(sorted_g.begin(), sorted_g.end());
    for (int v = 0; v < n; ++v) {
      if (sorted_g[v] != v) return false;  // g-copy not mapped onto itself
    }
    if (!vertex_permutation{g_part}.is_automorphism_of(g)) return false;

    for (int i = 0; i < n; ++i) {
      // The i-th copy must land in the block of a single copy.
      int target = (f.images[n + i * m] - n) / m;
      if (target < 0 || target >= n) return false;
      for (int j = 0; j < m; ++j) {
        int image = f.images[n + i * m + j];
        if (image < n + target * m || image >= n + (target + 1) * m) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace disting
