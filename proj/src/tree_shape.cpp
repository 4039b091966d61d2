#include "disting/tree_shape.hpp"

#include <algorithm>

namespace disting {

namespace {

// Checks that every leaf sits at the same depth h >= 1 and that every
// internal vertex has degree d.  Together with treeness this pins the shape
// completely: internal vertices then occupy exactly depths 0..h-1.
bool balanced_with_uniform_internal_degree(const graph& g,
                                           const std::vector<int>& depth, int d) {
  int leaf_depth = -1;
  for (int v = 0; v < g.vertex_count(); v++) {
    if (g.degree(v) == 1) {
      if (leaf_depth == -1) leaf_depth = depth[v];
      if (depth[v] != leaf_depth) return false;
    } else if (g.degree(v) != d) {
      return false;
    }
  }
  return leaf_depth >= 1;
}

}  // namespace

bool is_tree(const graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
         g.connected();
}

bool is_symmetric_tree(const graph& g) {
  if (!is_tree(g)) return false;
  for (int c = 0; c < g.vertex_count(); c++) {
    int d = g.degree(c);
    if (d < 2) continue;
    if (balanced_with_uniform_internal_degree(g, g.bfs_distances(c), d)) return true;
  }
  return false;
}

bool is_bisymmetric_tree(const graph& g) {
  if (!is_tree(g)) return false;
  for (const edge& e : g.edges()) {
    int d = g.degree(e.u);
    if (d < 2 || g.degree(e.v) != d) continue;
    auto du = g.bfs_distances(e.u);
    auto dv = g.bfs_distances(e.v);
    std::vector<int> depth(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); v++) depth[v] = std::min(du[v], dv[v]);
    if (balanced_with_uniform_internal_degree(g, depth, d)) return true;
  }
  return false;
}

}  // namespace disting
