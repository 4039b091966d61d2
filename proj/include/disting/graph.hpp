#pragma once

#include <vector>

namespace disting {

// Unordered vertex pair, stored with u < v.
struct edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const edge& a, const edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const edge& a, const edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

// Simple undirected graph, immutable after construction.
//
// Edges are normalized to u < v and stored sorted lexicographically; the
// position of an edge in that order is its canonical edge index, used by
// every edge labeling and edge permutation in the library.
class graph {
 public:
  graph() = default;
  // Normalizes endpoint order and sorts; rejects loops, duplicates and
  // out-of-range endpoints.
  graph(int vertex_count, std::vector<edge> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  // Canonical index of edge {u,v}, or -1 when absent.
  int edge_index(int u, int v) const;

  bool connected() const;
  bool is_bipartite() const;

  // BFS distance from source to every vertex; -1 for unreachable.
  std::vector<int> bfs_distances(int source) const;

  // Same vertex count and same edge set (not isomorphism).
  friend bool operator==(const graph& a, const graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> edge_index_;  // n*n lookup, -1 where absent
};

}  // namespace disting
