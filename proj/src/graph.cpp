#include "disting/graph.hpp"

#include <algorithm>
#include <string>

#include "disting/errors.hpp"

namespace disting {

graph::graph(int vertex_count, std::vector<edge> edge_list) : n_(vertex_count) {
  if (n_ < 0) throw parameter_error("vertex count must be nonnegative");
  for (auto& e : edge_list) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v)
      throw parameter_error("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n_)
      throw parameter_error("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} out of range for " +
                            std::to_string(n_) + " vertices");
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw parameter_error("duplicate edge in edge list");
  edges_ = std::move(edge_list);

  adj_.assign(n_, {});
  edge_index_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int i = 0; i < edge_count(); i++) {
    const edge& e = edges_[i];
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    edge_index_[static_cast<std::size_t>(e.u) * n_ + e.v] = i;
    edge_index_[static_cast<std::size_t>(e.v) * n_ + e.u] = i;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool graph::adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

int graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; v++) d = std::max(d, degree(v));
  return d;
}

int graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  return edge_index_[static_cast<std::size_t>(u) * n_ + v];
}

bool graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj_[v])
      if (!seen[u]) {
        seen[u] = 1;
        count++;
        stack.push_back(u);
      }
  }
  return count == n_;
}

bool graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (int s = 0; s < n_; s++) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : adj_[v]) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> graph::bfs_distances(int source) const {
  std::vector<int> dist(n_, -1);
  if (source < 0 || source >= n_) return dist;
  dist[source] = 0;
  std::vector<int> frontier{source};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier)
      for (int u : adj_[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          next.push_back(u);
        }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace disting
