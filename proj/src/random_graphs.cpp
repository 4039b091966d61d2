#include "disting/random_graphs.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "disting/errors.hpp"
#include "disting/isomorphism.hpp"

namespace disting {

int draw_uniform_int(std::mt19937& rng, int lo, int hi) {
  if (lo > hi) throw parameter_error("draw_uniform_int: empty range");
  const unsigned long long span =
      static_cast<unsigned long long>(hi) - static_cast<unsigned long long>(lo) + 1ULL;
  // Largest multiple of span that fits in the engine's 32-bit output range.
  const unsigned long long limit = (0x100000000ULL / span) * span;
  for (;;) {
    const unsigned long long raw = rng();
    if (raw < limit) return lo + static_cast<int>(raw % span);
  }
}

connected_graph_sampler::connected_graph_sampler(unsigned int seed, int max_vertices)
    : rng_(seed), max_vertices_(max_vertices) {
  if (max_vertices_ < 3) {
    throw parameter_error("connected_graph_sampler needs max_vertices >= 3");
  }
}

graph connected_graph_sampler::next() {
  for (;;) {
    const int n = draw_uniform_int(rng_, 3, max_vertices_);
    // Edge probability in ten-thousandths, uniform over [0.3, 0.7].
    const int threshold = draw_uniform_int(rng_, 3000, 7000);
    std::vector<edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (draw_uniform_int(rng_, 0, 9999) < threshold) edges.push_back({u, v});
      }
    }
    graph g(n, edges);
    if (g.connected()) return g;
    ++discarded_;
  }
}

edge_labeling random_edge_labeling(const graph& g, int k, std::mt19937& rng) {
  if (k < 1) throw parameter_error("random_edge_labeling needs k >= 1");
  edge_labeling l;
  l.k = k;
  l.labels.resize(g.edge_count());
  for (int& x : l.labels) x = draw_uniform_int(rng, 1, k);
  return l;
}

vertex_labeling random_vertex_labeling(const graph& g, int k, std::mt19937& rng) {
  if (k < 1) throw parameter_error("random_vertex_labeling needs k >= 1");
  vertex_labeling l;
  l.k = k;
  l.labels.resize(g.vertex_count());
  for (int& x : l.labels) x = draw_uniform_int(rng, 1, k);
  return l;
}

namespace {

// Cheap isomorphism invariant used to bucket candidates before running the
// exact isomorphism test: vertex count, edge count, sorted degree sequence,
// and sorted per-vertex triangle counts.
std::tuple<int, int, std::vector<int>, std::vector<int>> iso_bucket_key(const graph& g) {
  const int n = g.vertex_count();
  std::vector<int> degrees(n);
  std::vector<int> triangles(n, 0);
  for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.edge_index(u, v) < 0) continue;
      for (int w = v + 1; w < n; ++w) {
        if (g.edge_index(u, w) >= 0 && g.edge_index(v, w) >= 0) {
          ++triangles[u];
          ++triangles[v];
          ++triangles[w];
        }
      }
    }
  }
  std::sort(degrees.begin(), degrees.end());
  std::sort(triangles.begin(), triangles.end());
  return {n, g.edge_count(), degrees, triangles};
}

class iso_dedup_set {
 public:
  // Returns true when g is new to the set, storing it as a representative.
  bool insert(const graph& g) {
    auto& bucket = buckets_[iso_bucket_key(g)];
    for (const int idx : bucket) {
      if (isomorphic(reps_[idx], g)) return false;
    }
    bucket.push_back(static_cast<int>(reps_.size()));
    reps_.push_back(g);
    return true;
  }

  const std::vector<graph>& reps() const { return reps_; }

 private:
  std::map<std::tuple<int, int, std::vector<int>, std::vector<int>>, std::vector<int>> buckets_;
  std::vector<graph> reps_;
};

}  // namespace

std::vector<graph> connected_graphs_up_to_iso(int n) {
  if (n < 1) throw parameter_error("connected_graphs_up_to_iso needs n >= 1");
  if (n > 6) {
    throw parameter_error("connected_graphs_up_to_iso supports n <= 6 only");
  }
  std::vector<edge> all_pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all_pairs.push_back({u, v});
  }
  const int pair_count = static_cast<int>(all_pairs.size());
  iso_dedup_set seen;
  for (long long mask = 0; mask < (1LL << pair_count); ++mask) {
    std::vector<edge> edges;
    for (int i = 0; i < pair_count; ++i) {
      if (mask & (1LL << i)) edges.push_back(all_pairs[i]);
    }
    graph g(n, edges);
    if (!g.connected()) continue;
    seen.insert(g);
  }
  return seen.reps();
}

std::vector<graph> trees_up_to_iso(int n) {
  if (n < 1) throw parameter_error("trees_up_to_iso needs n >= 1");
  std::vector<graph> current;
  current.push_back(graph(1, {}));
  for (int size = 2; size <= n; ++size) {
    iso_dedup_set next;
    for (const graph& t : current) {
      for (int attach = 0; attach < t.vertex_count(); ++attach) {
        std::vector<edge> edges = t.edges();
        edges.push_back({attach, t.vertex_count()});
        next.insert(graph(t.vertex_count() + 1, edges));
      }
    }
    current = next.reps();
  }
  return current;
}

}  // namespace disting
