#pragma once

#include <random>
#include <vector>

#include "disting/graph.hpp"
#include "disting/labeling.hpp"

namespace disting {

// Seeded sampler for random connected graphs.  Every attempt draws a vertex
// count uniformly from [3, max_vertices] and an edge probability uniformly
// from {0.3000, 0.3001, ..., 0.7000}, then keeps each of the C(n,2) candidate
// edges independently with that probability.  Disconnected draws are rejected
// and counted, so a report can state how much conditioning happened.  All
// randomness flows through one std::mt19937 consumed in a fixed order (n,
// probability, then one draw per vertex pair), which makes the stream of
// samples a pure function of the seed.
class connected_graph_sampler {
 public:
  connected_graph_sampler(unsigned int seed, int max_vertices);

  graph next();

  long long discarded() const { return discarded_; }

 private:
  std::mt19937 rng_;
  int max_vertices_ = 0;
  long long discarded_ = 0;
};

// Uniform integer in [lo, hi] drawn via rejection sampling on raw engine
// output, so results do not depend on the standard library's distribution
// implementation.
int draw_uniform_int(std::mt19937& rng, int lo, int hi);

// Random (not necessarily proper) labelings with every label in [1, k],
// used to feed consistency checks between the two automorphism searches.
edge_labeling random_edge_labeling(const graph& g, int k, std::mt19937& rng);
vertex_labeling random_vertex_labeling(const graph& g, int k, std::mt19937& rng);

// Every connected graph on exactly n vertices, one representative per
// isomorphism class, built by filtering all 2^C(n,2) edge subsets.  Intended
// for n <= 6.
std::vector<graph> connected_graphs_up_to_iso(int n);

// Every tree on exactly n vertices up to isomorphism, grown by attaching a
// leaf to each representative on n - 1 vertices and deduplicating.
std::vector<graph> trees_up_to_iso(int n);

}  // namespace disting
