#include "disting/automorphisms.hpp"

#include <algorithm>
#include <map>

#include "disting/errors.hpp"

namespace disting {

namespace {

// Iterated refinement core.  `seeds` gives the round-zero key per vertex;
// later rounds key each vertex by (own cell, sorted multiset of neighbor
// entries), where a neighbor entry encodes the neighbor's cell and, when
// `edge_labels` is present, the label of the connecting edge.  Refinement is
// equivariant: any automorphism preserving the seed data permutes each cell
// onto itself.
std::vector<int> refine_core(const graph& g,
                             const std::vector<std::vector<long long>>& seeds,
                             const std::vector<int>* edge_labels,
                             long long label_space) {
  int n = g.vertex_count();
  auto assign_dense_ids = [n](const std::vector<std::vector<long long>>& keys) {
    std::map<std::vector<long long>, int> ids;
    for (const auto& key : keys) ids.emplace(key, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> cell(n);
    for (int v = 0; v < n; v++) cell[v] = ids.at(keys[v]);
    return std::pair(cell, next);
  };

  auto [cell, cell_count] = assign_dense_ids(seeds);
  while (true) {
    std::vector<std::vector<long long>> keys(n);
    for (int v = 0; v < n; v++) {
      keys[v].push_back(cell[v]);
      std::vector<long long> entries;
      for (int u : g.neighbors(v)) {
        long long entry = cell[u];
        if (edge_labels)
          entry = entry * label_space + (*edge_labels)[g.edge_index(v, u)];
        entries.push_back(entry);
      }
      std::sort(entries.begin(), entries.end());
      keys[v].insert(keys[v].end(), entries.begin(), entries.end());
    }
    auto [new_cell, new_count] = assign_dense_ids(keys);
    if (new_count == cell_count) return cell;
    cell = std::move(new_cell);
    cell_count = new_count;
  }
}

std::vector<std::vector<long long>> degree_seeds(const graph& g) {
  std::vector<std::vector<long long>> seeds(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); v++) seeds[v] = {g.degree(v)};
  return seeds;
}

// Shared backtracking witness search.  Tries each possible first moved
// vertex v0 from high to low; within one v0 the identity is forced below
// v0, image(v0) ranges over larger same-cell vertices, and the remaining
// vertices are assigned in index order with ascending candidates.  The
// first witness found this way is the lexicographically least nonidentity
// preserving automorphism, because permutations moving a later vertex first
// are lexicographically smaller.
struct preserving_search {
  const graph& g;
  const std::vector<int>& cell;
  const std::vector<int>* edge_labels;  // by canonical edge index, or null
  std::vector<int> image;
  std::vector<bool> used;

  preserving_search(const graph& g_, const std::vector<int>& cell_,
                    const std::vector<int>* edge_labels_)
      : g(g_), cell(cell_), edge_labels(edge_labels_),
        image(g_.vertex_count(), -1), used(g_.vertex_count(), false) {}

  bool pair_consistent(int v, int c, int w) const {
    bool av = g.adjacent(v, w);
    if (av != g.adjacent(c, image[w])) return false;
    if (av && edge_labels &&
        (*edge_labels)[g.edge_index(v, w)] !=
            (*edge_labels)[g.edge_index(c, image[w])])
      return false;
    return true;
  }

  // Assigned vertices are exactly 0..v-1 when extending position v.
  bool extend(int v) {
    int n = g.vertex_count();
    if (v == n) return true;
    for (int c = 0; c < n; c++) {
      if (used[c] || cell[c] != cell[v]) continue;
      bool ok = true;
      for (int w = 0; w < v && ok; w++) ok = pair_consistent(v, c, w);
      if (!ok) continue;
      image[v] = c;
      used[c] = true;
      if (extend(v + 1)) return true;
      used[c] = false;
      image[v] = -1;
    }
    return false;
  }

  std::optional<vertex_permutation> run() {
    int n = g.vertex_count();
    for (int v0 = n - 2; v0 >= 0; v0--) {
      std::fill(image.begin(), image.end(), -1);
      std::fill(used.begin(), used.end(), false);
      for (int w = 0; w < v0; w++) {
        image[w] = w;
        used[w] = true;
      }
      for (int u = v0 + 1; u < n; u++) {
        if (cell[u] != cell[v0]) continue;
        bool ok = true;
        for (int w = 0; w < v0 && ok; w++) ok = pair_consistent(v0, u, w);
        if (!ok) continue;
        image[v0] = u;
        used[u] = true;
        if (extend(v0 + 1)) return vertex_permutation(image);
        used[u] = false;
        image[v0] = -1;
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::vector<int> refine_partition(const graph& g) {
  return refine_core(g, degree_seeds(g), nullptr, 1);
}

std::vector<int> refine_partition(const graph& g, const edge_labeling& l) {
  validate_labeling(g, l);
  auto seeds = degree_seeds(g);
  for (int v = 0; v < g.vertex_count(); v++) {
    std::vector<long long> incident;
    for (int u : g.neighbors(v)) incident.push_back(l.labels[g.edge_index(v, u)]);
    std::sort(incident.begin(), incident.end());
    seeds[v].insert(seeds[v].end(), incident.begin(), incident.end());
  }
  return refine_core(g, seeds, &l.labels, l.k + 1);
}

std::vector<int> refine_partition(const graph& g, const vertex_labeling& l) {
  validate_labeling(g, l);
  auto seeds = degree_seeds(g);
  for (int v = 0; v < g.vertex_count(); v++) seeds[v].push_back(l.labels[v]);
  return refine_core(g, seeds, nullptr, 1);
}

int refinement_singleton_vertex(const graph& g) {
  auto cell = refine_partition(g);
  std::vector<int> population(g.vertex_count(), 0);
  for (int c : cell) population[c]++;
  for (int v = 0; v < g.vertex_count(); v++)
    if (population[cell[v]] == 1) return v;
  return -1;
}

namespace {

void enumerate_rec(const graph& g, const std::vector<int>& cell, int v,
                   std::vector<int>& image, std::vector<bool>& used,
                   std::vector<vertex_permutation>& out, std::size_t limit) {
  int n = g.vertex_count();
  if (v == n) {
    out.emplace_back(image);
    if (out.size() > limit) throw group_too_large_error(limit);
    return;
  }
  for (int c = 0; c < n; c++) {
    if (used[c] || cell[c] != cell[v]) continue;
    bool ok = true;
    for (int w = 0; w < v && ok; w++)
      if (g.adjacent(v, w) != g.adjacent(c, image[w])) ok = false;
    if (!ok) continue;
    image[v] = c;
    used[c] = true;
    enumerate_rec(g, cell, v + 1, image, used, out, limit);
    used[c] = false;
  }
}

}  // namespace

std::vector<vertex_permutation> enumerate_automorphisms(const graph& g,
                                                        std::size_t limit) {
  auto cell = refine_partition(g);
  std::vector<int> image(g.vertex_count(), -1);
  std::vector<bool> used(g.vertex_count(), false);
  std::vector<vertex_permutation> out;
  enumerate_rec(g, cell, 0, image, used, out, limit);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<vertex_permutation> find_preserving_automorphism(
    const graph& g, const edge_labeling& l) {
  auto cell = refine_partition(g, l);
  preserving_search search(g, cell, &l.labels);
  return search.run();
}

std::optional<vertex_permutation> find_preserving_automorphism(
    const graph& g, const vertex_labeling& l) {
  auto cell = refine_partition(g, l);
  preserving_search search(g, cell, nullptr);
  return search.run();
}

}  // namespace disting
