#include "disting/permutation.hpp"

#include "disting/errors.hpp"

namespace disting {

namespace {

void validate_images(const std::vector<int>& images, const char* what) {
  int n = static_cast<int>(images.size());
  std::vector<bool> seen(n, false);
  for (int x : images) {
    if (x < 0 || x >= n || seen[x])
      throw parameter_error(std::string(what) + " images are not a bijection");
    seen[x] = true;
  }
}

}  // namespace

vertex_permutation::vertex_permutation(std::vector<int> images_)
    : images(std::move(images_)) {
  validate_images(images, "vertex permutation");
}

bool vertex_permutation::is_identity() const {
  for (int i = 0; i < size(); i++)
    if (images[i] != i) return false;
  return true;
}

vertex_permutation vertex_permutation::inverse() const {
  std::vector<int> inv(images.size());
  for (int i = 0; i < size(); i++) inv[images[i]] = i;
  return vertex_permutation(std::move(inv));
}

vertex_permutation vertex_permutation::compose(const vertex_permutation& other) const {
  if (size() != other.size())
    throw parameter_error("composing permutations of different sizes");
  std::vector<int> out(images.size());
  for (int i = 0; i < size(); i++) out[i] = images[other.images[i]];
  return vertex_permutation(std::move(out));
}

bool vertex_permutation::is_automorphism_of(const graph& g) const {
  if (size() != g.vertex_count()) return false;
  for (const edge& e : g.edges())
    if (!g.adjacent(images[e.u], images[e.v])) return false;
  return true;
}

edge_permutation::edge_permutation(std::vector<int> images_)
    : images(std::move(images_)) {
  validate_images(images, "edge permutation");
}

bool edge_permutation::is_identity() const {
  for (int i = 0; i < size(); i++)
    if (images[i] != i) return false;
  return true;
}

edge_permutation edge_action(const graph& g, const vertex_permutation& phi) {
  if (phi.size() != g.vertex_count() || !phi.is_automorphism_of(g))
    throw not_an_automorphism_error(
        "edge action requires a vertex automorphism of the graph");
  std::vector<int> images(g.edge_count());
  const auto& edges = g.edges();
  for (int i = 0; i < g.edge_count(); i++) {
    int j = g.edge_index(phi[edges[i].u], phi[edges[i].v]);
    images[i] = j;
  }
  return edge_permutation(std::move(images));
}

}  // namespace disting
