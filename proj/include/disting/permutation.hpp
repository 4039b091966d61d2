#pragma once

#include <vector>

#include "disting/graph.hpp"

namespace disting {

// Permutation of {0, ..., n-1}, stored as the image array: images[i] is
// where i goes.  The constructor validates bijectivity.
struct vertex_permutation {
  std::vector<int> images;

  vertex_permutation() = default;
  explicit vertex_permutation(std::vector<int> images_);

  int size() const { return static_cast<int>(images.size()); }
  int operator[](int i) const { return images[i]; }
  bool is_identity() const;
  vertex_permutation inverse() const;
  // (a.compose(b))[i] == a[b[i]]: apply b first, then a.
  vertex_permutation compose(const vertex_permutation& other) const;
  bool is_automorphism_of(const graph& g) const;

  friend bool operator==(const vertex_permutation& a, const vertex_permutation& b) {
    return a.images == b.images;
  }
  friend bool operator<(const vertex_permutation& a, const vertex_permutation& b) {
    return a.images < b.images;
  }
};

// Permutation of edge indices, same representation.
struct edge_permutation {
  std::vector<int> images;

  edge_permutation() = default;
  explicit edge_permutation(std::vector<int> images_);

  int size() const { return static_cast<int>(images.size()); }
  int operator[](int i) const { return images[i]; }
  bool is_identity() const;

  friend bool operator==(const edge_permutation& a, const edge_permutation& b) {
    return a.images == b.images;
  }
  friend bool operator<(const edge_permutation& a, const edge_permutation& b) {
    return a.images < b.images;
  }
};

// The permutation induced on canonical edge indices by a vertex
// automorphism: edge {u, v} goes to {phi(u), phi(v)}.  Throws
// not_an_automorphism_error when phi does not preserve adjacency.
edge_permutation edge_action(const graph& g, const vertex_permutation& phi);

}  // namespace disting
