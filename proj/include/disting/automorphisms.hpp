#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "disting/graph.hpp"
#include "disting/labeling.hpp"
#include "disting/permutation.hpp"

namespace disting {

inline constexpr std::size_t default_automorphism_limit = 200000;

// Canonical iterated refinement: vertices start in cells keyed by degree
// (and labels, in the labeled overloads) and are split by the multiset of
// neighboring cells until stable.  Returns a dense cell id per vertex.
// Cells overapproximate automorphism orbits; any (label-preserving)
// automorphism maps each cell onto itself.
std::vector<int> refine_partition(const graph& g);
std::vector<int> refine_partition(const graph& g, const edge_labeling& l);
std::vector<int> refine_partition(const graph& g, const vertex_labeling& l);

// Lowest-index vertex alone in its refinement cell, or -1 when every cell
// has at least two vertices.  A singleton cell is fixed by every
// automorphism.
int refinement_singleton_vertex(const graph& g);

// All automorphisms, sorted lexicographically by image array (so the
// identity comes first).  Throws group_too_large_error once more than
// `limit` are found.
std::vector<vertex_permutation> enumerate_automorphisms(
    const graph& g, std::size_t limit = default_automorphism_limit);

// Lexicographically least nonidentity automorphism preserving the labeling,
// or nullopt when the labeling is distinguishing.  Never enumerates the
// group, so it scales to graphs whose automorphism group is huge.
std::optional<vertex_permutation> find_preserving_automorphism(
    const graph& g, const edge_labeling& l);
std::optional<vertex_permutation> find_preserving_automorphism(
    const graph& g, const vertex_labeling& l);

}  // namespace disting
