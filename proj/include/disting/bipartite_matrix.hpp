#pragma once

#include <string>
#include <vector>

#include "disting/graph.hpp"
#include "disting/labeling.hpp"

namespace disting {

// Edge labels of a complete bipartite graph K_{s,t} arranged as a grid:
// entries[i][j] is the label of the edge between the i-th vertex of the
// t-side and the j-th vertex of the s-side.  Labels range over 1..label_count.
//
// The grid corresponds to the pinned K_{s,t} layout (s-side vertices
// 0..s-1, t-side vertices s..s+t-1): entries[i][j] is the label of edge
// {j, s+i}, whose canonical index is j*t + i.
struct bipartite_adjacency_matrix {
  int rows = 0;         // t, size of the smaller side in the constructions
  int cols = 0;         // s
  int label_count = 0;  // labels are 1..label_count
  std::vector<std::vector<int>> entries;
};

// Validates shape and label range; throws parameter_error on violation.
bipartite_adjacency_matrix make_matrix(int rows, int cols, int label_count,
                                       std::vector<std::vector<int>> entries);

// Count of each label inside one column (resp. row): component l-1 is the
// number of entries equal to l.  Components sum to rows (resp. cols).
using label_count_vector = std::vector<int>;
label_count_vector column_label_counts(const bipartite_adjacency_matrix& a,
                                       int col);
label_count_vector row_label_counts(const bipartite_adjacency_matrix& a,
                                    int row);

// Outcome of the grid-level test for "no nonidentity automorphism of
// K_{s,t} preserves this edge labeling".
enum class identity_verdict { identity, not_identity, inconclusive };

std::string to_string(identity_verdict v);

// Decides from the grid alone whether the labeling is preserved only by the
// identity automorphism:
//   - not_identity when two rows are equal (swapping the two t-side
//     vertices preserves every edge label);
//   - identity when rows are pairwise distinct, column label counts are
//     pairwise distinct, and - in the square case - the multiset of row
//     label counts differs from the multiset of column label counts (so no
//     side-swapping map can preserve the labeling either);
//   - inconclusive otherwise.
// Definite answers agree with find_preserving_automorphism on the labeled
// K_{s,t}.
identity_verdict identity_labeling_test(const bipartite_adjacency_matrix& a);

// The shifted-row grid with entries[i][j] congruent to j-i+1 mod s
// (1-based positions, representatives 1..s): row one is (1,2,...,s) and
// each later row is the previous one shifted right by one.
bipartite_adjacency_matrix circulant_matrix(int s, int t);

// Conversions between grids and edge labelings of the pinned K_{s,t}.
bipartite_adjacency_matrix matrix_from_labeling(const graph& g,
                                                const edge_labeling& l, int s,
                                                int t);
edge_labeling labeling_from_matrix(const bipartite_adjacency_matrix& a);

}  // namespace disting
