#include "disting/bipartite_matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "disting/errors.hpp"

namespace disting {

bipartite_adjacency_matrix make_matrix(int rows, int cols, int label_count,
                                       std::vector<std::vector<int>> entries) {
  if (rows < 1 || cols < 1) {
    throw parameter_error("matrix needs at least one row and one column");
  }
  if (label_count < 1) {
    throw parameter_error("matrix needs a positive label count");
  }
  if (static_cast<int>(entries.size()) != rows) {
    throw parameter_error("matrix has wrong row count");
  }
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != cols) {
      throw parameter_error("matrix has a row of wrong length");
    }
    for (int value : row) {
      if (value < 1 || value > label_count) {
        throw parameter_error("matrix entry outside 1..label_count");
      }
    }
  }
  return bipartite_adjacency_matrix{rows, cols, label_count,
                                    std::move(entries)};
}

label_count_vector column_label_counts(const bipartite_adjacency_matrix& a,
                                       int col) {
  label_count_vector counts(a.label_count, 0);
  for (int i = 0; i < a.rows; ++i) ++counts[a.entries[i][col] - 1];
  return counts;
}

label_count_vector row_label_counts(const bipartite_adjacency_matrix& a,
                                    int row) {
  label_count_vector counts(a.label_count, 0);
  for (int j = 0; j < a.cols; ++j) ++counts[a.entries[row][j] - 1];
  return counts;
}

std::string to_string(identity_verdict v) {
  switch (v) {
    case identity_verdict::identity:
      return "identity";
    case identity_verdict::not_identity:
      return "not-identity";
    case identity_verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

identity_verdict identity_labeling_test(const bipartite_adjacency_matrix& a) {
  for (int i = 0; i < a.rows; ++i) {
    for (int i2 = i + 1; i2 < a.rows; ++i2) {
      if (a.entries[i] == a.entries[i2]) return identity_verdict::not_identity;
    }
  }

  // Rows are pairwise distinct past this point.  Distinct column label
  // counts force
  // any preserving (t-side, s-side) permutation pair to fix every column,
  // and distinct rows then fix every row.
  std::vector<label_count_vector> col_counts;
  col_counts.reserve(a.cols);
  for (int j = 0; j < a.cols; ++j) {
    col_counts.push_back(column_label_counts(a, j));
  }
  auto sorted_cols = col_counts;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  bool cols_distinct =
      std::adjacent_find(sorted_cols.begin(), sorted_cols.end()) ==
      sorted_cols.end();
  if (!cols_distinct) return identity_verdict::inconclusive;

  if (a.rows == a.cols) {
    // Square grids additionally admit side-swapping maps; rule them out
    // only when the two sides are distinguishable by their count profiles.
    std::vector<label_count_vector> sorted_rows;
    sorted_rows.reserve(a.rows);
    for (int i = 0; i < a.rows; ++i) {
      sorted_rows.push_back(row_label_counts(a, i));
    }
    std::sort(sorted_rows.begin(), sorted_rows.end());
    if (sorted_rows == sorted_cols) return identity_verdict::inconclusive;
  }
  return identity_verdict::identity;
}

bipartite_adjacency_matrix circulant_matrix(int s, int t) {
  if (s < 1 || t < 1) {
    throw parameter_error("circulant grid needs positive side sizes");
  }
  std::vector<std::vector<int>> entries(t, std::vector<int>(s));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < s; ++j) {
      int value = ((j - i + 1) % s + s) % s;  // position difference, 1-based
      entries[i][j] = value == 0 ? s : value;
    }
  }
  return make_matrix(t, s, s, std::move(entries));
}

bipartite_adjacency_matrix matrix_from_labeling(const graph& g,
                                                const edge_labeling& l, int s,
                                                int t) {
  if (s < 1 || t < 1) throw parameter_error("side sizes must be positive");
  if (g.vertex_count() != s + t || g.edge_count() != s * t) {
    throw parameter_error("graph is not a complete bipartite graph layout");
  }
  validate_labeling(g, l);
  std::vector<std::vector<int>> entries(t, std::vector<int>(s));
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < s; ++j) {
      int idx = g.edge_index(j, s + i);
      if (idx < 0) {
        throw parameter_error("graph is missing a cross edge of K_{s,t}");
      }
      entries[i][j] = l.labels[idx];
    }
  }
  return make_matrix(t, s, l.k, std::move(entries));
}

edge_labeling labeling_from_matrix(const bipartite_adjacency_matrix& a) {
  // Edge {j, s+i} of the pinned K_{s,t} has canonical index j*t + i.
  std::vector<int> labels(static_cast<size_t>(a.rows) * a.cols, 0);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) {
      labels[static_cast<size_t>(j) * a.rows + i] = a.entries[i][j];
    }
  }
  return edge_labeling{a.label_count, std::move(labels)};
}

}  // namespace disting
