#pragma once

#include "disting/graph.hpp"

namespace disting {

bool is_tree(const graph& g);

// A tree is "symmetric" here when some center vertex sees every leaf at the
// same distance h >= 1, the center has degree d >= 2, and every other
// internal vertex has degree d as well (d - 1 children plus its parent).
// Equivalently: the balanced spherically-symmetric tree T_{h,d}.
bool is_symmetric_tree(const graph& g);

// "Bisymmetric": two adjacent centers, every leaf at the same distance
// h >= 1 from the central edge, every internal vertex of equal degree
// d >= 2 (each central endpoint has d - 1 children of its own).  T''_{h,d}.
// A single edge (h would be 0) does not qualify; no tree is both symmetric
// and bisymmetric.
bool is_bisymmetric_tree(const graph& g);

}  // namespace disting
