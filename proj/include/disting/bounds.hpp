#pragma once

#include <cstddef>

#include "disting/automorphisms.hpp"
#include "disting/graph.hpp"
#include "disting/labeling.hpp"

namespace disting {

// Sound enclosing interval for a parameter value.
struct bound_pair {
  int lower = 0;
  int upper = 0;
};

// The proper distinguishing index of K_{s,t}: max(s,t) for unequal sides,
// 4 / 5 / s+1 for equal sides 2 / 3 / >= 4.  K_{1,1} is a single edge and
// has no distinguishing labeling at all, so it is rejected.
int chi_prime_d_complete_bipartite(int s, int t);

// Interval for the proper distinguishing index of the join g + h.  For
// orders >= 3 the interval is
//   max{deg-based terms} .. max{chi'_D(g), chi'_D(h)} + chi'_D(K_{n,m});
// the callers supply chi'_D of the factors so no search happens here.  A
// factor on fewer than three vertices switches to the small-side rules:
// K_2 + K_2 is exactly 5, and otherwise the join of K_1 or K_2 with any
// connected H satisfies chi'_D <= |V(H)| + 2.  The join of two K_1 is a
// single edge and is rejected.
bound_pair join_bounds(const graph& g, const graph& h, int chi_prime_d_g,
                       int chi_prime_d_h);

// Interval for the proper distinguishing index of the corona g o h, with
// m = |V(h)|: for orders >= 3,
//   max{deg(g)+m, deg(h)+1} .. max{chi'_D(g), chi'_D(h)} + m.
// A K_1 first factor delegates to the join rules (K_1 o H = K_1 + H) and a
// K_2 first factor gives [m+1, m+2].  Other orders below three are outside
// the supported range.
bound_pair corona_bounds(const graph& g, const graph& h, int chi_prime_d_g,
                         int chi_prime_d_h);

// The explicit labeling witnessing the corona upper bound: g keeps its own
// proper distinguishing labeling, every copy of h keeps h's proper labeling,
// and the middle edge from the i-th g-vertex to the j-th vertex of its copy
// gets label M + j with M = max of the two input label counts.  The result
// is re-verified from scratch (properness plus a preserving-automorphism
// search), so the certificate is honest.  Requires g connected with at
// least two edges, h connected, g_labels proper and distinguishing on g,
// and h_labels proper on h when h has edges.
labeling_certificate corona_upper_labeling(const graph& g, const graph& h,
                                           const edge_labeling& g_labels,
                                           const edge_labeling& h_labels);

// Checks on the full automorphism group of corona(g, h) that every
// automorphism maps the g-copy onto itself (inducing an automorphism of g)
// and permutes the h-copies blockwise.  Requires g with at least two
// vertices, both connected; throws group_too_large_error past the limit.
bool corona_automorphism_restriction_check(
    const graph& g, const graph& h,
    std::size_t limit = default_automorphism_limit);

}  // namespace disting
