#pragma once

#include "disting/search.hpp"

namespace disting {

// Closed-form values of the distinguishing index on three families, exposed
// as parameter_result so callers can mix them with searched values.

// D' of the complete bipartite graph K_{p,q}.  Orientation is normalized to
// p <= q.  Off the boundary the value is exact: with r the least integer
// >= 2 satisfying q <= r^p and T = r^p - ceil(log_r p), the index is r when
// q <= T-1 and r+1 when q >= T+1.  Equal sides are special: K_{1,1} is a
// single edge (no distinguishing edge labeling exists), K_{p,p} takes the
// value 3 for p in {2,3} and 2 for p >= 4.  The remaining boundary q = T
// comes back as the interval [r, r+1] unless resolve_boundary is set, in
// which case the exact value is settled by search and carries a certificate.
parameter_result d_prime_complete_bipartite(int p, int q,
                                            bool resolve_boundary = false,
                                            const search_options& opts = {});

// D' of the friendship graph F_n (n triangles sharing a vertex), n >= 2:
// the ceiling of the real root of x^2 (x - 1) = 2n, evaluated in floating
// point with an exact integer recheck so boundary roots cannot round wrong.
parameter_result d_prime_friendship(int n);

// D' of K_{1,n} x P_m (Cartesian product), n >= 2, m >= 2: the least k with
// k^(2m-1) >= n, except that m = 2 with n a perfect cube r^3 gives r+1.
// The m = 2 case is the book graph B_n.
parameter_result d_prime_star_path(int n, int m);

}  // namespace disting
