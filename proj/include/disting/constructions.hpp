#pragma once

#include <string>
#include <vector>

#include "disting/families.hpp"
#include "disting/labeling.hpp"

namespace disting {

// Explicit labelings with machine-checked certificates.  Each constructor
// builds the labeling, re-verifies properness and distinguishing through the
// symmetry machinery, and returns the honest outcome; a certificate is never
// trusted unverified.  Constructors throw parameter_error only for arguments
// outside their stated domain, not for verification results.

// Circulant labeling of K_{s,t} with k = s labels: row i of the grid is
// (1,2,...,s) shifted right i-1 times.  Requires s > t >= 1.  Proper and
// distinguishing for every such pair.
labeling_certificate construct_bipartite_labeling(int s, int t);

// Round-robin one-factorization of K_{2n} (vertex 2n-1 fixed, the others
// rotated); the edges of factor r carry label r+1, so k = 2n-1.  Requires
// n >= 2.  Proper always; distinguishing from n >= 3 on, and the n = 2
// certificate honestly reports distinguishing = false with a witness.
labeling_certificate construct_complete_even_labeling(int n);

// Book labeling of B_n with k = n+1: spine 0-1 gets n+1 and page i gets
// i on 0-v_i, i+2 on v_i-w_i and i+1 on w_0-w_i, all modulo n with
// representatives 1..n.  Requires n >= 2.  At n = 2 the page arithmetic
// collides (labels i and i+2 agree mod 2) and in fact no proper
// distinguishing 3-labeling of B_2 exists, so the certificate comes from
// search (k = 4) and says so in its note.
labeling_certificate construct_book_labeling(int n);

// Three-label cycle labeling of C_{2n}, n >= 4: consecutive edges e_1..e_2n
// get label 3 on e_1 and e_4, label 2 on odd positions other than 1 and
// label 1 on even positions other than 4.
labeling_certificate construct_even_cycle_labeling(int n);

// Three-label path labeling of P_{2n}, n >= 2: 1 on the first end edge,
// then alternating 2,3 along the path.
labeling_certificate construct_even_path_labeling(int n);

// Construction registry used by the command line: maps a construction name
// plus a family instance to the constructor above, checking that the family
// matches ("bipartite-circulant" needs kst:s,t with s > t, "one-factorization"
// needs complete:2n, "book-labeling" needs book:n, "even-cycle" cycle:2n,
// "even-path" path:2n).
const std::vector<std::string>& construction_names();
labeling_certificate run_construction(const std::string& name,
                                      const family_spec& spec);

}  // namespace disting
