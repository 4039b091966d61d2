#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disting/families.hpp"

namespace disting {

// One expected cell of the bundled reference table: an interval (almost
// always a point), the rule that produced it, and - when the table's
// printed value is known wrong - the printed value next to the corrected
// one so reports can surface the discrepancy instead of hiding it.
struct table_cell {
  int lo = 0;
  int hi = 0;
  std::string rule;            // "fixed", "degree", or a formula name
  bool flagged = false;        // printed value corrected by machine check
  std::optional<int> printed;  // the table's printed value when flagged

  bool exact() const { return lo == hi; }
};

// Expected values (chi', D', chi'_D) of one reference-table row applied to a
// concrete family instance.  Row numbers follow the reference numbering,
// which skips 7.
struct table_row_values {
  int row = 0;
  family_spec spec;
  std::string label;
  table_cell chi_prime;
  table_cell d_prime;
  table_cell chi_prime_d;
};

// Expected triple for any family instance the reference table covers;
// throws parameter_error for instances outside the table (subdivided stars,
// orders too small for a row, friendship below n = 3).
table_row_values table1_oracle(const family_spec& spec);

// The pinned desk-scale instances reproduced by the default report, in row
// order; mirrors the instance list shipped in share/table1_rows.json.
std::vector<family_spec> default_table_instances();

// Display name used in reports: "K_3", "C_10", "K_{4,3}", "T''_{2,3}", ...
std::string family_display_label(const family_spec& spec);

}  // namespace disting
