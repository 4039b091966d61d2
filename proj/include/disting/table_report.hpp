#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disting/families.hpp"
#include "disting/search.hpp"
#include "disting/table.hpp"

namespace disting {

// One parameter cell of the reproduction report: the reference value (as an
// interval, exact when lo == hi), what the engines computed, and whether the
// two agree.  Flagged cells compare against the corrected value and always
// carry a note quoting what the reference table prints.
struct report_cell {
  parameter param = parameter::chi_prime;
  table_cell expected;
  int computed_lo = 0;
  int computed_hi = 0;
  method computed_how = method::search;
  bool agree = false;
  std::optional<std::string> note;

  bool computed_exact() const { return computed_lo == computed_hi; }
};

struct report_row {
  int row_id = 0;
  family_spec spec;
  std::string instance;  // display label, e.g. "K_{4,3}"
  report_cell chi_prime, d_prime, chi_prime_d;
  long long wall_ms = 0;  // the only nondeterministic bytes in the report

  // True when no cell disagrees with its (corrected, where flagged) value.
  bool all_agree() const {
    return chi_prime.agree && d_prime.agree && chi_prime_d.agree;
  }
};

struct reproduction_report {
  std::vector<report_row> rows;
  int cell_count = 0;
  int agreeing_cells = 0;
  int flagged_cells = 0;      // cells whose reference print is known wrong
  int disagreeing_cells = 0;  // non-flagged cells that failed to agree
  long long total_wall_ms = 0;
};

// Computes chi', D' and chi'_D by search for every instance and compares each
// value against the bundled reference table.  Budget exhaustion degrades a
// cell to bounds with a note instead of failing the run.  Rows are reported
// in input order; pass default_table_instances() for the standard report.
reproduction_report run_table_report(const std::vector<family_spec>& instances,
                                     const search_options& opts = {});

// Fixed-width human-readable rendering with one line per row, a notes block,
// and a totals line.
std::string render_table_report(const reproduction_report& report);

}  // namespace disting
