#include "disting/table_report.hpp"

#include <chrono>
#include <sstream>

#include "disting/errors.hpp"

namespace disting {

namespace {

report_cell make_report_cell(parameter param, const table_cell& expected,
                             const parameter_result& computed) {
  report_cell cell;
  cell.param = param;
  cell.expected = expected;
  cell.computed_lo = computed.lo;
  cell.computed_hi = computed.hi;
  cell.computed_how = computed.how;
  if (computed.exact()) {
    const int v = computed.value();
    cell.agree = expected.lo <= v && v <= expected.hi;
  } else {
    // A bounds-only cell cannot confirm agreement.
    cell.agree = false;
  }

  std::ostringstream note;
  if (expected.flagged && expected.printed.has_value()) {
    note << "reference table prints " << *expected.printed << "; machine-checked value is "
         << expected.lo;
    if (!cell.agree) note << "; ";
  }
  if (!cell.agree) {
    if (!computed.exact()) {
      note << "budget exhausted; sound bounds [" << computed.lo << ", " << computed.hi << "]";
    } else {
      note << "computed " << computed.value() << " but expected ";
      if (expected.exact()) {
        note << expected.lo;
      } else {
        note << "[" << expected.lo << ", " << expected.hi << "]";
      }
      note << " (" << expected.rule << ")";
    }
  }
  const std::string text = note.str();
  if (!text.empty()) cell.note = text;
  return cell;
}

void tally_cell(reproduction_report& report, const report_cell& cell) {
  ++report.cell_count;
  if (cell.agree) ++report.agreeing_cells;
  if (cell.expected.flagged) ++report.flagged_cells;
  if (!cell.agree && !cell.expected.flagged) ++report.disagreeing_cells;
  // A flagged cell that fails to match even the corrected value still counts
  // as a disagreement.
  if (!cell.agree && cell.expected.flagged) ++report.disagreeing_cells;
}

std::string cell_text(const report_cell& cell) {
  std::ostringstream out;
  if (cell.computed_exact()) {
    out << cell.computed_lo;
  } else {
    out << "[" << cell.computed_lo << "," << cell.computed_hi << "]";
  }
  if (cell.expected.flagged) out << "*";
  if (!cell.agree) out << "!";
  return out.str();
}

}  // namespace

reproduction_report run_table_report(const std::vector<family_spec>& instances,
                                     const search_options& opts) {
  reproduction_report report;
  for (const family_spec& spec : instances) {
    const table_row_values expected = table1_oracle(spec);
    const graph g = make_family(spec);

    report_row row;
    row.row_id = expected.row;
    row.spec = spec;
    row.instance = family_display_label(spec);

    const auto start = std::chrono::steady_clock::now();
    row.chi_prime = make_report_cell(parameter::chi_prime, expected.chi_prime,
                                     compute_chromatic_index(g, opts));
    row.d_prime = make_report_cell(parameter::d_prime, expected.d_prime,
                                   compute_distinguishing_index(g, opts));
    row.chi_prime_d = make_report_cell(parameter::chi_prime_d, expected.chi_prime_d,
                                       compute_chromatic_distinguishing_index(g, opts));
    const auto stop = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();

    tally_cell(report, row.chi_prime);
    tally_cell(report, row.d_prime);
    tally_cell(report, row.chi_prime_d);
    report.total_wall_ms += row.wall_ms;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_table_report(const reproduction_report& report) {
  std::ostringstream out;
  out << "row  instance      chi'      D'        chi'_D    ms\n";
  auto pad = [](const std::string& s, std::size_t width) {
    std::string padded = s;
    while (padded.size() < width) padded.push_back(' ');
    return padded;
  };
  for (const report_row& row : report.rows) {
    std::ostringstream id;
    id << row.row_id;
    out << pad(id.str(), 5) << pad(row.instance, 14) << pad(cell_text(row.chi_prime), 10)
        << pad(cell_text(row.d_prime), 10) << pad(cell_text(row.chi_prime_d), 10) << row.wall_ms
        << "\n";
  }
  bool any_note = false;
  for (const report_row& row : report.rows) {
    for (const report_cell* cell : {&row.chi_prime, &row.d_prime, &row.chi_prime_d}) {
      if (!cell->note.has_value()) continue;
      if (!any_note) {
        out << "notes:\n";
        any_note = true;
      }
      out << "  " << row.instance << " " << to_string(cell->param) << ": " << *cell->note << "\n";
    }
  }
  out << "totals: " << report.cell_count << " cells, " << report.agreeing_cells << " agreeing, "
      << report.flagged_cells << " flagged, " << report.disagreeing_cells
      << " disagreeing, " << report.total_wall_ms << " ms\n";
  out << "legend: * printed value corrected, ! disagreement or bounds-only\n";
  return out.str();
}

}  // namespace disting
