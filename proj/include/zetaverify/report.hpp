#pragma once

// ============================================================================
// IdentityReport: the record every verification check produces — both sides
// of an identity, the error actually achieved, the tolerance it was judged
// against, and the truncation bound the computation carried.
//
// Pass rule: relative error against |rhs| when the reference side is
// meaningfully nonzero (|rhs| > 1e-9), absolute error otherwise.
// ============================================================================

#include <string>
#include <utility>
#include <vector>

#include "zetaverify/types.hpp"

namespace zv {

struct IdentityReport {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_error = 0.0;   // |lhs - rhs|
  double rel_error = 0.0;   // abs_error / max(|rhs|, 1e-300)
  double tolerance = 0.0;
  double tail_bound = 0.0;  // truncation bound carried by the computation
  double elapsed_ms = 0.0;
  bool pass = false;
};

// Builds a report with abs/rel/pass derived from lhs, rhs, tolerance.
IdentityReport make_identity_report(
    std::string name, std::vector<std::pair<std::string, double>> params,
    const Complex& lhs, const Complex& rhs, double tolerance,
    double tail_bound, double elapsed_ms);

// One-line JSON object with every numeric field at 17 significant digits;
// keys: name, params, lhs_re, lhs_im, rhs_re, rhs_im, abs_error, rel_error,
// tail_bound, tolerance, elapsed_ms, pass.
std::string to_json_line(const IdentityReport& report);

// CSV: a single header row plus one row per report.  params is flattened
// into one semicolon-separated cell so the column count is fixed.
std::string csv_header();
std::string to_csv_row(const IdentityReport& report);

// Fixed-width human-readable table row (and its header) for terminal output.
std::string table_header();
std::string to_table_row(const IdentityReport& report);

}  // namespace zv
