// Named verification checks covering every structural claim the library
// makes: group enumeration, kernel and quotient structure, the frozen
// reference tables, the concrete model's oracle and coherence properties,
// and the algebraic property suites.
#pragma once

#include <string>
#include <vector>

namespace tvb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string summary;               // one-line outcome
  std::vector<std::string> details;  // per-item lines, "ok: ..." / "FAIL: ..."
  double seconds = 0.0;
};

struct VerifyReport {
  bool all_pass = true;
  std::vector<CheckResult> checks;
};

// The check names, in canonical run order.
const std::vector<std::string> &verify_check_names();

// Runs one named check.  `table` restricts the reference-table check to a
// single table (0 = all tables).  Throws std::invalid_argument for an
// unknown name.
CheckResult run_check(const std::string &name, int table = 0);

// Runs a single named check, or every check when `check` is empty.
VerifyReport run_verify(const std::string &check = "", int table = 0);

// Plain-text rendering: one PASS/FAIL line per check, detail lines for
// failures, and a final tally line.
std::string verify_report_text(const VerifyReport &r);

} // namespace tvb
