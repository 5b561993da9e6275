// Frozen reference rows for the documented action tables (numbered 2-6),
// plus the machinery that machine-checks the engine against them.
//
// The row data below is reference data in its own right: it is intentionally
// NOT derived from the generator definitions in element.cpp, so agreement is
// a real cross-check, not a tautology.  Two cells of table 6 as originally
// published are internally inconsistent; the stored rows carry the forced
// corrections, and verify_reference_tables proves the published variants
// impossible (see the erratum records and proofs).
#pragma once

#include <string>
#include <vector>

#include "analysis.hpp"
#include "group.hpp"

namespace tvb {

struct ReferenceRow {
  int table;               // 2..6
  const char *label;       // display label, e.g. "XYZ", "(XYXZ)^2"
  const char *engine_word; // word (grammar form) whose eval realizes the row
  std::array<int, 6> src;  // canonical slot order gamma..nu
  std::array<int, 6> sign;
  int eps;
  std::array<int, 3> coeff;
  int class_size;          // table 6 only, else 0
  int elem_order;          // table 6 only, else 0
};

// All reference rows for one table (2, 3, 4, 5 or 6).
const std::vector<ReferenceRow> &reference_rows(int table);

// An originally published table-6 cell group that cannot be correct, kept
// as data so the impossibility can be re-proved mechanically.
struct ErratumRecord {
  const char *label;           // row label
  const char *description;     // what was wrong and what forces the fix
  std::array<int, 6> printed_src;
  std::array<int, 6> printed_sign;
};

const std::vector<ErratumRecord> &erratum_records();

struct RowCheck {
  int table;
  std::string label;
  bool pass;
  std::string expected; // canonical row text of the stored reference data
  std::string computed; // canonical row text of the engine's element
};

struct TableReport {
  bool all_pass = true;
  std::vector<RowCheck> rows;
  std::vector<std::string> notes; // erratum proofs, coverage statements
};

// Machine-checks every reference row of tables 2-6 against the engine
// (slot data, rho data, and for table 6 also conjugacy class size and
// element order), re-proves the two table-6 errata impossible, and checks
// the historical order-8 correction: eval("XYZ") has order 8 and
// eval("(XYZ)^4") equals eval("(ZXZY)^2") and is not the identity.
// `table` restricts to one table (0 = all).
TableReport verify_reference_tables(const GroupTable &t, int table = 0);

} // namespace tvb
