#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <set>
#include <string>

#include "group.hpp"
#include "tables.hpp"
#include "word.hpp"

using namespace tvb;

TEST_CASE("reference rows are available per table and well formed") {
  std::set<std::string> labels;
  int total = 0;
  for (int table = 2; table <= 6; ++table) {
    auto rows = reference_rows(table);
    CHECK(!rows.empty());
    total += (int)rows.size();
    for (const auto &row : rows) {
      CHECK(row.table == table);
      CHECK(row.label[0] != '\0');
      labels.insert(std::to_string(table) + ":" + row.label);
      // The stored engine word must reach an element whose recorded action
      // matches the row exactly.
      DualityElement e = eval_word(parse_word(row.engine_word));
      for (int s = 0; s < kSlotCount; ++s) {
        CHECK(e.theta.slots.src[s] == row.src[s]);
        CHECK(e.theta.slots.sign[s] == row.sign[s]);
      }
      CHECK(e.theta.rho.eps == row.eps);
      for (int p = 0; p < kPairCount; ++p) {
        CHECK(e.theta.rho.coeff[p] == row.coeff[p]);
      }
    }
  }
  CHECK(labels.size() == (std::size_t)total); // no duplicate labels per table
  CHECK(reference_rows(6).size() == 10);
  CHECK_THROWS_AS(reference_rows(7), std::invalid_argument);
  CHECK_THROWS_AS(reference_rows(1), std::invalid_argument);
}

TEST_CASE("full reference verification passes against the enumerated group") {
  const GroupTable &t = dg3();
  TableReport report = verify_reference_tables(t);
  CHECK(report.all_pass);
  for (const auto &check : report.rows) {
    INFO(check.label);
    CHECK(check.pass);
  }
  for (const auto &note : report.notes) {
    INFO(note);
    CHECK(note.rfind("ok: ", 0) == 0);
  }
}

TEST_CASE("verification can be restricted to one table") {
  const GroupTable &t = dg3();
  for (int table = 2; table <= 6; ++table) {
    TableReport report = verify_reference_tables(t, table);
    CHECK(report.all_pass);
    for (const auto &check : report.rows) {
      CHECK(check.table == table);
    }
  }
}

TEST_CASE("the two corrected rows are recorded with machine-checkable data") {
  auto records = erratum_records();
  CHECK(records.size() == 2);
  std::set<std::string> labels;
  for (const auto &r : records) {
    labels.insert(r.label);
    CHECK(std::strlen(r.description) > 0);
  }
  CHECK(labels.count("XYZ") == 1);
  CHECK(labels.count("XZXY") == 1);
}

TEST_CASE("printed variant of the order-8 row is inconsistent, stored row is not") {
  // Locate the stored row for label XYZ in the class table.
  ReferenceRow stored{};
  bool found = false;
  for (const auto &row : reference_rows(6)) {
    if (std::string(row.label) == "XYZ") {
      stored = row;
      found = true;
    }
  }
  REQUIRE(found);
  CHECK(stored.elem_order == 8);
  CHECK(stored.class_size == 12);

  // The stored slot data squares twice to a nontrivial involution...
  SignedSlotMap m;
  for (int s = 0; s < kSlotCount; ++s) {
    m.src[s] = stored.src[s];
    m.sign[s] = stored.sign[s];
  }
  SignedSlotMap fourth =
      compose_slots(compose_slots(m, m), compose_slots(m, m));
  CHECK_FALSE(fourth.is_identity());

  // ...while the printed variant from the erratum record squares twice to the
  // identity, which is impossible for an element of order 8.
  for (const auto &r : erratum_records()) {
    if (std::string(r.label) != "XYZ") continue;
    SignedSlotMap p;
    for (int s = 0; s < kSlotCount; ++s) {
      p.src[s] = r.printed_src[s];
      p.sign[s] = r.printed_sign[s];
    }
    SignedSlotMap pf = compose_slots(compose_slots(p, p), compose_slots(p, p));
    CHECK(pf.is_identity());
  }
}

TEST_CASE("printed variant of the four-letter row violates index coupling") {
  // Each slot map realized by a group element must send the slot labelled by
  // an index pair to a slot labelled by a permuted index pair, consistently
  // for one permutation of the four indices.  The printed variant admits no
  // such permutation; the stored row couples with the permutation of YXZX.
  for (const auto &r : erratum_records()) {
    if (std::string(r.label) != "XZXY") continue;
    bool any_perm_couples = false;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      Perm4 perm;
      perm.map = p;
      bool ok = true;
      for (int s = 0; s < kSlotCount && ok; ++s) {
        auto subset = slot_index_subset(s);
        auto image = slot_index_subset(r.printed_src[s]);
        std::set<int> want;
        for (int i : subset) want.insert(perm(i));
        ok = want == std::set<int>(image.begin(), image.end());
      }
      if (ok) any_perm_couples = true;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK_FALSE(any_perm_couples);

    // The stored counterpart does couple, with the permutation of YXZX.
    ReferenceRow stored{};
    bool found = false;
    for (const auto &row : reference_rows(6)) {
      if (std::string(row.label) == "XZXY") {
        stored = row;
        found = true;
      }
    }
    REQUIRE(found);
    Perm4 want_perm = eval_word(parse_word("YXZX")).perm;
    bool couples = true;
    for (int s = 0; s < kSlotCount && couples; ++s) {
      auto subset = slot_index_subset(s);
      auto image = slot_index_subset(stored.src[s]);
      std::set<int> want;
      for (int i : subset) want.insert(want_perm(i));
      couples = want == std::set<int>(image.begin(), image.end());
    }
    CHECK(couples);
  }
}
