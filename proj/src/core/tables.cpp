#include "tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvb {

namespace {

// Shorthand used only in the data blocks below.
constexpr int G = kGamma, B = kBeta, A = kAlpha, L = kLambda, M = kMu,
              N = kNu;

const std::vector<ReferenceRow> kTable2 = {
    {2, "X", "X", {M, N, A, L, G, B}, {-1, -1, +1, -1, -1, -1}, -1, {0, +1, +1}, 0, 0},
    {2, "Y", "Y", {L, B, N, G, M, A}, {-1, +1, -1, -1, -1, -1}, -1, {+1, 0, +1}, 0, 0},
    {2, "Z", "Z", {G, L, M, B, A, N}, {+1, -1, -1, -1, -1, -1}, -1, {+1, +1, 0}, 0, 0},
};

// Intermediate products building up to the first kernel involution.  Row
// labels follow the "new from old" reading (rightmost letter innermost); the
// engine word is the reversed label because eval applies leftmost first.
const std::vector<ReferenceRow> kTable3 = {
    {3, "X", "X", {M, N, A, L, G, B}, {-1, -1, +1, -1, -1, -1}, -1, {0, +1, +1}, 0, 0},
    {3, "YX", "XY", {M, A, N, G, L, B}, {+1, +1, -1, +1, +1, -1}, +1, {0, -1, -1}, 0, 0},
    {3, "XYX", "XYX", {G, A, B, M, L, N}, {-1, +1, +1, -1, -1, +1}, -1, {0, 0, 0}, 0, 0},
    {3, "XYXZ", "ZXYX", {G, M, L, A, B, N}, {-1, +1, +1, -1, -1, -1}, +1, {-1, -1, 0}, 0, 0},
    {3, "(XYXZ)^2", "(ZXYX)^2", {G, B, A, L, M, N}, {+1, -1, -1, -1, -1, +1}, +1, {0, 0, 0}, 0, 0},
};

const std::vector<ReferenceRow> kTable4 = {
    {4, "(XYXZ)^2", "(ZXYX)^2", {G, B, A, L, M, N}, {+1, -1, -1, -1, -1, +1}, +1, {0, 0, 0}, 0, 0},
    {4, "(YZYX)^2", "(XYZY)^2", {G, B, A, L, M, N}, {-1, -1, +1, +1, -1, -1}, +1, {0, 0, 0}, 0, 0},
    {4, "(ZXZY)^2", "(YZXZ)^2", {G, B, A, L, M, N}, {-1, +1, -1, -1, +1, -1}, +1, {0, 0, 0}, 0, 0},
};

const std::vector<ReferenceRow> kTable5 = {
    {5, "(XYZ)^4", "(ZYX)^4", {G, B, A, L, M, N}, {-1, +1, -1, -1, +1, -1}, +1, {0, 0, 0}, 0, 0},
};

const std::vector<ReferenceRow> kTable6 = {
    {6, "1", "1", {G, B, A, L, M, N}, {+1, +1, +1, +1, +1, +1}, +1, {0, 0, 0}, 1, 1},
    {6, "(XYXZ)^2", "(ZXYX)^2", {G, B, A, L, M, N}, {+1, -1, -1, -1, -1, +1}, +1, {0, 0, 0}, 3, 2},
    {6, "(XYZ)^2", "(ZYX)^2", {N, B, L, A, M, G}, {+1, +1, -1, +1, +1, -1}, +1, {-1, 0, -1}, 3, 4},
    {6, "(ZYX)^2", "(XYZ)^2", {N, B, L, A, M, G}, {-1, +1, +1, -1, +1, +1}, +1, {-1, 0, -1}, 3, 4},
    // beta and mu cells corrected: the published variant violates the
    // index-coupling every slot map must satisfy (proved impossible below).
    {6, "XZXY", "YXZX", {N, B, L, A, M, G}, {+1, -1, +1, -1, -1, -1}, +1, {-1, 0, -1}, 6, 4},
    {6, "XY", "YX", {L, N, B, M, G, A}, {+1, -1, +1, +1, +1, -1}, +1, {-1, 0, -1}, 32, 3},
    {6, "Z", "Z", {G, L, M, B, A, N}, {+1, -1, -1, -1, -1, -1}, -1, {+1, +1, 0}, 12, 2},
    {6, "XYZYXZY", "YZXYZYX", {G, L, M, B, A, N}, {-1, -1, +1, +1, -1, +1}, -1, {+1, +1, 0}, 12, 4},
    // gamma sign corrected: with the published sign the row's fourth power
    // is the identity, contradicting the element's order 8 (proved below).
    {6, "XYZ", "ZYX", {L, M, G, N, B, A}, {+1, -1, -1, +1, -1, +1}, -1, {+1, +1, 0}, 12, 8},
    {6, "ZYX", "XYZ", {A, M, N, G, B, L}, {-1, -1, +1, +1, -1, +1}, -1, {0, +1, +1}, 12, 8},
};

const std::vector<ErratumRecord> kErrata = {
    {"XYZ",
     "gamma cell sign: published -lambda, stored +lambda; the published slot "
     "map has identity fourth power, so its element would have order at most "
     "4, contradicting the row's order 8; the stored map's fourth power "
     "reproduces the (XYZ)^4 row exactly",
     {L, M, G, N, B, A},
     {-1, -1, -1, +1, -1, +1}},
    {"XZXY",
     "beta and mu cells transposed: published beta<-mu, mu<-beta; no "
     "permutation of the four index symbols induces the published slot map "
     "(index-coupling fails for all 24), while the stored row couples with "
     "exactly one",
     {N, M, L, A, B, G},
     {+1, -1, +1, -1, -1, -1}},
};

ThetaAut theta_from_row(const ReferenceRow &row) {
  ThetaAut t;
  for (int s = 0; s < kSlotCount; ++s) {
    t.slots.src[s] = row.src[s];
    t.slots.sign[s] = row.sign[s];
  }
  t.rho.eps = row.eps;
  t.rho.coeff = row.coeff;
  return t;
}

SignedSlotMap slots_from(const std::array<int, 6> &src,
                         const std::array<int, 6> &sign) {
  SignedSlotMap m;
  for (int s = 0; s < kSlotCount; ++s) {
    m.src[s] = src[s];
    m.sign[s] = sign[s];
  }
  return m;
}

// Does some permutation of the index symbols induce this slot map?
bool slot_map_has_coupling_perm(const SignedSlotMap &m, Perm4 *found) {
  std::array<int, 4> p = {0, 1, 2, 3};
  do {
    Perm4 perm{p};
    bool ok = true;
    for (int s = 0; s < kSlotCount && ok; ++s) {
      auto sub = slot_index_subset(s);
      std::array<int, 2> image = {perm(sub[0]), perm(sub[1])};
      if (image[0] > image[1]) std::swap(image[0], image[1]);
      if (slot_index_subset(m.src[s]) != image) ok = false;
    }
    if (ok) {
      if (found) *found = perm;
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

} // namespace

const std::vector<ReferenceRow> &reference_rows(int table) {
  switch (table) {
  case 2: return kTable2;
  case 3: return kTable3;
  case 4: return kTable4;
  case 5: return kTable5;
  case 6: return kTable6;
  }
  throw std::invalid_argument("reference tables are numbered 2 to 6");
}

const std::vector<ErratumRecord> &erratum_records() { return kErrata; }

TableReport verify_reference_tables(const GroupTable &t, int table) {
  TableReport report;
  auto note = [&report](bool ok, const std::string &text) {
    report.notes.push_back((ok ? "ok: " : "FAIL: ") + text);
    if (!ok) report.all_pass = false;
  };

  auto classes = conjugacy_classes(t);
  auto class_of = [&](int idx) -> const ConjClass & {
    for (const auto &c : classes) {
      if (std::binary_search(c.members.begin(), c.members.end(), idx))
        return c;
    }
    throw std::logic_error("element missing from class partition");
  };

  std::vector<int> table6_class_reps;
  for (int tab = 2; tab <= 6; ++tab) {
    if (table != 0 && tab != table) continue;
    for (const ReferenceRow &row : reference_rows(tab)) {
      DualityElement e = eval_word(parse_word(row.engine_word));
      ThetaAut expected = theta_from_row(row);
      RowCheck check;
      check.table = tab;
      check.label = row.label;
      check.expected = action_row_text(expected);
      check.computed = action_row_text(e.theta);
      check.pass = e.theta == expected;
      if (tab == 6) {
        const ConjClass &c = class_of(t.index_of(e));
        if (c.size() != row.class_size || c.order != row.elem_order) {
          check.pass = false;
          check.computed += " [class " + std::to_string(c.size()) + ", order " +
                            std::to_string(c.order) + "]";
          check.expected += " [class " + std::to_string(row.class_size) +
                            ", order " + std::to_string(row.elem_order) + "]";
        }
        table6_class_reps.push_back(c.rep);
      }
      if (!check.pass) report.all_pass = false;
      report.rows.push_back(std::move(check));
    }
  }

  if (table == 0 || table == 6) {
    std::sort(table6_class_reps.begin(), table6_class_reps.end());
    table6_class_reps.erase(
        std::unique(table6_class_reps.begin(), table6_class_reps.end()),
        table6_class_reps.end());
    note(table6_class_reps.size() == classes.size() &&
             classes.size() == 10,
         "the ten table-6 rows hit all ten conjugacy classes exactly once");
  }

  if (table == 0 || table == 5 || table == 6) {
    // Order-8 correction: (XYZ)^4 is a nontrivial kernel involution, equal
    // to (ZXZY)^2, so XYZ has order 8.
    DualityElement p4 = eval_word(parse_word("(XYZ)^4"));
    note(!equal_elements(p4, identity_element()),
         "(XYZ)^4 is not the identity");
    note(equal_elements(p4, eval_word(parse_word("(ZXZY)^2"))),
         "(XYZ)^4 equals (ZXZY)^2");
    note(element_order(eval_word("XYZ")) == 8, "XYZ has order 8");
  }

  if (table == 0 || table == 6) {
    // Erratum proofs.
    const ErratumRecord &e_xyz = kErrata[0];
    SignedSlotMap printed = slots_from(e_xyz.printed_src, e_xyz.printed_sign);
    SignedSlotMap printed4 =
        compose_slots(compose_slots(printed, printed),
                      compose_slots(printed, printed));
    note(printed4.is_identity(),
         "published XYZ row: slot map has identity fourth power (forces "
         "order <= 4, impossible for an order-8 element)");
    const ReferenceRow *stored_xyz = nullptr;
    const ReferenceRow *stored_p4 = nullptr;
    for (const auto &r : kTable6) {
      if (std::string(r.label) == "XYZ") stored_xyz = &r;
    }
    for (const auto &r : kTable5) stored_p4 = &r;
    SignedSlotMap stored = slots_from(stored_xyz->src, stored_xyz->sign);
    SignedSlotMap stored4 = compose_slots(compose_slots(stored, stored),
                                          compose_slots(stored, stored));
    note(stored4 == slots_from(stored_p4->src, stored_p4->sign),
         "stored XYZ row: slot map's fourth power equals the (XYZ)^4 row");

    const ErratumRecord &e_xzxy = kErrata[1];
    SignedSlotMap bad = slots_from(e_xzxy.printed_src, e_xzxy.printed_sign);
    note(!slot_map_has_coupling_perm(bad, nullptr),
         "published XZXY row: no permutation of the index symbols induces "
         "its slot map (impossible for any group element)");
    const ReferenceRow *stored_xzxy = nullptr;
    for (const auto &r : kTable6) {
      if (std::string(r.label) == "XZXY") stored_xzxy = &r;
    }
    Perm4 coupling;
    bool has = slot_map_has_coupling_perm(
        slots_from(stored_xzxy->src, stored_xzxy->sign), &coupling);
    note(has && coupling ==
                    eval_word(parse_word(stored_xzxy->engine_word)).perm,
         "stored XZXY row: slot map couples with exactly the element's "
         "index permutation");
  }

  return report;
}

} // namespace tvb
