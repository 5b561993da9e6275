#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "analysis.hpp"
#include "concrete.hpp"
#include "element.hpp"
#include "group.hpp"
#include "tables.hpp"
#include "word.hpp"

namespace tvb {

namespace {

void note(CheckResult &r, bool ok, const std::string &line) {
  r.details.push_back(std::string(ok ? "ok: " : "FAIL: ") + line);
  if (!ok)
    r.pass = false;
}

std::string plural(int n, const char *noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

bool in_klein(const Perm4 &p) {
  if (p.is_identity())
    return true;
  for (int i = 0; i < 4; ++i) {
    if (p(i) == i || p(p(i)) != i)
      return false;
  }
  return true;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ----- individual checks -----

CheckResult check_order() {
  CheckResult r{"order", true, "", {}, 0.0};
  auto t0 = std::chrono::steady_clock::now();
  GroupTable fresh = enumerate_dg3();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  note(r, fresh.size() == 96,
       "breadth-first closure of {X, Y, Z} has exactly 96 elements (got " +
           std::to_string(fresh.size()) + ")");
  note(r, secs < 1.0,
       secs < 1.0 ? "enumeration finished within the 1 s budget"
                  : "enumeration took " + std::to_string(secs) + " s (>= 1 s)");
  note(r, fresh.elements[0].theta.is_identity() &&
              fresh.elements[0].perm.is_identity(),
       "element 0 is the identity");
  r.summary = "group order 96 by breadth-first enumeration, within the 1 s "
              "budget";
  return r;
}

CheckResult check_kernel() {
  CheckResult r{"kernel", true, "", {}, 0.0};
  const GroupTable &t = dg3();
  SubgroupDescriptor k;
  try {
    k = kernel_of_pi(t);
  } catch (const std::logic_error &e) {
    note(r, false, std::string("kernel computation failed: ") + e.what());
    r.summary = "kernel structure broken";
    return r;
  }
  note(r, (int)k.members.size() == 4, "kernel has 4 elements");
  note(r, k.is_normal, "kernel is normal");

  DualityElement ka = eval_word(parse_word("(XYXZ)^2"));
  DualityElement kb = eval_word(parse_word("(YZYX)^2"));
  DualityElement kc = eval_word(parse_word("(ZXZY)^2"));
  std::vector<int> expect = sorted(
      {0, t.index_of(ka), t.index_of(kb), t.index_of(kc)});
  note(r, expect == k.members,
       "kernel = {1, (XYXZ)^2, (YZYX)^2, (ZXZY)^2}");

  bool involutions = true;
  for (int m : k.members) {
    if (m != 0 && t.order[m] != 2)
      involutions = false;
  }
  note(r, involutions, "every nonidentity kernel element has order 2");
  note(r, equal_elements(compose(kb, ka), kc) &&
              equal_elements(compose(ka, kb), kc),
       "(YZYX)^2 * (XYXZ)^2 = (ZXZY)^2 (both multiplication orders)");
  r.summary = "kernel of the index projection is the Klein four-group "
              "{1, (XYXZ)^2, (YZYX)^2, (ZXZY)^2}, matching the relator closure";
  return r;
}

CheckResult check_tables(int table) {
  CheckResult r{"tables", true, "", {}, 0.0};
  TableReport rep = verify_reference_tables(dg3(), table);
  int n = 0;
  for (const RowCheck &row : rep.rows) {
    ++n;
    note(r, row.pass,
         "table " + std::to_string(row.table) + " row " + row.label +
             (row.pass ? "" : ": expected [" + row.expected + "] computed [" +
                                  row.computed + "]"));
  }
  for (const std::string &line : rep.notes) {
    bool ok = line.rfind("ok: ", 0) == 0;
    r.details.push_back(line);
    if (!ok)
      r.pass = false;
  }
  r.summary = plural(n, "reference row") + " reproduced exactly" +
              (table ? " (table " + std::to_string(table) + ")" : "") +
              (r.pass ? "" : " -- WITH FAILURES");
  return r;
}

CheckResult check_classes() {
  CheckResult r{"classes", true, "", {}, 0.0};
  const GroupTable &t = dg3();
  std::vector<ConjClass> cs = conjugacy_classes(t);
  note(r, (int)cs.size() == 10, "exactly 10 conjugacy classes (got " +
                                    std::to_string((int)cs.size()) + ")");

  std::multiset<std::pair<int, int>> got, want = {
      {1, 1}, {3, 2}, {3, 4}, {3, 4}, {6, 4},
      {32, 3}, {12, 2}, {12, 4}, {12, 8}, {12, 8}};
  int total = 0;
  bool divides = true;
  for (const ConjClass &c : cs) {
    got.insert({c.size(), c.order});
    total += c.size();
    if (96 % c.size() != 0)
      divides = false;
  }
  note(r, got == want,
       "class (size, order) multiset is {(1,1),(3,2),(3,4),(3,4),(6,4),"
       "(32,3),(12,2),(12,4),(12,8),(12,8)}");
  note(r, total == 96, "class sizes sum to 96");
  note(r, divides, "every class size divides 96");

  // The ten documented representative rows land in ten distinct classes
  // with the documented sizes and orders.
  std::set<int> hit;
  bool reps_ok = true;
  for (const ReferenceRow &row : reference_rows(6)) {
    int idx = t.index_of(eval_word(parse_word(row.engine_word)));
    for (std::size_t ci = 0; ci < cs.size(); ++ci) {
      if (std::binary_search(cs[ci].members.begin(), cs[ci].members.end(),
                             idx)) {
        hit.insert((int)ci);
        if (cs[ci].size() != row.class_size || cs[ci].order != row.elem_order)
          reps_ok = false;
        break;
      }
    }
  }
  note(r, reps_ok && (int)hit.size() == 10,
       "the ten documented class representatives cover all ten classes with "
       "matching size and order");
  r.summary = "10 conjugacy classes with the documented (size, order) data";
  return r;
}

CheckResult check_normal() {
  CheckResult r{"normal", true, "", {}, 0.0};
  const GroupTable &t = dg3();
  std::vector<SubgroupDescriptor> ns = normal_subgroups(t);
  std::vector<int> sizes;
  for (const auto &n : ns)
    sizes.push_back((int)n.members.size());
  note(r, sizes == std::vector<int>({1, 4, 16, 48, 96}),
       "exactly 5 normal subgroups, of sizes 1, 4, 16, 48, 96");
  if (sizes != std::vector<int>({1, 4, 16, 48, 96})) {
    r.summary = "normal subgroup lattice wrong";
    return r;
  }

  note(r, ns[1].members == kernel_of_pi(t).members,
       "the size-4 normal subgroup is the kernel");

  // Size 16: preimage of the Klein subgroup V of S4; generated by the two
  // squared 3-letter rotations; isomorphic to Z4 x Z4.
  const SubgroupDescriptor &h = ns[2];
  std::vector<int> klein_fiber;
  for (int i = 0; i < t.size(); ++i) {
    if (in_klein(t.elements[i].perm))
      klein_fiber.push_back(i);
  }
  note(r, h.members == klein_fiber,
       "the size-16 normal subgroup is the full preimage of V in S4");
  int ia = t.index_of(eval_word(parse_word("(ZXY)^2")));
  int ib = t.index_of(eval_word(parse_word("(XYZ)^2")));
  note(r, sorted(subgroup_generated(t, {ia, ib})) == h.members,
       "the size-16 subgroup equals <(ZXY)^2, (XYZ)^2>");
  bool abelian = true, exponent4 = true;
  int involutions = 0, order4 = 0;
  for (int a : h.members) {
    if (t.order[a] == 2)
      ++involutions;
    if (t.order[a] == 4)
      ++order4;
    if (t.order[a] > 4)
      exponent4 = false;
    for (int b : h.members) {
      if (t.mult[a][b] != t.mult[b][a])
        abelian = false;
    }
  }
  note(r, abelian && exponent4 && involutions == 3 && order4 == 12,
       "the size-16 subgroup is abelian of exponent 4 with exactly 3 "
       "involutions: Z4 x Z4");

  // Size 48: even-length words = positive-signature elements.
  const SubgroupDescriptor &e48 = ns[3];
  std::vector<int> even_fiber, even_witness;
  for (int i = 0; i < t.size(); ++i) {
    if (t.elements[i].perm.sign() > 0)
      even_fiber.push_back(i);
    if (t.elements[i].witness.size() % 2 == 0)
      even_witness.push_back(i);
  }
  note(r, e48.members == even_fiber,
       "the size-48 normal subgroup is the preimage of A4");
  note(r, e48.members == even_witness,
       "the size-48 normal subgroup consists of the even-length words");

  bool lagrange = true;
  for (int s : sizes)
    if (96 % s != 0)
      lagrange = false;
  note(r, lagrange, "all normal subgroup sizes divide 96");
  r.summary = "5 normal subgroups (sizes 1, 4, 16, 48, 96) with the "
              "documented identifications";
  return r;
}

CheckResult check_semidirect() {
  CheckResult r{"semidirect", true, "", {}, 0.0};
  StructureReport s = semidirect_structure_check(dg3());
  note(r, s.abc_orders == std::array<int, 3>({4, 4, 4}),
       "a = (ZXY)^2, b = (XYZ)^2, c = (YZX)^2 all have order 4");
  note(r, s.commute, "a, b, c commute pairwise");
  note(r, s.abc_identity, "a * b * c = 1");
  note(r, s.h_size == 16 && s.h_abelian && s.h_exponent4 &&
              s.h_involutions == 3,
       "H = <a, b> is Z4 x Z4 of order 16");
  note(r, s.h_normal, "H is normal");
  note(r, s.h_equals_even_double_transposition_fiber,
       "H is the preimage of the Klein subgroup V");
  note(r, s.s_size == 6, "<X, Y> has order 6");
  note(r, s.intersection_size == 1, "H and <X, Y> intersect trivially");
  note(r, s.product_covers, "H . <X, Y> covers the whole group");
  note(r, s.conj_permutes_abc, "conjugation by X and Y permutes {a, b, c}");
  note(r, s.ok, "aggregate structure flag");
  r.summary = "group = H . <X, Y> with H = <a, b> = Z4 x Z4 normal of order "
              "16 and <X, Y> of order 6";
  return r;
}

CheckResult check_split() {
  CheckResult r{"split", true, "", {}, 0.0};
  SplitReport sp = is_split_extension(dg3());
  note(r, sp.candidates_tested == 64, "64 candidate sections tested");
  note(r, !sp.split && sp.candidates_failed == 64,
       "every candidate section violates a relator");
  note(r, sp.quad_relator_pattern,
       "each failure sends (s1 s2 s1 s3)^2 into the kernel's nonidentity "
       "part or breaks another relator");
  SplitReport control = split_search_control();
  note(r, control.split,
       "control: a genuine semidirect product passes the same search");
  r.summary = "not split: 64/64 sections fail";
  return r;
}

CheckResult check_correction() {
  CheckResult r{"correction", true, "", {}, 0.0};
  DualityElement p4 = eval_word(parse_word("(XYZ)^4"));
  note(r, !equal_elements(p4, identity_element()),
       "(XYZ)^4 is not the identity");
  note(r, equal_elements(p4, eval_word(parse_word("(ZXZY)^2"))),
       "(XYZ)^4 = (ZXZY)^2");
  note(r, element_order(p4) == 2, "(XYZ)^4 has order 2");
  note(r, element_order(eval_word(parse_word("XYZ"))) == 8,
       "XYZ has order 8 (not 4)");
  note(r, dg3().size() == 96, "hence the group order is 96, not 72");
  r.summary = "(XYZ)^4 = (ZXZY)^2 != 1, so XYZ has order 8 and the group "
              "order is 96";
  return r;
}

CheckResult check_k4module() {
  CheckResult r{"k4module", true, "", {}, 0.0};
  ModuleReport m = k4_module_check(dg3());
  note(r, m.conj_identities_ok,
       "conjugating the kernel element (XYXZ)^2 by X, Y, Z lands on the "
       "prescribed kernel partners");
  note(r, m.factors_through_pi,
       "conjugation on the kernel depends only on the image permutation");
  note(r, m.unique_bijection,
       "exactly one equivariant matching of the kernel with the Klein "
       "subgroup of S4 exists");
  // The partner of (XYXZ)^2 must be the double transposition fixed by
  // conjugation with the X<->Z style swap (0 3).
  const GroupTable &t = dg3();
  int ka = t.index_of(eval_word(parse_word("(XYXZ)^2")));
  bool partner_ok = false;
  for (int i = 0; i < 3; ++i) {
    if (m.kernel_indices[i] == ka)
      partner_ok = m.partners[i].cycles() == "(03)(12)";
  }
  note(r, partner_ok, "(XYXZ)^2 matches the Klein permutation (03)(12)");
  note(r, m.ok, "aggregate module flag");
  r.summary = "the kernel is an S4 module via the unique equivariant Klein "
              "matching";
  return r;
}

CheckResult check_dg2() {
  CheckResult r{"dg2", true, "", {}, 0.0};
  Dg2Table t2 = enumerate_dg2();
  note(r, t2.size() == 6, "the double-bundle duality group has order 6");
  int trivial_perm = 0;
  bool parity_ok = true;
  for (const Dg2Element &e : t2.elements) {
    if (e.perm == std::array<int, 3>({0, 1, 2}))
      ++trivial_perm;
    int parity = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (e.perm[i] > e.perm[j])
          ++parity;
    if (e.eps != ((parity % 2) ? -1 : +1))
      parity_ok = false;
  }
  note(r, trivial_perm == 1, "the kernel of the index projection is trivial");
  note(r, parity_ok, "the sign of every element equals its permutation parity");
  note(r, dg2_equal(dg2_eval(parse_word("(XY)^3")), dg2_identity()),
       "(XY)^3 = 1");
  note(r, dg2_equal(dg2_eval(parse_word("XX")), dg2_identity()) &&
              dg2_equal(dg2_eval(parse_word("YY")), dg2_identity()),
       "X and Y are involutions");

  // Concrete double-bundle layer: the dual statomorphism action along both
  // axes is exact negation, witnessed by pairing invariance on random
  // core maps over all dimension triples up to 3 x 3 x 3.
  int lams = 0;
  bool pairing_ok = true, involution_ok = true, negation_ok = true;
  for (int k = 0; k < 27; ++k) {
    DvbDims dims{k % 3 + 1, (k / 3) % 3 + 1, (k / 9) % 3 + 1};
    DvbConcrete lam = random_dvb(dims, 1000 + (std::uint64_t)k);
    ++lams;
    for (char axis : {'X', 'Y'}) {
      if (!check_dvb_pairing(axis, lam, 25, 7000 + (std::uint64_t)k))
        pairing_ok = false;
      DvbConcrete th = theta_dvb(axis, lam);
      if (th.lambda != -lam.lambda)
        negation_ok = false;
      if (!(theta_dvb(axis, th) == lam))
        involution_ok = false;
    }
  }
  note(r, lams >= 20 && negation_ok,
       "theta_X and theta_Y act on the core map by negation (27 random "
       "core maps, dims up to 3x3x3)");
  note(r, involution_ok, "both duality actions are involutions");
  note(r, pairing_ok,
       "pairing invariance holds exactly for the negated dual on every "
       "sample");
  r.summary = "order 6 with trivial kernel; concrete double-bundle duals act "
              "by negation";
  return r;
}

CheckResult check_oracle() {
  CheckResult r{"oracle", true, "", {}, 0.0};
  const BuildingDims dims2{2, 2, 2, 2, 2, 2, 2};
  const BuildingDims dims1{1, 1, 1, 1, 1, 1, 1};
  for (char axis : {'X', 'Y', 'Z'}) {
    int match2 = 0, match1 = 0, pairing = 0;
    std::string fail;
    for (int s = 0; s < 20; ++s) {
      std::uint64_t seed = 100ull * (std::uint64_t)axis + (std::uint64_t)s;
      G3Concrete g = random_g3(dims2, seed);
      if (solve_dual_oracle(g, axis) == dualize_symbolic(g, axis))
        ++match2;
      if (check_pairing_invariance(g, axis, 100, seed ^ 0xBEEFull, &fail))
        ++pairing;
      G3Concrete g1 = random_g3(dims1, seed);
      if (solve_dual_oracle(g1, axis) == dualize_symbolic(g1, axis))
        ++match1;
    }
    note(r, match2 == 20,
         std::string("axis ") + axis + ": linear-solve dual equals symbolic "
         "dual for 20/20 seeds at dims (2,2,2,2,2,2,2)");
    note(r, match1 == 20,
         std::string("axis ") + axis +
             ": same agreement at dims (1,1,1,1,1,1,1)");
    note(r, pairing == 20,
         std::string("axis ") + axis + ": pairing invariance exact on 100 "
         "sampled compatible pairs per seed" +
             (pairing == 20 ? "" : " [" + fail + "]"));
  }
  r.summary = "the pairing-derived oracle reproduces the symbolic dual on "
              "every axis (exact)";
  return r;
}

CheckResult check_coherence() {
  CheckResult r{"coherence", true, "", {}, 0.0};
  const char *words[] = {"(XYXZ)^2", "(YZYX)^2", "(ZXZY)^2", "(XYZ)^4"};
  const BuildingDims dims2{2, 2, 2, 2, 2, 2, 2};
  const BuildingDims mixed{2, 1, 3, 2, 2, 1, 2};
  for (const char *wtext : words) {
    Word w = parse_word(wtext);
    DualityElement e = eval_word(w);
    bool trivial = e.perm.is_identity();
    int match = 0, runs = 0;
    for (int s = 0; s < 10; ++s) {
      G3Concrete g = random_g3(dims2, 500 + (std::uint64_t)s);
      ++runs;
      if (dualize_word(g, w) == apply_theta_concrete(e, g))
        ++match;
    }
    for (int s = 0; s < 2; ++s) {
      G3Concrete g = random_g3(mixed, 900 + (std::uint64_t)s);
      ++runs;
      if (dualize_word(g, w) == apply_theta_concrete(e, g))
        ++match;
    }
    note(r, trivial && match == runs,
         std::string(wtext) +
             ": chained concrete dualization equals the symbolic action on " +
             std::to_string(runs) + "/" + std::to_string(runs) +
             " random statomorphisms");
  }
  r.summary = "chained dualization matches the symbolic theta action for all "
              "four permutation-trivial words";
  return r;
}

CheckResult check_flip() {
  CheckResult r{"flip", true, "", {}, 0.0};
  int n = 0;
  bool doubling = true, diagram = true, control = true;
  for (int k = 0; k < 27; ++k) {
    DvbDims dims{k % 3 + 1, (k / 3) % 3 + 1, (k / 9) % 3 + 1};
    DvbConcrete mu = random_dvb(dims, 3000 + (std::uint64_t)k);
    ++n;
    Tensor doubled = flip_correspondence(mu).lambda;
    doubled.scale(Rational(2));
    if (doubled != mu.lambda)
      doubling = false;
    if (!check_flip_diagram(mu, 25, 4000 + (std::uint64_t)k))
      diagram = false;
    if (!flip_negative_control(mu))
      control = false;
  }
  note(r, n >= 20 && doubling,
       "2 * flip(mu) = mu for 27 random core maps (dims up to 3x3x3)");
  note(r, diagram,
       "the flipped-model diagram (apply the half shift twice = apply mu "
       "once) commutes pointwise on every sample");
  note(r, control,
       "negative control: a perturbed half shift breaks the diagram");
  r.summary = "flip correspondence is exactly the half-shift: 2*flip(mu) = mu "
              "with commuting diagrams";
  return r;
}

CheckResult check_faithful() {
  CheckResult r{"faithful", true, "", {}, 0.0};
  const GroupTable &t = dg3();
  std::set<Matrix6> seen;
  for (const DualityElement &e : t.elements)
    seen.insert(matrix6(e));
  note(r, (int)seen.size() == t.size(),
       "the 96 signed 6x6 matrices are pairwise distinct (got " +
           std::to_string((int)seen.size()) + ")");
  r.summary = "the signed 6x6 slot representation is faithful (96 distinct "
              "matrices)";
  return r;
}

CheckResult check_properties() {
  CheckResult r{"properties", true, "", {}, 0.0};
  const GroupTable &t = dg3();

  SplitMix64 rng(0xACEull);
  bool assoc_table = true;
  for (int k = 0; k < 2000; ++k) {
    int a = (int)(rng.next() % 96), b = (int)(rng.next() % 96),
        c = (int)(rng.next() % 96);
    if (t.mult[t.mult[a][b]][c] != t.mult[a][t.mult[b][c]])
      assoc_table = false;
  }
  bool assoc_elem = true;
  for (int k = 0; k < 200; ++k) {
    const DualityElement &a = t.elements[rng.next() % 96];
    const DualityElement &b = t.elements[rng.next() % 96];
    const DualityElement &c = t.elements[rng.next() % 96];
    if (!equal_elements(compose(compose(a, b), c), compose(a, compose(b, c))))
      assoc_elem = false;
  }
  note(r, assoc_table && assoc_elem,
       "associativity: 2000 Cayley-table triples and 200 element-level "
       "triples, zero violations");

  bool multiplicative = true;
  for (int k = 0; k < 200; ++k) {
    Word u, v;
    int lu = (int)(rng.next() % 9), lv = (int)(rng.next() % 9);
    for (int i = 0; i < lu; ++i)
      u.push_back(kGeneratorLetters[rng.next() % 3]);
    for (int i = 0; i < lv; ++i)
      v.push_back(kGeneratorLetters[rng.next() % 3]);
    if (!equal_elements(eval_word(u + v), compose(eval_word(u), eval_word(v))))
      multiplicative = false;
  }
  note(r, multiplicative,
       "eval is multiplicative: eval(uv) = eval(u) * eval(v) on 200 random "
       "word pairs");

  bool eps_ok = true, pairs_ok = true, coeff_ok = true, coupling_ok = true;
  for (const DualityElement &e : t.elements) {
    if (e.theta.rho.eps != e.perm.sign())
      eps_ok = false;
    for (int s = 0; s < kSlotCount; ++s) {
      if (e.theta.slots.src[slot_partner(s)] !=
          slot_partner(e.theta.slots.src[s]))
        pairs_ok = false;
      std::array<int, 2> sub = slot_index_subset(s);
      std::array<int, 2> img = {e.perm(sub[0]), e.perm(sub[1])};
      if (img[0] > img[1])
        std::swap(img[0], img[1]);
      if (img != slot_index_subset(e.theta.slots.src[s]))
        coupling_ok = false;
    }
    for (int q = 0; q < kPairCount; ++q) {
      if (e.theta.rho.coeff[q] < -1 || e.theta.rho.coeff[q] > 1)
        coeff_ok = false;
    }
  }
  note(r, eps_ok, "the rho signature equals the permutation sign for all 96 "
                  "elements");
  note(r, pairs_ok,
       "complementary slot pairs map onto complementary slot pairs");
  note(r, coupling_ok,
       "every slot map is the one induced by the index permutation");
  note(r, coeff_ok, "all pair coefficients lie in {-1, 0, +1}");

  bool inverse_ok = true;
  for (int i = 0; i < t.size(); ++i) {
    if (t.mult[i][t.inverse[i]] != 0 || t.mult[t.inverse[i]][i] != 0)
      inverse_ok = false;
  }
  note(r, inverse_ok, "table inverses are two-sided");
  r.summary = "group axioms, signature coupling, and slot invariants hold "
              "with zero violations";
  return r;
}

} // namespace

const std::vector<std::string> &verify_check_names() {
  static const std::vector<std::string> names = {
      "order",      "kernel",   "tables",  "classes",   "normal",
      "semidirect", "split",    "correction", "k4module", "dg2",
      "oracle",     "coherence", "flip",   "faithful",  "properties"};
  return names;
}

CheckResult run_check(const std::string &name, int table) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  if (name == "order")
    r = check_order();
  else if (name == "kernel")
    r = check_kernel();
  else if (name == "tables")
    r = check_tables(table);
  else if (name == "classes")
    r = check_classes();
  else if (name == "normal")
    r = check_normal();
  else if (name == "semidirect")
    r = check_semidirect();
  else if (name == "split")
    r = check_split();
  else if (name == "correction")
    r = check_correction();
  else if (name == "k4module")
    r = check_k4module();
  else if (name == "dg2")
    r = check_dg2();
  else if (name == "oracle")
    r = check_oracle();
  else if (name == "coherence")
    r = check_coherence();
  else if (name == "flip")
    r = check_flip();
  else if (name == "faithful")
    r = check_faithful();
  else if (name == "properties")
    r = check_properties();
  else
    throw std::invalid_argument("unknown check: " + name);
  r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

VerifyReport run_verify(const std::string &check, int table) {
  VerifyReport rep;
  if (!check.empty()) {
    rep.checks.push_back(run_check(check, table));
  } else if (table != 0) {
    rep.checks.push_back(run_check("tables", table));
  } else {
    for (const std::string &name : verify_check_names())
      rep.checks.push_back(run_check(name, 0));
  }
  for (const CheckResult &c : rep.checks)
    rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

std::string verify_report_text(const VerifyReport &r) {
  std::ostringstream out;
  int failures = 0;
  for (const CheckResult &c : r.checks) {
    out << (c.pass ? "PASS" : "FAIL") << " " << c.name << " - " << c.summary
        << "\n";
    if (!c.pass) {
      ++failures;
      for (const std::string &line : c.details) {
        if (line.rfind("FAIL: ", 0) == 0)
          out << "     " << line << "\n";
      }
    }
  }
  if (failures == 0)
    out << "all " << r.checks.size() << " checks passed\n";
  else
    out << failures << "/" << r.checks.size() << " checks failed\n";
  return out.str();
}

} // namespace tvb
