#include "element.hpp"

#include <stdexcept>

namespace tvb {

int slot_partner(int slot) {
  switch (slot) {
  case kGamma:
    return kNu;
  case kNu:
    return kGamma;
  case kBeta:
    return kMu;
  case kMu:
    return kBeta;
  case kAlpha:
    return kLambda;
  case kLambda:
    return kAlpha;
  }
  throw std::out_of_range("slot index");
}

int pair_of_slot(int slot) {
  switch (slot) {
  case kAlpha:
  case kLambda:
    return kPairAL;
  case kBeta:
  case kMu:
    return kPairBM;
  case kGamma:
  case kNu:
    return kPairGN;
  }
  throw std::out_of_range("slot index");
}

std::array<int, 2> slots_of_pair(int pair) {
  switch (pair) {
  case kPairAL:
    return {kAlpha, kLambda};
  case kPairBM:
    return {kBeta, kMu};
  case kPairGN:
    return {kGamma, kNu};
  }
  throw std::out_of_range("pair index");
}

std::array<int, 2> slot_index_subset(int slot) {
  // gamma couples indices {1,2}, beta {1,3}, alpha {2,3} (the three side
  // products), lambda {0,1}, mu {0,2}, nu {0,3} (the three core products,
  // 0 standing for the total space's own index).
  switch (slot) {
  case kGamma:
    return {1, 2};
  case kBeta:
    return {1, 3};
  case kAlpha:
    return {2, 3};
  case kLambda:
    return {0, 1};
  case kMu:
    return {0, 2};
  case kNu:
    return {0, 3};
  }
  throw std::out_of_range("slot index");
}

Perm4 Perm4::transposition(int a, int b) {
  Perm4 p = identity();
  p.map[a] = b;
  p.map[b] = a;
  return p;
}

int Perm4::sign() const {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (map[i] > map[j])
        ++inversions;
  return (inversions % 2 == 0) ? +1 : -1;
}

Perm4 Perm4::inverse() const {
  Perm4 r;
  for (int i = 0; i < 4; ++i)
    r.map[map[i]] = i;
  return r;
}

Perm4 Perm4::then(const Perm4 &a, const Perm4 &b) {
  Perm4 r;
  for (int i = 0; i < 4; ++i)
    r.map[i] = b.map[a.map[i]];
  return r;
}

std::string Perm4::cycles() const {
  std::string out;
  std::array<bool, 4> seen = {false, false, false, false};
  for (int start = 0; start < 4; ++start) {
    if (seen[start] || map[start] == start) {
      seen[start] = true;
      continue;
    }
    out.push_back('(');
    int i = start;
    while (!seen[i]) {
      seen[i] = true;
      out.push_back(char('0' + i));
      i = map[i];
    }
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

SignedSlotMap SignedSlotMap::identity() {
  SignedSlotMap m;
  for (int s = 0; s < kSlotCount; ++s) {
    m.src[s] = s;
    m.sign[s] = +1;
  }
  return m;
}

bool SignedSlotMap::is_identity() const { return *this == identity(); }

int SignedSlotMap::pair_image(int pair) const {
  return pair_of_slot(src[slots_of_pair(pair)[0]]);
}

int SignedSlotMap::pair_sign(int pair) const {
  auto slots = slots_of_pair(pair);
  return sign[slots[0]] * sign[slots[1]];
}

SignedSlotMap compose_slots(const SignedSlotMap &out, const SignedSlotMap &in) {
  SignedSlotMap t;
  for (int s = 0; s < kSlotCount; ++s) {
    t.src[s] = in.src[out.src[s]];
    t.sign[s] = out.sign[s] * in.sign[out.src[s]];
  }
  return t;
}

ThetaAut ThetaAut::identity() {
  return ThetaAut{SignedSlotMap::identity(), RhoPart{}};
}

bool ThetaAut::is_identity() const { return *this == identity(); }

bool equal_elements(const DualityElement &a, const DualityElement &b) {
  return a.perm == b.perm && a.theta == b.theta;
}

DualityElement identity_element() {
  return DualityElement{Perm4::identity(), ThetaAut::identity(), Word()};
}

namespace {

// Build a generator's theta from per-slot (source, sign) plus the rho data.
ThetaAut make_theta(std::array<int, kSlotCount> src,
                    std::array<int, kSlotCount> sign, int eps,
                    std::array<int, kPairCount> coeff) {
  ThetaAut t;
  t.slots.src = src;
  t.slots.sign = sign;
  t.rho.eps = eps;
  t.rho.coeff = coeff;
  return t;
}

// theta_out applied after theta_in, as automorphisms.
ThetaAut compose_theta(const ThetaAut &out, const ThetaAut &in) {
  ThetaAut t;
  t.slots = compose_slots(out.slots, in.slots);
  t.rho.eps = out.rho.eps * in.rho.eps;
  // The composite pair coefficients: the inner map rewrites rho as
  // eps_in*rho + sum coeff_in[q]*P_q, and rewrites each outer pair product
  // P_p as pair_sign_in(p) * P_{pair_image_in(p)}.
  for (int q = 0; q < kPairCount; ++q)
    t.rho.coeff[q] = out.rho.eps * in.rho.coeff[q];
  for (int p = 0; p < kPairCount; ++p)
    t.rho.coeff[in.slots.pair_image(p)] +=
        out.rho.coeff[p] * in.slots.pair_sign(p);
  return t;
}

} // namespace

DualityElement generator_element(char letter) {
  // Signs/sources are the three generator action rows; each generator is an
  // involution with eps = -1 and exactly two nonzero pair coefficients.
  DualityElement e;
  switch (letter) {
  case 'X':
    e.perm = Perm4::transposition(0, 1);
    e.theta = make_theta({kMu, kNu, kAlpha, kLambda, kGamma, kBeta},
                         {-1, -1, +1, -1, -1, -1}, -1, {0, +1, +1});
    break;
  case 'Y':
    e.perm = Perm4::transposition(0, 2);
    e.theta = make_theta({kLambda, kBeta, kNu, kGamma, kMu, kAlpha},
                         {-1, +1, -1, -1, -1, -1}, -1, {+1, 0, +1});
    break;
  case 'Z':
    e.perm = Perm4::transposition(0, 3);
    e.theta = make_theta({kGamma, kLambda, kMu, kBeta, kAlpha, kNu},
                         {+1, -1, -1, -1, -1, -1}, -1, {+1, +1, 0});
    break;
  default:
    throw std::invalid_argument("generator letter must be 'X', 'Y' or 'Z'");
  }
  e.witness = Word(1, letter);
  return e;
}

DualityElement compose(const DualityElement &first,
                       const DualityElement &second) {
  DualityElement r;
  r.perm = Perm4::then(first.perm, second.perm);
  r.theta = compose_theta(first.theta, second.theta);
  r.witness = first.witness + second.witness;
  return r;
}

DualityElement invert(const DualityElement &e) {
  DualityElement r;
  r.perm = e.perm.inverse();
  for (int s = 0; s < kSlotCount; ++s) {
    r.theta.slots.src[e.theta.slots.src[s]] = s;
    r.theta.slots.sign[e.theta.slots.src[s]] = e.theta.slots.sign[s];
  }
  r.theta.rho.eps = e.theta.rho.eps;
  // Solve compose_theta(e.theta, r.theta) = identity for the coefficients:
  // 0 = eps_e * c_r[q] + sum over p with pair_image_r(p) = q of
  //     c_e[p] * pair_sign_r(p).
  for (int q = 0; q < kPairCount; ++q)
    r.theta.rho.coeff[q] = 0;
  for (int p = 0; p < kPairCount; ++p)
    r.theta.rho.coeff[r.theta.slots.pair_image(p)] -=
        e.theta.rho.eps * e.theta.rho.coeff[p] * r.theta.slots.pair_sign(p);
  r.witness = reverse_word(e.witness);
  return r;
}

DualityElement eval_word(const Word &w) {
  DualityElement e = identity_element();
  for (char letter : w)
    e = compose(e, generator_element(letter));
  e.witness = w;
  return e;
}

int element_order(const DualityElement &e) {
  DualityElement power = e;
  const DualityElement id = identity_element();
  for (int n = 1; n <= 1000; ++n) {
    if (equal_elements(power, id))
      return n;
    power = compose(power, e);
  }
  throw std::logic_error("element order exceeds 1000 (representation bug)");
}

Matrix6 matrix6(const DualityElement &e) {
  Matrix6 m{};
  for (int s = 0; s < kSlotCount; ++s)
    m[s][e.theta.slots.src[s]] = e.theta.slots.sign[s];
  return m;
}

std::string action_row_text(const ThetaAut &theta) {
  std::string out;
  for (int s = 0; s < kSlotCount; ++s) {
    if (s > 0)
      out += ", ";
    if (theta.slots.sign[s] < 0)
      out += "-";
    out += kSlotGlyphs[theta.slots.src[s]];
  }
  out += ", ";
  // rho expression: pair terms in (αλ, βμ, γν) order, then the ρ term.
  bool first = true;
  auto append_term = [&](int value, const std::string &glyph) {
    if (value == 0)
      return;
    if (first) {
      if (value < 0)
        out += "-";
      first = false;
    } else {
      out += (value < 0) ? " - " : " + ";
    }
    int mag = value < 0 ? -value : value;
    if (mag != 1)
      out += std::to_string(mag);
    out += glyph;
  };
  for (int q = 0; q < kPairCount; ++q)
    append_term(theta.rho.coeff[q], kPairGlyphs[q]);
  append_term(theta.rho.eps, "ρ");
  return out;
}

ActionRow describe_row(const DualityElement &e) {
  ActionRow row;
  row.src = e.theta.slots.src;
  row.sign = e.theta.slots.sign;
  row.eps = e.theta.rho.eps;
  row.coeff = e.theta.rho.coeff;
  row.perm_cycles = e.perm.cycles();
  row.text = action_row_text(e.theta);
  return row;
}

ElementKey element_key(const DualityElement &e) {
  ElementKey k{};
  int i = 0;
  for (int v : e.perm.map)
    k[i++] = v;
  for (int v : e.theta.slots.src)
    k[i++] = v;
  for (int v : e.theta.slots.sign)
    k[i++] = v;
  k[i++] = e.theta.rho.eps;
  for (int v : e.theta.rho.coeff)
    k[i++] = v;
  return k;
}

} // namespace tvb
