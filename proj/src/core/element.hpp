// Canonical group elements for the duality functors of triple vector bundles.
//
// An element is a pair (perm, theta):
//   * perm  — a permutation of the four bundle-index symbols {0,1,2,3};
//   * theta — the induced automorphism of the statomorphism group, recorded
//             exactly as a signed permutation of the six bilinear component
//             slots (gamma, beta, alpha, lambda, mu, nu) plus a "rho part"
//             describing how the trilinear component transforms:
//             rho  |->  eps * rho + sum over complementary slot pairs of
//                       coeff[pair] * (pair product).
// Two functor words denote the same element exactly when these data agree,
// so equality, inversion, orders and the faithful 6x6 signed-permutation
// representation are all decided structurally.
#pragma once

#include <array>
#include <string>

#include "word.hpp"

namespace tvb {

// Slot indices in the fixed presentation order used everywhere (tables,
// matrices, JSON): gamma, beta, alpha, lambda, mu, nu.
enum : int { kGamma = 0, kBeta = 1, kAlpha = 2, kLambda = 3, kMu = 4, kNu = 5 };
inline constexpr int kSlotCount = 6;
inline constexpr const char *kSlotNames[kSlotCount] = {
    "gamma", "beta", "alpha", "lambda", "mu", "nu"};
inline constexpr const char *kSlotGlyphs[kSlotCount] = {"γ", "β", "α",
                                                        "λ", "μ", "ν"};

// The three complementary slot pairs, each of which has a quadratic "pair
// product" that can feed the rho component.
enum : int { kPairAL = 0, kPairBM = 1, kPairGN = 2 };
inline constexpr int kPairCount = 3;
inline constexpr const char *kPairNames[kPairCount] = {"alpha_lambda",
                                                       "beta_mu", "gamma_nu"};
inline constexpr const char *kPairGlyphs[kPairCount] = {"αλ", "βμ", "γν"};

// gamma<->nu, beta<->mu, alpha<->lambda.
int slot_partner(int slot);
// alpha/lambda -> kPairAL, beta/mu -> kPairBM, gamma/nu -> kPairGN.
int pair_of_slot(int slot);
// The two slots of a pair in a fixed order (alpha, beta, gamma first).
std::array<int, 2> slots_of_pair(int pair);
// Each slot corresponds to a 2-subset of the index symbols {0,1,2,3}; the
// slot permutation of every element is forced by its index permutation
// through this correspondence (an enumeration-time invariant).
std::array<int, 2> slot_index_subset(int slot);

struct Perm4 {
  // map[i] = image of index i.
  std::array<int, 4> map;

  static Perm4 identity() { return Perm4{{0, 1, 2, 3}}; }
  static Perm4 transposition(int a, int b);

  int operator()(int i) const { return map[i]; }
  bool is_identity() const { return map == std::array<int, 4>{0, 1, 2, 3}; }
  int sign() const; // +1 even, -1 odd
  Perm4 inverse() const;
  // "apply a, then b": result(i) = b(a(i)).
  static Perm4 then(const Perm4 &a, const Perm4 &b);
  // Conventional cycle notation over the digits 0..3, e.g. "(01)", "(023)";
  // the identity renders as "()".
  std::string cycles() const;

  friend bool operator==(const Perm4 &x, const Perm4 &y) {
    return x.map == y.map;
  }
};

struct SignedSlotMap {
  // src[s] = the input slot feeding output slot s; sign[s] in {+1,-1}.
  std::array<int, kSlotCount> src;
  std::array<int, kSlotCount> sign;

  static SignedSlotMap identity();
  bool is_identity() const;
  // Induced action on complementary pairs: the pair of {src over p's slots}.
  int pair_image(int pair) const;
  // Product of the two slot signs on pair p.
  int pair_sign(int pair) const;

  friend bool operator==(const SignedSlotMap &a, const SignedSlotMap &b) {
    return a.src == b.src && a.sign == b.sign;
  }
};

// Slot map of "out applied after in" as signed permutations (the slot part
// of automorphism composition, usable on its own for slot-level reasoning).
SignedSlotMap compose_slots(const SignedSlotMap &out, const SignedSlotMap &in);

struct RhoPart {
  int eps = +1;                                // {+1,-1}
  std::array<int, kPairCount> coeff = {0, 0, 0}; // pair-product coefficients

  friend bool operator==(const RhoPart &a, const RhoPart &b) {
    return a.eps == b.eps && a.coeff == b.coeff;
  }
};

struct ThetaAut {
  SignedSlotMap slots;
  RhoPart rho;

  static ThetaAut identity();
  bool is_identity() const;

  friend bool operator==(const ThetaAut &a, const ThetaAut &b) {
    return a.slots == b.slots && a.rho == b.rho;
  }
};

struct DualityElement {
  Perm4 perm;
  ThetaAut theta;
  // A known representing word; informational only and excluded from equality.
  Word witness;
};

// Structural equality on (perm, theta); the witness never participates.
bool equal_elements(const DualityElement &a, const DualityElement &b);

DualityElement identity_element();
// The canonical element of a single generator letter 'X', 'Y' or 'Z'.
DualityElement generator_element(char letter);

// "Apply first, then second."  Permutations compose covariantly
// (i -> second(first(i))); thetas compose as functions with first outermost,
// matching the table convention documented in the README.  Witnesses
// concatenate.
DualityElement compose(const DualityElement &first,
                       const DualityElement &second);

// Group inverse; compose(e, invert(e)) and compose(invert(e), e) are both
// the identity.  The witness reverses (every generator is an involution).
DualityElement invert(const DualityElement &e);

// Left fold of generator_element over the letters, leftmost letter applied
// first; the empty word gives the identity.  Records w as witness.
DualityElement eval_word(const Word &w);

// Least n >= 1 with e^n = identity.
int element_order(const DualityElement &e);

// The signed permutation matrix of e's slot map in the fixed slot order;
// m[row][col] with exactly one entry of +-1 per row and column.
// matrix6(compose(a, b)) equals matrix6(a) * matrix6(b).
using Matrix6 = std::array<std::array<int, kSlotCount>, kSlotCount>;
Matrix6 matrix6(const DualityElement &e);

// Structured action row: the signed source for each slot, the rho expression
// data, the permutation in cycle notation, and a canonical text rendering
// "γ, -λ, -μ, -β, -α, -ν, αλ + βμ - ρ" (slots in presentation order; rho
// terms ordered αλ, βμ, γν with the ρ term last).
struct ActionRow {
  std::array<int, kSlotCount> src;
  std::array<int, kSlotCount> sign;
  int eps;
  std::array<int, kPairCount> coeff;
  std::string perm_cycles;
  std::string text;
};
ActionRow describe_row(const DualityElement &e);

// The canonical row text alone (the `text` field of describe_row).
std::string action_row_text(const ThetaAut &theta);

// Flat integer key of the canonical form, usable as an ordered map key.
using ElementKey = std::array<int, 20>;
ElementKey element_key(const DualityElement &e);

} // namespace tvb
