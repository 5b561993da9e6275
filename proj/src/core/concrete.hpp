// Exact-rational concrete model: decomposed triple (and double) vector
// bundles over a point, their statomorphism groups, duality pairings, the
// symbolic dualization of statomorphisms along each axis, and an independent
// linear-solve oracle that re-derives those dualization formulas from
// nothing but the pairing-invariance requirement.
#pragma once

#include <cstdint>
#include <string>

#include "element.hpp"
#include "tensor.hpp"
#include "word.hpp"

namespace tvb {

// Thrown when an operation's structural precondition is violated (e.g.
// applying a theta action concretely for an element that permutes the
// bundle indices).
class PreconditionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Deterministic pseudo-random stream (splitmix64).
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform integer in [-9, 9].
  int small_int() { return (int)(next() % 19ull) - 9; }
};

// Dimensions of the seven building spaces E1, E2, E3, E12, E13, E23, E123.
struct BuildingDims {
  int d1 = 0, d2 = 0, d3 = 0, d12 = 0, d13 = 0, d23 = 0, d123 = 0;

  std::array<int, 7> as_array() const {
    return {d1, d2, d3, d12, d13, d23, d123};
  }
  static BuildingDims from_array(const std::array<int, 7> &a) {
    return BuildingDims{a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
  }
  friend bool operator==(const BuildingDims &a, const BuildingDims &b) {
    return a.as_array() == b.as_array();
  }
  friend bool operator!=(const BuildingDims &a, const BuildingDims &b) {
    return !(a == b);
  }
};

// A concrete statomorphism: the seven multilinear component maps.
//   gamma: E1 x E2 -> E12      lambda: E1 x E23 -> E123
//   beta:  E1 x E3 -> E13      mu:     E2 x E13 -> E123
//   alpha: E2 x E3 -> E23      nu:     E3 x E12 -> E123
//   rho:   E1 x E2 x E3 -> E123
struct G3Concrete {
  BuildingDims dims;
  Tensor gamma, beta, alpha, lambda, mu, nu, rho;

  friend bool operator==(const G3Concrete &a, const G3Concrete &b) {
    return a.dims == b.dims && a.gamma == b.gamma && a.beta == b.beta &&
           a.alpha == b.alpha && a.lambda == b.lambda && a.mu == b.mu &&
           a.nu == b.nu && a.rho == b.rho;
  }
  friend bool operator!=(const G3Concrete &a, const G3Concrete &b) {
    return !(a == b);
  }
};

G3Concrete zero_g3(const BuildingDims &dims);

// A point of the decomposed triple bundle (over a one-point base).
struct TvbPoint {
  Vec e1, e2, e3, e12, e13, e23, e123;
};

TvbPoint zero_point(const BuildingDims &dims);

// The statomorphism map: building coordinates preserved, e12/e13/e23
// shifted by the bilinear maps of the *original* coordinates, e123 shifted
// by the three core maps of the original side coordinates plus rho.
TvbPoint apply_statomorphism(const G3Concrete &g, const TvbPoint &p);

// Group law ("first, then second") and inverse; apply_statomorphism turns
// these into actual map composition/inversion pointwise.
G3Concrete compose_g3(const G3Concrete &second, const G3Concrete &first);
G3Concrete invert_g3(const G3Concrete &g);

// Building dimensions of the axis-dual bundle (positions relabeled by the
// axis's index transposition; dual spaces have the dimension of their
// complementary building space).
BuildingDims dual_dims(char axis, const BuildingDims &dims);

// Tracks which abstract index each concrete slot position currently
// carries, across chained dualizations.
struct IndexFrame {
  Perm4 labeling = Perm4::identity();
  void apply(char axis);
  friend bool operator==(const IndexFrame &a, const IndexFrame &b) {
    return a.labeling == b.labeling;
  }
};

// The axis-dual of a statomorphism, as explicit exact transpositions /
// reindexings of the seven tensors into the dual bundle's positions.
// Updates *frame by the axis permutation when given.  Chaining letters of a
// word (leftmost first) yields the concrete action of the word.
G3Concrete dualize_symbolic(const G3Concrete &g, char axis,
                            IndexFrame *frame = nullptr);
G3Concrete dualize_word(const G3Concrete &g, const Word &w,
                        IndexFrame *frame = nullptr);

// Canonical pairing between a point of the axis-dual and a point of the
// original bundle sharing the axis's fixed coordinates.  Throws
// std::invalid_argument on dimension mismatch or if the shared coordinates
// differ (projection mismatch).
Rational pair_dual(char axis, const TvbPoint &delta, const TvbPoint &d);

// The theta action of a permutation-free element on a concrete
// statomorphism: slots scaled by the element's signs, rho replaced by
// eps*rho plus the coefficient-weighted complementary pair products.
// Throws PreconditionError if e.perm is not the identity.
G3Concrete apply_theta_concrete(const DualityElement &e, const G3Concrete &g);

// Re-derives the axis-dual of g from the pairing-invariance constraint
// alone: builds an exact linear system over the unknown dual components
// from deterministic basis samples (plus seeded random top-up if needed)
// and solves it; throws std::logic_error if the system fails to become
// uniquely solvable.  Independent of dualize_symbolic.
G3Concrete solve_dual_oracle(const G3Concrete &g, char axis);

// Checks <theta(phi) delta | phi d> == <delta | d> on `samples` seeded
// random compatible pairs; returns false and fills *failure on the first
// discrepancy.
bool check_pairing_invariance(const G3Concrete &g, char axis, int samples,
                              std::uint64_t seed,
                              std::string *failure = nullptr);

// Deterministic random data: integer entries in [-9, 9].
G3Concrete random_g3(const BuildingDims &dims, std::uint64_t seed);
TvbPoint random_tvb_point(const BuildingDims &dims, std::uint64_t seed);

// ----- double vector bundle layer -----

struct DvbDims {
  int da = 0, db = 0, dc = 0; // side bundles A, B and core C
  friend bool operator==(const DvbDims &x, const DvbDims &y) {
    return x.da == y.da && x.db == y.db && x.dc == y.dc;
  }
};

// A statomorphism of the decomposed double bundle: one bilinear map
// lambda: A x B -> C.
struct DvbConcrete {
  DvbDims dims;
  Tensor lambda; // shape (da, db, dc)
  friend bool operator==(const DvbConcrete &x, const DvbConcrete &y) {
    return x.dims == y.dims && x.lambda == y.lambda;
  }
};

DvbConcrete zero_dvb(const DvbDims &dims);
DvbConcrete random_dvb(const DvbDims &dims, std::uint64_t seed);

// The duality action on double-bundle statomorphisms is minus the identity
// for both axes ('X' = horizontal dual, 'Y' = vertical dual).
DvbConcrete theta_dvb(char axis, const DvbConcrete &lam);

// Verifies theta_dvb against the dual pairing on `samples` seeded random
// compatible point pairs (the dual-side shift tensor is the index transpose
// of -lambda, forced by pairing invariance).
bool check_dvb_pairing(char axis, const DvbConcrete &lam, int samples,
                       std::uint64_t seed);

// The statomorphism lam with 2*lam = mu (exact halving): the decomposition
// correspondence between flips and statomorphism data.
DvbConcrete flip_correspondence(const DvbConcrete &mu);

// Verifies pointwise on seeded random points of the flipped model that the
// doubled correspondence reproduces mu's map: applying the lam-shift twice
// equals the mu-shift, i.e. the map of 2*lam equals the map of mu.
bool check_flip_diagram(const DvbConcrete &mu, int samples,
                        std::uint64_t seed);

// Negative control: any lam' != mu/2 disagrees with mu's map at some basis
// point.  Returns true if the control behaves as expected for this mu.
bool flip_negative_control(const DvbConcrete &mu);

} // namespace tvb
