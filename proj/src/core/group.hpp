// Breadth-first enumeration of the duality groups from their generators,
// with full Cayley structure.  Element ordering is deterministic: BFS depth
// (shortest witness length) first, then lexicographic witness, so every
// report derived from a GroupTable is reproducible byte for byte.
#pragma once

#include <map>
#include <vector>

#include "element.hpp"

namespace tvb {

struct GroupTable {
  std::vector<DualityElement> elements; // index 0 = identity
  std::vector<std::vector<int>> mult;   // mult[a][b] = index of compose(a,b)
  std::vector<int> inverse;             // inverse[a]
  std::vector<int> order;               // element order
  std::array<int, 3> gen_indices;       // indices of X, Y, Z
  std::map<ElementKey, int> index;

  int size() const { return (int)elements.size(); }
  // Index of an equal canonical element; throws if it is not in the table
  // (which would mean the table is not closed — a representation bug).
  int index_of(const DualityElement &e) const;
  // Index arithmetic helpers over the Cayley table.
  int conjugate(int g, int h) const; // g * h * g^-1
};

// Enumerates the order-96 triple-bundle duality group from X, Y, Z.
// Verifies on every discovered element: eps equals the permutation sign,
// pair coefficients lie in {-1,0,+1}, complementary pairs map onto
// complementary pairs, and the slot permutation is exactly the one induced
// by the index permutation through slot_index_subset.  Throws
// std::logic_error if any invariant fails or closure exceeds 10^5 elements.
GroupTable enumerate_dg3();

// The shared, lazily built table (enumeration is cheap but not free; most
// callers only need one).
const GroupTable &dg3();

// Canonical witness (shortest, then lexicographically first) for an element,
// looked up in the shared table.
Word canonical_witness(const DualityElement &e);

// ----- The double-vector-bundle duality group (order 6) -----
//
// Elements are (permutation of {0,1,2}, sign); the two generators X, Y act
// as transpositions with sign -1 (the statomorphism-group action of each is
// minus the identity).  The sign of every element equals its permutation
// parity, so the only element with trivial permutation is the identity.
struct Dg2Element {
  std::array<int, 3> perm;
  int eps;
  Word witness;
};

bool dg2_equal(const Dg2Element &a, const Dg2Element &b);
Dg2Element dg2_identity();
Dg2Element dg2_generator(char letter); // 'X' or 'Y'
Dg2Element dg2_compose(const Dg2Element &first, const Dg2Element &second);
// Evaluates a word over {X, Y}; rejects 'Z'.
Dg2Element dg2_eval(const Word &w);

struct Dg2Table {
  std::vector<Dg2Element> elements; // index 0 = identity
  std::vector<std::vector<int>> mult;
  std::vector<int> inverse;
  std::vector<int> order;
  int size() const { return (int)elements.size(); }
  int index_of(const Dg2Element &e) const;
};

Dg2Table enumerate_dg2();

} // namespace tvb
