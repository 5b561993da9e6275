// Structural analysis of the enumerated duality group: kernel of the index
// projection, conjugacy classes, normal subgroups, the semidirect
// decomposition, the (non-)splitness of the projection onto S4, and the
// Klein-four module structure of the kernel.
#pragma once

#include <vector>

#include "group.hpp"

namespace tvb {

struct ConjClass {
  int rep;                  // smallest member index (deterministic)
  int order;                // common element order
  std::vector<int> members; // sorted indices
  int size() const { return (int)members.size(); }
};

// Partition by conjugation, sorted by (size, element order, rep index).
std::vector<ConjClass> conjugacy_classes(const GroupTable &t);

struct SubgroupDescriptor {
  std::vector<int> members; // sorted, contains index 0
  bool is_normal = false;
  // Greedy generating set: repeatedly adjoin the smallest-index member not
  // yet generated.  Deterministic; empty for the trivial subgroup.
  std::vector<Word> generator_witnesses;
};

// Closure of {identity} ∪ gens under multiplication (indices).
std::vector<int> subgroup_generated(const GroupTable &t,
                                    const std::vector<int> &gens);
// Smallest normal subgroup containing the seeds.
std::vector<int> normal_closure(const GroupTable &t,
                                const std::vector<int> &seeds);

// The elements acting trivially on the four index symbols.  Checks that this
// set equals the normal closure of the images of the nine defining relator
// words (XX, YY, ZZ, (XY)^3, (YZ)^3, (ZX)^3, (XYXZ)^2, (YZYX)^2, (ZXZY)^2)
// and that it is a Klein four-group; throws std::logic_error otherwise.
SubgroupDescriptor kernel_of_pi(const GroupTable &t);

// All normal subgroups, found as identity-containing unions of conjugacy
// classes closed under multiplication; sorted by size.
std::vector<SubgroupDescriptor> normal_subgroups(const GroupTable &t);

struct SplitReport {
  bool split = false;
  int candidates_tested = 0;
  int candidates_failed = 0;
  // Every failing candidate either sends (s1 s2 s1 s3)^2 into the kernel's
  // nonidentity part or violates one of the other eight relators.
  bool quad_relator_pattern = true;
};

// Searches all sections of the projection onto S4 over the generator
// transpositions (01), (02), (03): 4x4x4 = 64 lift choices, each tested
// against the nine S4 relators s_i^2, (s_i s_j)^3, (s_i s_j s_i s_k)^2.
SplitReport is_split_extension(const GroupTable &t);

// Control case: the same search run on an internally built split extension
// (Klein four-group by S4, conjugation action, zero cocycle), which must
// report split = true.  Exercises the search logic end to end.
SplitReport split_search_control();

struct StructureReport {
  bool ok = false;
  std::array<int, 3> abc_orders = {0, 0, 0}; // a=(ZXY)^2, b=(XYZ)^2, c=(YZX)^2
  bool commute = false;
  bool abc_identity = false;
  int h_size = 0;         // H = <a, b>
  bool h_abelian = false;
  bool h_exponent4 = false; // every order divides 4, some order is 4
  int h_involutions = 0;    // 3 in Z4 x Z4
  bool h_normal = false;
  bool h_equals_even_double_transposition_fiber = false; // H = preimage of V
  int s_size = 0;           // S = <X, Y>
  int intersection_size = 0;
  bool product_covers = false; // |H . S| = group order
  bool conj_permutes_abc = false;
};

// Verifies the semidirect decomposition: H = <a,b> is a normal Z4 x Z4 of
// order 16 (the preimage of the Klein subgroup V of S4), S = <X,Y> has order
// 6, they intersect trivially and jointly cover the group, and conjugation
// by X and Y permutes {a, b, c}.
StructureReport semidirect_structure_check(const GroupTable &t);

struct ModuleReport {
  bool ok = false;
  bool conj_identities_ok = false;  // X k X = partner data, the three checks
  bool factors_through_pi = false;  // conjugation on the kernel depends only
                                    // on the image permutation
  bool unique_bijection = false;    // exactly one equivariant matching
  std::array<int, 3> kernel_indices = {0, 0, 0}; // nonidentity members, ascending
  std::array<Perm4, 3> partners{};  // matched Klein permutations in S4
};

// Verifies the conjugation identities on the kernel (conjugating the kernel
// involution of (XYXZ)^2 by X, Y, Z lands on the prescribed partners) and
// derives the unique S4-equivariant bijection between the kernel and the
// Klein four-subgroup {1, (01)(23), (02)(13), (03)(12)} of S4.
ModuleReport k4_module_check(const GroupTable &t);

} // namespace tvb
