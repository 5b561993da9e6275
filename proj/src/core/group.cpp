#include "group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tvb {

namespace {

constexpr int kClosureBound = 100000;

// Structural invariants that every reachable element must satisfy.  They are
// cheap, and catching a violation at enumeration time localizes a
// composition bug to the exact word that produced it.
void check_element_invariants(const DualityElement &e) {
  const auto &th = e.theta;
  if (th.rho.eps != e.perm.sign()) {
    throw std::logic_error("invariant violated: eps != permutation sign at '" +
                           e.witness + "'");
  }
  for (int p = 0; p < 3; ++p) {
    int c = th.rho.coeff[p];
    if (c < -1 || c > 1) {
      throw std::logic_error(
          "invariant violated: pair coefficient out of {-1,0,1} at '" +
          e.witness + "'");
    }
  }
  for (int s = 0; s < 6; ++s) {
    int t = th.slots.src[s];
    if (th.slots.src[slot_partner(s)] != slot_partner(t)) {
      throw std::logic_error(
          "invariant violated: complementary pairs not preserved at '" +
          e.witness + "'");
    }
    // The slot permutation must be the one induced by the index permutation:
    // the index pair of src[s] must be the image of the index pair of s.
    auto sub = slot_index_subset(s);
    std::array<int, 2> image = {e.perm(sub[0]), e.perm(sub[1])};
    if (image[0] > image[1]) std::swap(image[0], image[1]);
    if (slot_index_subset(t) != image) {
      throw std::logic_error(
          "invariant violated: slot map inconsistent with permutation at '" +
          e.witness + "'");
    }
  }
}

} // namespace

int GroupTable::index_of(const DualityElement &e) const {
  auto it = index.find(element_key(e));
  if (it == index.end()) {
    throw std::logic_error("element not found in group table");
  }
  return it->second;
}

int GroupTable::conjugate(int g, int h) const {
  return mult[mult[g][h]][inverse[g]];
}

GroupTable enumerate_dg3() {
  GroupTable table;

  auto push = [&table](const DualityElement &e) -> int {
    check_element_invariants(e);
    ElementKey key = element_key(e);
    auto it = table.index.find(key);
    if (it != table.index.end()) return it->second;
    int idx = (int)table.elements.size();
    if (idx >= kClosureBound) {
      throw std::logic_error("group closure exceeded safety bound");
    }
    table.elements.push_back(e);
    table.index.emplace(key, idx);
    return idx;
  };

  // BFS from the identity, expanding children in X < Y < Z order with a FIFO
  // queue: the first discovery of each element carries its shortest,
  // lexicographically least witness.
  push(identity_element());
  std::deque<int> frontier = {0};
  const std::array<DualityElement, 3> gens = {
      generator_element('X'), generator_element('Y'), generator_element('Z')};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    DualityElement base = table.elements[cur];
    for (const auto &g : gens) {
      DualityElement child = compose(base, g);
      child.witness = base.witness + g.witness;
      int before = (int)table.elements.size();
      int idx = push(child);
      if (idx == before) frontier.push_back(idx);
    }
  }

  const int n = table.size();
  for (int i = 0; i < 3; ++i) {
    table.gen_indices[i] = table.index_of(gens[i]);
  }

  table.mult.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table.mult[a][b] =
          table.index_of(compose(table.elements[a], table.elements[b]));
    }
  }

  table.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    table.inverse[a] = table.index_of(invert(table.elements[a]));
    if (table.mult[a][table.inverse[a]] != 0 ||
        table.mult[table.inverse[a]][a] != 0) {
      throw std::logic_error("inverse inconsistent with multiplication table");
    }
  }

  table.order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int k = 1, cur = a;
    while (cur != 0) {
      cur = table.mult[cur][a];
      ++k;
      if (k > n) throw std::logic_error("element order exceeds group size");
    }
    table.order[a] = k;
  }

  return table;
}

const GroupTable &dg3() {
  static const GroupTable table = enumerate_dg3();
  return table;
}

Word canonical_witness(const DualityElement &e) {
  const GroupTable &table = dg3();
  return table.elements[table.index_of(e)].witness;
}

// ----- order-6 double-bundle group -----

bool dg2_equal(const Dg2Element &a, const Dg2Element &b) {
  return a.perm == b.perm && a.eps == b.eps;
}

Dg2Element dg2_identity() { return Dg2Element{{0, 1, 2}, 1, ""}; }

Dg2Element dg2_generator(char letter) {
  switch (letter) {
    case 'X': return Dg2Element{{1, 0, 2}, -1, "X"};
    case 'Y': return Dg2Element{{2, 1, 0}, -1, "Y"};
    default:
      throw std::invalid_argument(
          "the double-bundle group has generators X and Y only");
  }
}

Dg2Element dg2_compose(const Dg2Element &first, const Dg2Element &second) {
  Dg2Element out;
  for (int i = 0; i < 3; ++i) out.perm[i] = second.perm[first.perm[i]];
  out.eps = first.eps * second.eps;
  out.witness = first.witness + second.witness;
  return out;
}

Dg2Element dg2_eval(const Word &w) {
  Dg2Element e = dg2_identity();
  for (char c : w) e = dg2_compose(e, dg2_generator(c));
  e.witness = w;
  return e;
}

int Dg2Table::index_of(const Dg2Element &e) const {
  for (int i = 0; i < (int)elements.size(); ++i) {
    if (dg2_equal(elements[i], e)) return i;
  }
  throw std::logic_error("element not found in group table");
}

Dg2Table enumerate_dg2() {
  Dg2Table table;
  auto push = [&table](const Dg2Element &e) -> int {
    for (int i = 0; i < (int)table.elements.size(); ++i) {
      if (dg2_equal(table.elements[i], e)) return i;
    }
    table.elements.push_back(e);
    return (int)table.elements.size() - 1;
  };

  push(dg2_identity());
  std::deque<int> frontier = {0};
  const std::array<Dg2Element, 2> gens = {dg2_generator('X'),
                                          dg2_generator('Y')};
  while (!frontier.empty()) {
    int cur = frontier.front();
    frontier.pop_front();
    Dg2Element base = table.elements[cur];
    for (const auto &g : gens) {
      Dg2Element child = dg2_compose(base, g);
      int before = (int)table.elements.size();
      int idx = push(child);
      if (idx == before) frontier.push_back(idx);
    }
  }

  const int n = (int)table.elements.size();
  table.mult.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table.mult[a][b] =
          table.index_of(dg2_compose(table.elements[a], table.elements[b]));
    }
  }
  table.inverse.assign(n, -1);
  table.order.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table.mult[a][b] == 0) table.inverse[a] = b;
    }
    int k = 1, cur = a;
    while (cur != 0) {
      cur = table.mult[cur][a];
      ++k;
    }
    table.order[a] = k;
  }
  return table;
}

} // namespace tvb
