#include <doctest.h>

#include <set>

#include "group.hpp"
#include "word.hpp"

using namespace tvb;

TEST_CASE("enumeration reaches exactly 96 elements") {
  const GroupTable &t = dg3();
  CHECK(t.size() == 96);
  CHECK(t.elements[0].perm.is_identity());
  CHECK(t.elements[0].theta.is_identity());
  CHECK(t.elements[0].witness == "");
  // Generators sit right after the identity in BFS order.
  CHECK(t.elements[t.gen_indices[0]].witness == "X");
  CHECK(t.elements[t.gen_indices[1]].witness == "Y");
  CHECK(t.elements[t.gen_indices[2]].witness == "Z");
}

TEST_CASE("cayley table is consistent with compose") {
  const GroupTable &t = dg3();
  // Spot-check a band of products elementwise.
  for (int a = 0; a < 96; a += 7) {
    for (int b = 0; b < 96; b += 11) {
      DualityElement prod = compose(t.elements[a], t.elements[b]);
      CHECK(t.mult[a][b] == t.index_of(prod));
    }
  }
  for (int a = 0; a < 96; ++a) {
    CHECK(t.mult[a][t.inverse[a]] == 0);
    CHECK(t.mult[t.inverse[a]][a] == 0);
    CHECK(t.mult[0][a] == a);
    CHECK(t.mult[a][0] == a);
  }
}

TEST_CASE("every row and column of the cayley table is a permutation") {
  const GroupTable &t = dg3();
  for (int a = 0; a < 96; ++a) {
    std::set<int> row, col;
    for (int b = 0; b < 96; ++b) {
      row.insert(t.mult[a][b]);
      col.insert(t.mult[b][a]);
    }
    CHECK(row.size() == 96);
    CHECK(col.size() == 96);
  }
}

TEST_CASE("order table matches element_order") {
  const GroupTable &t = dg3();
  std::map<int, int> histogram;
  for (int a = 0; a < 96; ++a) {
    CHECK(t.order[a] == element_order(t.elements[a]));
    ++histogram[t.order[a]];
  }
  // Orders present: 1, 2, 3, 4, 8.
  CHECK(histogram[1] == 1);
  CHECK(histogram.count(8) == 1);
  CHECK(histogram[8] == 24);
}

TEST_CASE("canonical witnesses are shortest and stable") {
  const GroupTable &t = dg3();
  CHECK(canonical_witness(identity_element()) == "");
  CHECK(canonical_witness(eval_word(parse_word("XX"))) == "");
  CHECK(canonical_witness(eval_word(parse_word("X"))) == "X");
  CHECK(canonical_witness(eval_word(parse_word("YXY"))) == "XYX");
  for (int i = 0; i < 96; ++i) {
    Word w = canonical_witness(t.elements[i]);
    CHECK(w == t.elements[i].witness);
    CHECK(equal_elements(eval_word(w), t.elements[i]));
  }
}

TEST_CASE("witness depth is monotone in BFS order") {
  const GroupTable &t = dg3();
  for (int i = 1; i < 96; ++i) {
    CHECK(t.elements[i - 1].witness.size() <= t.elements[i].witness.size());
  }
}

TEST_CASE("double-bundle group has order 6") {
  Dg2Table t = enumerate_dg2();
  CHECK(t.size() == 6);
  CHECK(t.elements[0].witness == "");
  // X, Y involutions; XY has order 3.
  CHECK(dg2_equal(dg2_compose(dg2_generator('X'), dg2_generator('X')),
                  dg2_identity()));
  CHECK(dg2_equal(dg2_eval(parse_word("(XY)^3")), dg2_identity()));
  CHECK_FALSE(dg2_equal(dg2_eval(parse_word("XY")), dg2_identity()));
  CHECK_FALSE(dg2_equal(dg2_eval(parse_word("(XY)^2")), dg2_identity()));
  CHECK_THROWS_AS(dg2_eval(parse_word("XZ")), std::invalid_argument);
  for (int i = 0; i < 6; ++i) {
    CHECK(t.mult[i][t.inverse[i]] == 0);
  }
}
