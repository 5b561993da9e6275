#include <doctest.h>

#include "element.hpp"
#include "word.hpp"

using namespace tvb;

namespace {

// Compact literal form for an expected theta: sources by slot index in the
// canonical order (gamma, beta, alpha, lambda, mu, nu), signs, eps, coeffs.
ThetaAut make_theta(std::array<int, 6> src, std::array<int, 6> sign, int eps,
                    std::array<int, 3> coeff) {
  ThetaAut t;
  for (int s = 0; s < 6; ++s) {
    t.slots.src[s] = src[s];
    t.slots.sign[s] = sign[s];
  }
  t.rho.eps = eps;
  t.rho.coeff = coeff;
  return t;
}

constexpr int G = kGamma, B = kBeta, A = kAlpha, L = kLambda, M = kMu,
              N = kNu;

} // namespace

TEST_CASE("generator data") {
  DualityElement x = generator_element('X');
  CHECK(x.perm.cycles() == "(01)");
  CHECK(x.theta == make_theta({M, N, A, L, G, B}, {-1, -1, +1, -1, -1, -1},
                              -1, {0, +1, +1}));

  DualityElement y = generator_element('Y');
  CHECK(y.perm.cycles() == "(02)");
  CHECK(y.theta == make_theta({L, B, N, G, M, A}, {-1, +1, -1, -1, -1, -1},
                              -1, {+1, 0, +1}));

  DualityElement z = generator_element('Z');
  CHECK(z.perm.cycles() == "(03)");
  CHECK(z.theta == make_theta({G, L, M, B, A, N}, {+1, -1, -1, -1, -1, -1},
                              -1, {+1, +1, 0}));

  for (char c : {'X', 'Y', 'Z'}) {
    DualityElement g = generator_element(c);
    CHECK(equal_elements(compose(g, g), identity_element()));
    CHECK(element_order(g) == 2);
  }
}

TEST_CASE("pinned evaluation vectors") {
  CHECK(eval_word(parse_word("XY")).theta ==
        make_theta({M, A, N, G, L, B}, {+1, +1, -1, +1, +1, -1}, +1,
                   {0, -1, -1}));
  CHECK(eval_word(parse_word("YX")).theta ==
        make_theta({L, N, B, M, G, A}, {+1, -1, +1, +1, +1, -1}, +1,
                   {-1, 0, -1}));
  CHECK(eval_word(parse_word("XYX")).theta ==
        make_theta({G, A, B, M, L, N}, {-1, +1, +1, -1, -1, +1}, -1,
                   {0, 0, 0}));
  CHECK(eval_word(parse_word("ZXYX")).theta ==
        make_theta({G, M, L, A, B, N}, {-1, +1, +1, -1, -1, -1}, +1,
                   {-1, -1, 0}));
  CHECK(eval_word(parse_word("(ZXYX)^2")).theta ==
        make_theta({G, B, A, L, M, N}, {+1, -1, -1, -1, -1, +1}, +1,
                   {0, 0, 0}));
  CHECK(eval_word(parse_word("(ZXYX)^2")).perm.is_identity());
  CHECK(eval_word(parse_word("XYZ")).theta ==
        make_theta({A, M, N, G, B, L}, {-1, -1, +1, +1, -1, +1}, -1,
                   {0, +1, +1}));
  CHECK(eval_word(parse_word("ZYX")).theta ==
        make_theta({L, M, G, N, B, A}, {+1, -1, -1, +1, -1, +1}, -1,
                   {+1, +1, 0}));
}

TEST_CASE("the three kernel involutions") {
  DualityElement ka = eval_word(parse_word("(XYXZ)^2"));
  DualityElement kb = eval_word(parse_word("(YZYX)^2"));
  DualityElement kc = eval_word(parse_word("(ZXZY)^2"));
  for (const DualityElement *e : {&ka, &kb, &kc}) {
    CHECK(e->perm.is_identity());
    CHECK(e->theta.rho.eps == +1);
    CHECK(e->theta.rho.coeff == std::array<int, 3>({0, 0, 0}));
    CHECK(element_order(*e) == 2);
  }
  CHECK(ka.theta.slots.sign ==
        std::array<int, 6>({+1, -1, -1, -1, -1, +1}));
  CHECK(kb.theta.slots.sign ==
        std::array<int, 6>({-1, -1, +1, +1, -1, -1}));
  CHECK(kc.theta.slots.sign ==
        std::array<int, 6>({-1, +1, -1, -1, +1, -1}));
  CHECK(equal_elements(compose(ka, kb), kc));
  CHECK(equal_elements(compose(kb, ka), kc));
}

TEST_CASE("orders of short words") {
  CHECK(element_order(identity_element()) == 1);
  CHECK(element_order(eval_word(parse_word("XY"))) == 3);
  CHECK(element_order(eval_word(parse_word("XYX"))) == 2);
  CHECK(element_order(eval_word(parse_word("XYZ"))) == 8);
  CHECK(element_order(eval_word(parse_word("(XYZ)^4"))) == 2);
  CHECK(element_order(eval_word(parse_word("ZXYX"))) == 4);
}

TEST_CASE("compose and invert are group operations") {
  DualityElement u = eval_word(parse_word("XZY"));
  DualityElement v = eval_word(parse_word("YXZYX"));
  DualityElement w = eval_word(parse_word("ZZXY"));
  CHECK(equal_elements(compose(compose(u, v), w), compose(u, compose(v, w))));
  CHECK(equal_elements(compose(u, identity_element()), u));
  CHECK(equal_elements(compose(identity_element(), u), u));
  CHECK(equal_elements(compose(u, invert(u)), identity_element()));
  CHECK(equal_elements(compose(invert(u), u), identity_element()));
  CHECK(equal_elements(invert(invert(v)), v));

  // eval is a homomorphism and inverses reverse witnesses.
  CHECK(equal_elements(eval_word(parse_word("XZYYXZYX")),
                       compose(eval_word(parse_word("XZY")),
                               eval_word(parse_word("YXZYX")))));
  CHECK(invert(u).witness == reverse_word(u.witness));
}

TEST_CASE("eval of a reversed word is the inverse") {
  for (const char *w : {"X", "XY", "XYZ", "ZXYX", "YZXYZYX"}) {
    DualityElement e = eval_word(parse_word(w));
    CHECK(equal_elements(eval_word(reverse_word(parse_word(w))), invert(e)));
  }
}

TEST_CASE("matrix6 is the signed slot matrix and is multiplicative") {
  Matrix6 mx = matrix6(generator_element('X'));
  // Row gamma has -1 in column mu.
  CHECK(mx[kGamma][kMu] == -1);
  CHECK(mx[kAlpha][kAlpha] == +1);
  int nonzero = 0;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      nonzero += (mx[r][c] != 0);
  CHECK(nonzero == 6);

  DualityElement a = eval_word(parse_word("XZ"));
  DualityElement b = eval_word(parse_word("YXY"));
  Matrix6 ma = matrix6(a), mb = matrix6(b), mab = matrix6(compose(a, b));
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      int sum = 0;
      for (int k = 0; k < 6; ++k)
        sum += ma[r][k] * mb[k][c];
      CHECK(mab[r][c] == sum);
    }
  }
}

TEST_CASE("row text rendering") {
  CHECK(action_row_text(identity_element().theta) ==
        "γ, β, α, λ, μ, ν, ρ");
  CHECK(action_row_text(generator_element('X').theta) ==
        "-μ, -ν, α, -λ, -γ, -β, βμ + γν - ρ");
  CHECK(action_row_text(eval_word(parse_word("(ZXYX)^2")).theta) ==
        "γ, -β, -α, -λ, -μ, ν, ρ");
  CHECK(action_row_text(eval_word(parse_word("XY")).theta) ==
        "μ, α, -ν, γ, λ, -β, -βμ - γν + ρ");
}

TEST_CASE("describe_row carries the permutation cycles") {
  ActionRow row = describe_row(eval_word(parse_word("X")));
  CHECK(row.perm_cycles == "(01)");
  CHECK(row.eps == -1);
  CHECK(row.text == action_row_text(generator_element('X').theta));
  CHECK(describe_row(identity_element()).perm_cycles == "()");
}

TEST_CASE("element keys separate distinct elements") {
  CHECK(element_key(eval_word(parse_word("XY"))) !=
        element_key(eval_word(parse_word("YX"))));
  CHECK(element_key(eval_word(parse_word("XYX"))) ==
        element_key(eval_word(parse_word("YXY"))));
}
