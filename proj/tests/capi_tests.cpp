// Exercises the shared library through its C interface only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "duality/duality.h"

namespace {

// Small RAII helpers so test failures cannot leak handles.
struct Elem {
  dg_element *p = nullptr;
  ~Elem() { dg_element_free(p); }
};

struct Str {
  char *p = nullptr;
  ~Str() { dg_string_free(p); }
  std::string get() const { return p ? std::string(p) : std::string(); }
};

struct Group {
  dg_group *p = nullptr;
  ~Group() { dg_group_free(p); }
};

} // namespace

TEST_CASE("parse, order, equality and witness canonicalization") {
  Elem xyx, yxy;
  REQUIRE(dg_element_parse("XYX", &xyx.p) == DG_OK);
  REQUIRE(dg_element_parse("YXY", &yxy.p) == DG_OK);

  int eq = 0;
  CHECK(dg_element_equal(xyx.p, yxy.p, &eq) == DG_OK);
  CHECK(eq == 1);

  int order = 0;
  CHECK(dg_element_order(xyx.p, &order) == DG_OK);
  CHECK(order == 2);

  Str w;
  CHECK(dg_element_witness(yxy.p, &w.p) == DG_OK);
  CHECK(w.get() == "XYX");

  Elem xyz;
  REQUIRE(dg_element_parse("XYZ", &xyz.p) == DG_OK);
  CHECK(dg_element_order(xyz.p, &order) == DG_OK);
  CHECK(order == 8);
  CHECK(dg_element_equal(xyx.p, xyz.p, &eq) == DG_OK);
  CHECK(eq == 0);
}

TEST_CASE("compose and invert round-trip to the identity") {
  Elem xy, inv, prod, one;
  REQUIRE(dg_element_parse("XY", &xy.p) == DG_OK);
  REQUIRE(dg_element_parse("1", &one.p) == DG_OK);
  REQUIRE(dg_element_invert(xy.p, &inv.p) == DG_OK);
  REQUIRE(dg_element_compose(xy.p, inv.p, &prod.p) == DG_OK);

  int eq = 0;
  CHECK(dg_element_equal(prod.p, one.p, &eq) == DG_OK);
  CHECK(eq == 1);

  int order = 0;
  CHECK(dg_element_order(xy.p, &order) == DG_OK);
  CHECK(order == 3);
  Str w;
  CHECK(dg_element_witness(one.p, &w.p) == DG_OK);
  CHECK(w.get() == "1");
}

TEST_CASE("matrix, permutation and text renderings of a generator") {
  Elem x;
  REQUIRE(dg_element_parse("X", &x.p) == DG_OK);

  int m[36] = {0};
  CHECK(dg_element_matrix6(x.p, m) == DG_OK);
  // Row gamma draws from mu with a minus sign; six entries total.
  CHECK(m[0 * 6 + 4] == -1);
  int nonzero = 0;
  for (int i = 0; i < 36; ++i) nonzero += m[i] != 0;
  CHECK(nonzero == 6);

  int p[4] = {0};
  CHECK(dg_element_perm(x.p, p) == DG_OK);
  CHECK(p[0] == 1);
  CHECK(p[1] == 0);
  CHECK(p[2] == 2);
  CHECK(p[3] == 3);

  Str cycles, row, text, json;
  CHECK(dg_element_perm_cycles(x.p, &cycles.p) == DG_OK);
  CHECK(cycles.get() == "(01)");
  CHECK(dg_element_row_text(x.p, &row.p) == DG_OK);
  CHECK(row.get() == "-μ, -ν, α, -λ, -γ, -β, βμ + γν - ρ");
  CHECK(dg_element_to_text(x.p, &text.p) == DG_OK);
  CHECK(text.get().find("order: 2") != std::string::npos);
  CHECK(dg_element_to_json(x.p, &json.p) == DG_OK);
  CHECK(json.get().find("\"witness\":\"X\"") != std::string::npos);
  CHECK(json.get().find("\"eps\":-1") != std::string::npos);
}

TEST_CASE("parse failures report code, offset and message") {
  dg_element *out = nullptr;
  CHECK(dg_element_parse("XQ", &out) == DG_ERR_PARSE);
  CHECK(out == nullptr);
  CHECK(dg_last_error_offset() == 1);
  CHECK(std::string(dg_last_error_message()).find('Q') != std::string::npos);

  CHECK(dg_element_parse("X^", &out) == DG_ERR_PARSE);
  CHECK(dg_element_parse(nullptr, &out) == DG_ERR_INVALID_ARGUMENT);
  Elem x;
  REQUIRE(dg_element_parse("X", &x.p) == DG_OK);
  CHECK(dg_element_order(nullptr, nullptr) == DG_ERR_INVALID_ARGUMENT);
  CHECK(dg_element_equal(x.p, nullptr, nullptr) == DG_ERR_INVALID_ARGUMENT);
  CHECK(dg_element_compose(x.p, x.p, nullptr) == DG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("group enumeration through the interface") {
  Group g3, g2;
  REQUIRE(dg_group_enumerate("dg3", &g3.p) == DG_OK);
  REQUIRE(dg_group_enumerate("dg2", &g2.p) == DG_OK);

  int order = 0;
  CHECK(dg_group_order(g3.p, &order) == DG_OK);
  CHECK(order == 96);
  CHECK(dg_group_order(g2.p, &order) == DG_OK);
  CHECK(order == 6);

  dg_group *bad = nullptr;
  CHECK(dg_group_enumerate("dg4", &bad) == DG_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);

  Str text, json;
  CHECK(dg_group_report(g3.p, 0, &text.p) == DG_OK);
  CHECK(text.get().find("order: 96") != std::string::npos);
  CHECK(text.get().find("split: false (64/64 sections fail)") !=
        std::string::npos);
  CHECK(dg_group_report(g3.p, 1, &json.p) == DG_OK);
  CHECK(json.get().find("\"order\":96") != std::string::npos);
  Str t2;
  CHECK(dg_group_report(g2.p, 0, &t2.p) == DG_OK);
  CHECK(t2.get().find("order: 6") != std::string::npos);
}

TEST_CASE("named verification checks run through the interface") {
  Str names;
  REQUIRE(dg_verify_names(&names.p) == DG_OK);
  std::string list = names.get();
  CHECK(list.find("split") != std::string::npos);
  CHECK(list.find("oracle") != std::string::npos);
  int lines = 0;
  for (char c : list) lines += c == '\n';
  CHECK(lines >= 14); // fifteen names, possibly without trailing newline

  Str report;
  int all_pass = 0;
  REQUIRE(dg_verify_run("split", 0, 0, &report.p, &all_pass) == DG_OK);
  CHECK(all_pass == 1);
  CHECK(report.get().find("not split: 64/64 sections fail") !=
        std::string::npos);

  Str kernel_report;
  REQUIRE(dg_verify_run("kernel", 0, 0, &kernel_report.p, &all_pass) == DG_OK);
  CHECK(all_pass == 1);

  Str bad;
  CHECK(dg_verify_run("nonsense", 0, 0, &bad.p, &all_pass) ==
        DG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("oracle run through the interface") {
  const int dims[7] = {1, 1, 1, 1, 1, 1, 1};
  Str report;
  int ok = 0;
  REQUIRE(dg_oracle_run(dims, 7, "XYZ", 10, 0, &report.p, &ok) == DG_OK);
  CHECK(ok == 1);
  CHECK(report.get().find("oracle agreement: exact") != std::string::npos);

  Str bad;
  CHECK(dg_oracle_run(dims, 7, "XQ", 10, 0, &bad.p, &ok) ==
        DG_ERR_INVALID_ARGUMENT);
  const int neg[7] = {1, 1, 1, 1, 1, 1, -2};
  CHECK(dg_oracle_run(neg, 7, "X", 10, 0, &bad.p, &ok) ==
        DG_ERR_INVALID_ARGUMENT);
}
