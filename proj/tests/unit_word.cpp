#include <doctest.h>

#include "word.hpp"

using namespace tvb;

TEST_CASE("plain letters and identity") {
  CHECK(parse_word("XYZ") == "XYZ");
  CHECK(parse_word("1") == "");
  CHECK(parse_word(" X Y ") == "XY");
}

TEST_CASE("exponents and groups expand") {
  CHECK(parse_word("X^3") == "XXX");
  CHECK(parse_word("(XY)^2") == "XYXY");
  CHECK(parse_word("(ZXYX)^2") == "ZXYXZXYX");
  CHECK(parse_word("((XY)^2Z)^2") == "XYXYZXYXYZ");
  CHECK(parse_word("X^0") == "");
  CHECK(parse_word("(1)") == "");
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(parse_word("XQ"), ParseError);
  try {
    parse_word("XQ");
  } catch (const ParseError &e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("( XY"), ParseError);
  CHECK_THROWS_AS(parse_word("XY)"), ParseError);
  CHECK_THROWS_AS(parse_word("X^"), ParseError);
  CHECK_THROWS_AS(parse_word("^2"), ParseError);
  CHECK_THROWS_AS(parse_word("1X"), ParseError);
  CHECK_THROWS_AS(parse_word("(1X)"), ParseError);
  CHECK_THROWS_AS(parse_word("x"), ParseError);
}

TEST_CASE("expansion limits") {
  CHECK_THROWS_AS(parse_word("X^10001"), ParseError);
  CHECK_THROWS_AS(parse_word("(X^1000)^1001"), ParseError);
  // 100 * 100 * 100 = 10^6 letters is the cap; one more overflows it.
  CHECK(parse_word("((X^100)^100)^100").size() == 1000000);
  CHECK_THROWS_AS(parse_word("((X^100)^100)^100X"), ParseError);
}

TEST_CASE("format round trips") {
  CHECK(format_word("") == "1");
  CHECK(format_word("XYZ") == "XYZ");
  CHECK(parse_word(format_word("XXYZZ")) == "XXYZZ");
}

TEST_CASE("compact formatting") {
  CHECK(format_word_compact("") == "1");
  CHECK(format_word_compact("X") == "X");
  CHECK(format_word_compact("XXX") == "X^3");
  CHECK(format_word_compact("XYXY") == "(XY)^2");
  CHECK(format_word_compact("XYXZXYXZ") == "(XYXZ)^2");
  CHECK(format_word_compact("XYZ") == "XYZ");
  // Always re-parses to the original expansion.
  for (const char *w : {"", "X", "XY", "XYXYXY", "ZXYXZXYX", "XXYY"}) {
    CHECK(parse_word(format_word_compact(w)) == Word(w));
  }
}

TEST_CASE("reverse") {
  CHECK(reverse_word("XYZ") == "ZYX");
  CHECK(reverse_word("") == "");
}
