// Words in the three dualization generators X, Y, Z: the free-monoid layer.
//
// A word is stored fully expanded as a string over {'X','Y','Z'}; the empty
// string is the identity and is displayed as "1".  All group semantics live
// in element.hpp — this layer only parses, formats, and expands.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tvb {

// Fully expanded letter sequence over {'X','Y','Z'} ("" = identity).
using Word = std::string;

inline constexpr int kGeneratorCount = 3;
inline constexpr char kGeneratorLetters[kGeneratorCount + 1] = "XYZ";

// Parse failure with the byte offset into the original input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t offset)
      : std::runtime_error(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Grammar:
//   word := '1' | term+
//   term := atom ('^' uint)?
//   atom := 'X' | 'Y' | 'Z' | '(' word ')'
// Whitespace is ignored everywhere; letters are uppercase only.  '1' denotes
// the identity and must stand alone (at top level or inside parentheses).
// Limits: exponents at most 10^4, fully expanded length at most 10^6 letters;
// exceeding either is a ParseError, as are unknown characters, unbalanced
// parentheses, a '^' with no digits, and empty input.
Word parse_word(const std::string &text);

// Letters with no separators; the empty word prints as "1".
// parse_word(format_word(w)) == w for every word.
std::string format_word(const Word &w);

// Display form that collapses a primitive repetition w = u^k (k >= 2) to
// "X^k" or "(U)^k"; otherwise identical to format_word.  Always re-parses
// to the same word.
std::string format_word_compact(const Word &w);

// Reversal; since every generator is an involution in the quotient group,
// this is word-level inversion.
Word reverse_word(const Word &w);

} // namespace tvb
