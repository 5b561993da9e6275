#include "word.hpp"

#include <algorithm>

namespace tvb {

namespace {

constexpr unsigned long long kMaxExponent = 10000;       // per-term cap
constexpr unsigned long long kMaxExpandedLength = 1000000; // whole-word cap

// Recursive-descent parser over the raw input bytes.  Offsets reported in
// errors always index the original text (whitespace included).
class Parser {
public:
  explicit Parser(const std::string &text) : s_(text) {}

  Word run() {
    Word out;
    skip_ws();
    if (at_end())
      throw ParseError("empty input: write '1' for the identity word", pos_);
    if (peek() == '1') {
      ++pos_;
      skip_ws();
      if (!at_end())
        throw ParseError("'1' must stand alone as the identity word", pos_);
      return out;
    }
    parse_terms(out);
    skip_ws();
    if (!at_end()) {
      if (peek() == ')')
        throw ParseError("unbalanced parenthesis", pos_);
      throw ParseError(std::string("unknown character '") + peek() + "'",
                       pos_);
    }
    return out;
  }

private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' ||
                         peek() == '\r'))
      ++pos_;
  }

  static bool is_letter(char c) { return c == 'X' || c == 'Y' || c == 'Z'; }

  bool starts_atom() const {
    return !at_end() && (is_letter(peek()) || peek() == '(');
  }

  // term+ — at least one term, then as many as keep appearing.
  void parse_terms(Word &out) {
    if (!starts_atom()) {
      if (!at_end() && peek() == ')')
        throw ParseError("unbalanced parenthesis", pos_);
      throw ParseError(at_end() ? std::string("expected a term")
                                : std::string("unknown character '") + peek() +
                                      "'",
                       pos_);
    }
    while (starts_atom()) {
      parse_term(out);
      skip_ws();
    }
  }

  void parse_term(Word &out) {
    Word atom;
    parse_atom(atom);
    skip_ws();
    unsigned long long exponent = 1;
    if (!at_end() && peek() == '^') {
      std::size_t caret = pos_;
      ++pos_;
      skip_ws();
      if (at_end() || peek() < '0' || peek() > '9')
        throw ParseError("exponent has no digits", at_end() ? pos_ : pos_);
      exponent = 0;
      while (!at_end() && peek() >= '0' && peek() <= '9') {
        exponent = exponent * 10 + (unsigned long long)(peek() - '0');
        if (exponent > kMaxExponent)
          throw ParseError("exponent exceeds the limit of 10^4", caret);
        ++pos_;
      }
    }
    unsigned long long grown =
        (unsigned long long)out.size() + (unsigned long long)atom.size() * exponent;
    if (grown > kMaxExpandedLength)
      throw ParseError("expanded word exceeds the limit of 10^6 letters",
                       pos_ > 0 ? pos_ - 1 : 0);
    for (unsigned long long i = 0; i < exponent; ++i)
      out += atom;
  }

  void parse_atom(Word &out) {
    skip_ws();
    if (at_end())
      throw ParseError("expected 'X', 'Y', 'Z' or '('", pos_);
    char c = peek();
    if (is_letter(c)) {
      ++pos_;
      out.push_back(c);
      return;
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '1') {
        ++pos_;
        skip_ws();
        if (!at_end() && peek() != ')')
          throw ParseError("'1' must stand alone as the identity word", pos_);
      } else {
        parse_terms(out);
      }
      skip_ws();
      if (at_end() || peek() != ')')
        throw ParseError("unbalanced parenthesis", at_end() ? open : pos_);
      ++pos_;
      return;
    }
    throw ParseError(std::string("unknown character '") + c + "'", pos_);
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

// Length of the shortest u with w = u^k; the classic doubled-string trick.
std::size_t primitive_period(const Word &w) {
  std::string doubled = w + w;
  std::size_t p = doubled.find(w, 1);
  return (p != std::string::npos && w.size() % p == 0) ? p : w.size();
}

} // namespace

Word parse_word(const std::string &text) { return Parser(text).run(); }

std::string format_word(const Word &w) { return w.empty() ? "1" : w; }

std::string format_word_compact(const Word &w) {
  if (w.empty())
    return "1";
  std::size_t p = primitive_period(w);
  std::size_t k = w.size() / p;
  if (k < 2)
    return w;
  std::string root = w.substr(0, p);
  if (p == 1)
    return root + "^" + std::to_string(k);
  return "(" + root + ")^" + std::to_string(k);
}

Word reverse_word(const Word &w) {
  Word r(w.rbegin(), w.rend());
  return r;
}

} // namespace tvb
