// Exact rational arithmetic on checked 64-bit integers.
//
// All tensor entries this engine manipulates are small integers (random
// models draw from [-9, 9]) combined over contractions of dimension <= 3,
// so int64 headroom is enormous; nevertheless every multiplication and
// addition is range-checked via __int128 and throws std::overflow_error
// rather than wrapping.  Values are kept normalized (gcd 1, positive
// denominator) at all times, which makes operator== structural.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tvb {

class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }

  Rational operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
  }

  Rational &operator+=(const Rational &o) {
    // a/b + c/d = (a*d + c*b) / (b*d), normalized afterwards.
    __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
    __int128 d = (__int128)den_ * o.den_;
    assign_checked(n, d);
    return *this;
  }
  Rational &operator-=(const Rational &o) { return *this += -o; }
  Rational &operator*=(const Rational &o) {
    __int128 n = (__int128)num_ * o.num_;
    __int128 d = (__int128)den_ * o.den_;
    assign_checked(n, d);
    return *this;
  }
  Rational &operator/=(const Rational &o) {
    if (o.num_ == 0)
      throw std::domain_error("rational division by zero");
    __int128 n = (__int128)num_ * o.den_;
    __int128 d = (__int128)den_ * o.num_;
    assign_checked(n, d);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return !(a == b);
  }

  // "p/q" in lowest terms; integers print without the "/1".
  std::string str() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "p" or "p/q".  Throws std::invalid_argument on junk.
  static Rational parse(const std::string &s) {
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return Rational(parse_int(s));
    return Rational(parse_int(s.substr(0, slash)),
                    parse_int(s.substr(slash + 1)));
  }

private:
  static std::int64_t parse_int(const std::string &s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size())
      throw std::invalid_argument("bad integer literal: " + s);
    return v;
  }

  static std::int64_t checked_neg(std::int64_t v) {
    if (v == INT64_MIN)
      throw std::overflow_error("rational overflow (negate)");
    return -v;
  }

  void assign_checked(__int128 n, __int128 d) {
    if (d == 0)
      throw std::domain_error("rational zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("rational overflow");
    num_ = (std::int64_t)n;
    den_ = (std::int64_t)d;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { assign_checked(num_, den_); }

  std::int64_t num_;
  std::int64_t den_;
};

} // namespace tvb
