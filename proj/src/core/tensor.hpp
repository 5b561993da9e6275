// Dense exact-rational tensors of small rank (the multilinear data of
// concrete statomorphisms).  Row-major storage; all arithmetic exact.
#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace tvb {

class Tensor {
public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    long long n = 1;
    for (int d : shape_) {
      if (d < 0)
        throw std::invalid_argument("negative tensor dimension");
      n *= d;
    }
    data_.assign((std::size_t)n, Rational());
  }

  const std::vector<int> &shape() const { return shape_; }
  int rank() const { return (int)shape_.size(); }
  std::size_t size() const { return data_.size(); }

  const Rational &at(std::initializer_list<int> idx) const {
    return data_[offset(idx)];
  }
  Rational &at(std::initializer_list<int> idx) { return data_[offset(idx)]; }

  const std::vector<Rational> &entries() const { return data_; }
  std::vector<Rational> &entries() { return data_; }

  bool is_zero() const {
    for (const Rational &r : data_)
      if (!r.is_zero())
        return false;
    return true;
  }

  Tensor operator-() const {
    Tensor t = *this;
    for (Rational &r : t.data_)
      r = -r;
    return t;
  }

  Tensor &operator+=(const Tensor &o) {
    if (shape_ != o.shape_)
      throw std::invalid_argument("tensor shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] += o.data_[i];
    return t_ref();
  }

  friend Tensor operator+(Tensor a, const Tensor &b) { return a += b; }

  Tensor &scale(const Rational &c) {
    for (Rational &r : data_)
      r *= c;
    return t_ref();
  }

  friend bool operator==(const Tensor &a, const Tensor &b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Tensor &a, const Tensor &b) {
    return !(a == b);
  }

private:
  Tensor &t_ref() { return *this; }

  std::size_t offset(std::initializer_list<int> idx) const {
    if ((int)idx.size() != rank())
      throw std::invalid_argument("tensor index rank mismatch");
    std::size_t off = 0;
    int axis = 0;
    for (int i : idx) {
      if (i < 0 || i >= shape_[axis])
        throw std::out_of_range("tensor index out of range");
      off = off * (std::size_t)shape_[axis] + (std::size_t)i;
      ++axis;
    }
    return off;
  }

  std::vector<int> shape_;
  std::vector<Rational> data_;
};

// Coordinate vector of exact rationals.
using Vec = std::vector<Rational>;

inline Vec zero_vec(int n) { return Vec((std::size_t)n, Rational()); }

inline Vec &add_to(Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

inline Rational dot(const Vec &a, const Vec &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vector dimension mismatch");
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i)
    r += a[i] * b[i];
  return r;
}

// w[k] = sum_ij T[i][j][k] * u[i] * v[j]   (bilinear map into the third axis)
inline Vec apply_bilinear(const Tensor &t, const Vec &u, const Vec &v) {
  const auto &s = t.shape();
  if (t.rank() != 3 || (int)u.size() != s[0] || (int)v.size() != s[1])
    throw std::invalid_argument("bilinear application shape mismatch");
  Vec w = zero_vec(s[2]);
  for (int i = 0; i < s[0]; ++i) {
    if (u[i].is_zero())
      continue;
    for (int j = 0; j < s[1]; ++j) {
      if (v[j].is_zero())
        continue;
      Rational f = u[i] * v[j];
      for (int k = 0; k < s[2]; ++k)
        w[k] += t.at({i, j, k}) * f;
    }
  }
  return w;
}

// w[l] = sum_ijk T[i][j][k][l] * u[i] * v[j] * x[k]
inline Vec apply_trilinear(const Tensor &t, const Vec &u, const Vec &v,
                           const Vec &x) {
  const auto &s = t.shape();
  if (t.rank() != 4 || (int)u.size() != s[0] || (int)v.size() != s[1] ||
      (int)x.size() != s[2])
    throw std::invalid_argument("trilinear application shape mismatch");
  Vec w = zero_vec(s[3]);
  for (int i = 0; i < s[0]; ++i) {
    if (u[i].is_zero())
      continue;
    for (int j = 0; j < s[1]; ++j) {
      if (v[j].is_zero())
        continue;
      Rational f = u[i] * v[j];
      for (int k = 0; k < s[2]; ++k) {
        if (x[k].is_zero())
          continue;
        Rational g = f * x[k];
        for (int l = 0; l < s[3]; ++l)
          w[l] += t.at({i, j, k, l}) * g;
      }
    }
  }
  return w;
}

} // namespace tvb
