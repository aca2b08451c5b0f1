#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cent2/quotient.hpp"

namespace cent2 {

/// [[e, f], [g, h]] over a base ring (T = Element) or a quotient (T = Residue).
template <class T>
struct Mat2 {
  T e, f, g, h;

  friend bool operator==(const Mat2&, const Mat2&) = default;

  friend Mat2 operator+(const Mat2& a, const Mat2& b) { return {a.e + b.e, a.f + b.f, a.g + b.g, a.h + b.h}; }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) { return {a.e - b.e, a.f - b.f, a.g - b.g, a.h - b.h}; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.e * b.e + a.f * b.g, a.e * b.f + a.f * b.h, a.g * b.e + a.h * b.g, a.g * b.f + a.h * b.h};
  }
  friend Mat2 operator*(const T& s, const Mat2& a) { return {s * a.e, s * a.f, s * a.g, s * a.h}; }
};

template <class T>
Mat2<T> transpose(const Mat2<T>& a) {
  return {a.e, a.g, a.f, a.h};
}

template <class T>
bool commutes(const Mat2<T>& a, const Mat2<T>& b) {
  return a * b == b * a;
}

/// e = h, f = 0, g = 0 in the matrix's own ring.
template <class T>
bool is_scalar(const Mat2<T>& b) {
  return b.e == b.h && b.f.is_zero() && b.g.is_zero();
}

Mat2<Element> identity2(const BaseRing& ring);
Mat2<Residue> identity2(const QuotientContext& ctx);

Mat2<Residue> reduce(const QuotientContext& ctx, const Mat2<Element>& b);
/// Entrywise canonical representatives.
Mat2<Element> lift(const Mat2<Residue>& b);

std::string to_string(const Mat2<Element>& m);
std::string to_string(const Mat2<Residue>& m);

/// Small square matrix, row-major.
template <class T>
class MatN {
 public:
  MatN(std::size_t n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1 || entries_.size() != n_ * n_) throw DomainError("matrix entries do not form a square");
  }

  std::size_t n() const { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<T>& entries() const { return entries_; }

  friend bool operator==(const MatN&, const MatN&) = default;

  friend MatN operator+(const MatN& a, const MatN& b) {
    a.require_shape(b);
    std::vector<T> c;
    c.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i) c.push_back(a.entries_[i] + b.entries_[i]);
    return MatN(a.n_, std::move(c));
  }

  friend MatN operator-(const MatN& a, const MatN& b) {
    a.require_shape(b);
    std::vector<T> c;
    c.reserve(a.entries_.size());
    for (std::size_t i = 0; i < a.entries_.size(); ++i) c.push_back(a.entries_[i] - b.entries_[i]);
    return MatN(a.n_, std::move(c));
  }

  friend MatN operator*(const MatN& a, const MatN& b) {
    a.require_shape(b);
    const std::size_t n = a.n_;
    std::vector<T> c;
    c.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t l = 1; l < n; ++l) acc = acc + a(i, l) * b(l, j);
        c.push_back(std::move(acc));
      }
    }
    return MatN(n, std::move(c));
  }

 private:
  void require_shape(const MatN& other) const {
    if (n_ != other.n_) throw TypeError("matrix shape mismatch");
  }

  std::size_t n_;
  std::vector<T> entries_;
};

template <class T>
MatN<T> transpose(const MatN<T>& a) {
  std::vector<T> c;
  c.reserve(a.entries().size());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) c.push_back(a(j, i));
  return MatN<T>(a.n(), std::move(c));
}

template <class T>
bool commutes(const MatN<T>& a, const MatN<T>& b) {
  return a * b == b * a;
}

MatN<Residue> reduce(const QuotientContext& ctx, const MatN<Element>& b);
MatN<Element> to_elements(const MatN<std::int64_t>& b);
std::string to_string(const MatN<Element>& m);
std::string to_string(const MatN<Residue>& m);

}  // namespace cent2
