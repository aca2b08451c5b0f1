#pragma once

// Exact arithmetic in the three supported Euclidean domains: the integers,
// the Gaussian integers and univariate polynomials over a prime field.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cent2/errors.hpp"

namespace cent2 {

/// Exact count of matrices; |R/<k>|^4 overflows 64 bits well inside desk scale.
__extension__ typedef unsigned __int128 Cardinality;
__extension__ typedef __int128 Int128;

std::string to_string(Cardinality value);
Cardinality checked_mul(Cardinality a, Cardinality b);
Cardinality checked_pow(Cardinality base, unsigned exponent);

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
std::uint64_t mul(std::uint64_t a, std::uint64_t b);

/// Quotient rounded towards negative infinity; b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// Representative of a mod b in [0, b); b > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

}  // namespace checked

bool is_prime(std::int64_t n);

enum class RingKind { Int, Gauss, Poly };

/// Tag of a base ring. `characteristic` is the prime p for F_p[x] and 0
/// otherwise.
struct BaseRing {
  RingKind kind = RingKind::Int;
  std::int64_t characteristic = 0;

  static BaseRing integers() { return {RingKind::Int, 0}; }
  static BaseRing gaussian() { return {RingKind::Gauss, 0}; }
  /// Throws DomainError unless p is prime.
  static BaseRing polynomials(std::int64_t p);

  std::string name() const;
  friend bool operator==(const BaseRing&, const BaseRing&) = default;
};

struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

/// Polynomial over F_p, lowest degree first. Coefficients lie in [0, p) and
/// the list carries no trailing zeros (the zero polynomial is empty).
struct Polynomial {
  std::int64_t p = 2;
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

class Element {
 public:
  using Value = std::variant<std::int64_t, Gaussian, Polynomial>;

  Element() = default;

  static Element integer(std::int64_t value);
  static Element gaussian(std::int64_t re, std::int64_t im);
  /// Reduces coefficients mod p and trims; throws DomainError unless p is prime.
  static Element polynomial(std::int64_t p, std::vector<std::int64_t> coeffs);
  static Element constant(const BaseRing& ring, std::int64_t value);
  static Element zero(const BaseRing& ring) { return constant(ring, 0); }
  static Element one(const BaseRing& ring) { return constant(ring, 1); }

  BaseRing ring() const;
  RingKind kind() const { return static_cast<RingKind>(value_.index()); }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;

  /// Accessors throw TypeError on a tag mismatch.
  std::int64_t as_integer() const;
  const Gaussian& as_gaussian() const;
  const Polynomial& as_polynomial() const;
  const Value& value() const { return value_; }

  std::string to_string() const;

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element&, const Element&) = default;
  /// Total order used for deterministic listings: by ring, then by size
  /// (absolute value, norm or degree), then lexicographically.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  explicit Element(Value v) : value_(std::move(v)) {}
  Value value_ = std::int64_t{0};

  friend struct ElementAccess;
};

void require_same_ring(const Element& a, const Element& b);

struct DivMod {
  Element quotient;
  Element remainder;
};

/// Euclidean division a = q*b + r with r = 0 or size(r) < size(b). Throws
/// DomainError when b = 0.
DivMod divmod(const Element& a, const Element& b);

bool divides(const Element& d, const Element& a);

/// a / b, requiring b != 0 and b | a (DomainError otherwise).
Element exact_div(const Element& a, const Element& b);

struct Associate {
  Element unit;
  Element canonical;
};

/// canonical = unit^{-1} * a with canonical positive (Int), in the first
/// quadrant re > 0, im >= 0 (Gauss) or monic (Poly). Zero maps to (1, 0).
Associate normalize_associate(const Element& a);
Element normalize(const Element& a);
bool associates(const Element& a, const Element& b);

Element unit_inverse(const Element& unit);

/// Normalized gcd; gcd(0, 0) = 0.
Element gcd(const Element& a, const Element& b);
Element gcd(std::initializer_list<Element> elements);
Element gcd(std::span<const Element> elements);

struct Bezout {
  Element gcd;  // normalized
  Element s;
  Element t;
};

/// s*a + t*b == gcd(a, b).
Bezout extended_gcd(const Element& a, const Element& b);

struct PrimePower {
  Element prime;
  int exponent = 0;
};

struct Factorization {
  Element unit;
  std::vector<PrimePower> factors;

  Element expand() const;
};

/// Prime factorization with normalized, pairwise non-associate primes sorted
/// ascending. Throws DomainError for k = 0.
Factorization factor(const Element& k);

Element power(const Element& base, int exponent);

/// |R/<k>| for k != 0: |k| over Z, the norm over Z[i], p^deg over F_p[x].
std::uint64_t quotient_size(const Element& k);

std::int64_t norm(const Gaussian& z);

}  // namespace cent2
