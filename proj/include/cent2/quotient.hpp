#pragma once

// Finite quotient rings R/<k> with canonical residues.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cent2/ufd.hpp"

namespace cent2 {

class QuotientContext;
class Residue;

using Context = std::shared_ptr<const QuotientContext>;

/// Builds R/<k>. Throws DomainError if k is zero or a unit, TypeError if k
/// does not live in `ring`. The stored modulus is the normalized associate.
Context make_context(const BaseRing& ring, const Element& k);
Context make_context(const Element& k);

/// R/<k>, immutable after construction.
///
/// Canonical representatives:
///   Int   - [0, k)
///   Gauss - the box re in [0, A), im in [0, D) of the column Hermite normal
///           form {(A, 0), (offset, D)} of the lattice spanned by k and i*k
///   Poly  - remainders of degree < deg k
///
/// Residues are indexed 0..size()-1 in lexicographic order of their
/// canonical representative (Gauss: by (re, im); Poly: by coefficients from
/// the top degree down).
class QuotientContext : public std::enable_shared_from_this<QuotientContext> {
 public:
  const BaseRing& ring() const { return ring_; }
  const Element& modulus() const { return modulus_; }
  const Factorization& factorization() const { return factorization_; }
  std::uint64_t size() const { return size_; }

  Residue reduce(const Element& x) const;
  Residue zero() const;
  Residue one() const;

  std::uint64_t index_of(const Residue& r) const;
  Residue at(std::uint64_t index) const;
  std::vector<Residue> enumerate() const;

  /// Ring spec string, e.g. "int/12", "gauss/1+1i", "poly/2/x^2+x+1".
  std::string spec() const;
  bool same_as(const QuotientContext& other) const;

  /// Gaussian lattice basis {(A, 0), (offset, D)}; zero for other rings.
  std::int64_t lattice_a() const { return hnf_a_; }
  std::int64_t lattice_d() const { return hnf_d_; }
  std::int64_t lattice_offset() const { return hnf_offset_; }

 private:
  QuotientContext(BaseRing ring, Element modulus);
  friend Context make_context(const BaseRing& ring, const Element& k);

  Element canonical(const Element& x) const;

  BaseRing ring_;
  Element modulus_;
  Factorization factorization_;
  std::uint64_t size_ = 0;
  std::int64_t hnf_a_ = 0;
  std::int64_t hnf_d_ = 0;
  std::int64_t hnf_offset_ = 0;
};

/// Canonical representative of an element of R/<k>, bound to its context.
class Residue {
 public:
  const Element& lift() const { return rep_; }
  const QuotientContext& context() const { return *ctx_; }
  const Context& context_ptr() const { return ctx_; }

  bool is_zero() const { return rep_.is_zero(); }
  std::string to_string() const { return rep_.to_string(); }

  Residue operator-() const;
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue& operator+=(const Residue& b) { return *this = *this + b; }
  friend bool operator==(const Residue& a, const Residue& b);

 private:
  Residue(Context ctx, Element rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}
  friend class QuotientContext;

  Context ctx_;
  Element rep_;
};

void require_same_context(const Residue& a, const Residue& b);

/// The principal ideal <generator> of R/<k>.
struct PrincipalIdeal {
  Residue generator;
  std::uint64_t cardinality = 0;

  /// Normalized gcd(lift(generator), k); the ideal is theta(<this>).
  Element base_generator() const;
  bool contains(const Residue& x) const;
  /// Members sorted by residue index.
  std::vector<Residue> elements() const;
  bool is_whole_ring() const;
  bool is_zero() const { return cardinality == 1; }
};

/// <g> in R/<k>; |<g>| = |R/<k>| / |R/<gcd(g, k)>|.
PrincipalIdeal principal_ideal(const Residue& g);

bool is_invertible(const Residue& r);
std::optional<Residue> inverse(const Residue& r);

/// ann(r) = <(k / gcd(lift(r), k))^>.
PrincipalIdeal annihilator(const Residue& r);

/// ann(x) ∩ ann(y) = ann(gcd(lift x, lift y)^).
PrincipalIdeal ann_intersection(const Residue& x, const Residue& y);

}  // namespace cent2
