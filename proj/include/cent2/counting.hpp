#pragma once

// Exact cardinality of Cen(B^) in M_2(R/<k>):
//
//   |Cen(B^)| = |R/<k/d>|^2 * |<(k/d)^>|^4,   d = gcd(e-h, f, g, k),
//
// together with the equivalence-class structure behind it and the Chinese
// remainder splitting of R/<k>.

#include <optional>
#include <vector>

#include "cent2/matrix.hpp"

namespace cent2 {

/// gcd(e-h, f, g, k), normalized.
Element defect(const Mat2<Element>& b, const Element& k);

Cardinality count(const QuotientContext& ctx, const Mat2<Element>& b);

/// (k*d)^2 over Z/kZ.
Cardinality count_zk(const Mat2<Element>& b, std::int64_t k);

/// |R/<k>|^2; throws DomainError unless gcd(e-h, f, g, k) = 1.
Cardinality coprime_count_check(const QuotientContext& ctx, const Mat2<Element>& b);

/// |<x^>| = |R/<k>| / |R/<gcd(x, k)>|.
std::uint64_t ideal_size(const QuotientContext& ctx, const Element& x);

struct EquivClassStructure {
  Element d;
  Element k_over_d;
  PrincipalIdeal class_ideal;  // <(k/d)^> in R/<k>
  Cardinality class_size = 0;  // |class_ideal|^4
  Cardinality class_count = 0;
  /// R/<k/d>; null when k/d is a unit (B^ scalar, a single class).
  Context reduced_ctx;
  /// B' = [[(e-h)/d, f/d], [g/d, 0]].
  Mat2<Element> reduced_matrix;

  bool degenerate() const { return reduced_ctx == nullptr; }
  /// Class of A^ as its image mod k/d; nullopt in the degenerate case.
  std::optional<Mat2<Residue>> class_of(const Mat2<Residue>& a) const;
};

EquivClassStructure equiv_structure(const Context& ctx, const Mat2<Element>& b);

struct CrtFactor {
  PrimePower prime_power;
  Element modulus;  // normalized prime^exponent
  Context ctx;
};

/// R/<k> ≅ ⊕ R/<p_i^{n_i}>.
struct CrtDecomposition {
  Context ctx;
  std::vector<CrtFactor> factors;
  /// idempotents[i] ≡ 1 mod p_i^{n_i} and ≡ 0 mod the other factors.
  std::vector<Element> idempotents;

  std::vector<Residue> forward(const Residue& r) const;
  Residue backward(const std::vector<Residue>& parts) const;
  std::vector<Mat2<Residue>> forward(const Mat2<Residue>& a) const;
  Mat2<Residue> backward(const std::vector<Mat2<Residue>>& parts) const;
};

CrtDecomposition crt_decompose(const Context& ctx);

}  // namespace cent2
