#pragma once

// Structural description of Cen(B^) in M_2(R/<k>) as S1 + S2, where S1 is
// the image of the base-ring centralizer of a lift B and S2 is the matrix of
// annihilator intersections built from the entries of B^.

#include <optional>
#include <vector>

#include "cent2/matrix.hpp"

namespace cent2 {

/// Cen_{M_2(R)}(B): everything when B is scalar, otherwise {vE + wC} with
/// C = (1/m)[[e-h, f], [g, 0]] and m = gcd(e-h, f, g).
struct BaseCentralizer {
  bool full_ring = false;
  Element m;               // zero when full_ring
  Mat2<Element> identity;  // E
  Mat2<Element> generator; // C; zero when full_ring
};

BaseCentralizer base_centralizer(const Mat2<Element>& b);

/// S1 = {v^E^ + w^C^ : v^, w^ in R/<k>} (all of M_2(R/<k>) in the scalar
/// case), deduplicated and sorted by entry indices.
std::vector<Mat2<Residue>> s1_set(const QuotientContext& ctx, const Mat2<Element>& b, const Budget& budget = {});

/// Entry ideals of S2:
///   (1,1), (2,2): ann(f^) ∩ ann(g^)
///   (1,2):        ann(g^) ∩ ann(e^ - h^)
///   (2,1):        ann(f^) ∩ ann(e^ - h^)
Mat2<PrincipalIdeal> s2_ideals(const Mat2<Residue>& bhat);

/// Membership in the set S2 (entries drawn independently from the ideals).
bool in_s2(const Mat2<PrincipalIdeal>& s2, const Mat2<Residue>& a);

enum class WitnessPair { DiffAndF, DiffAndG, FAndG };

const char* to_string(WitnessPair pair);

struct IMatrixWitness {
  Element t;  // normalized, t | k
  WitnessPair pair = WitnessPair::DiffAndF;
};

/// <x^, y^> = <t^> for the first generator pair in the order (e^-h^, f^),
/// (e^-h^, g^), (f^, g^).
IMatrixWitness i_matrix_witness(const Mat2<Residue>& bhat);

struct CentralizerDescription {
  Context ctx;
  Mat2<Element> lift;
  Mat2<Residue> bhat;
  BaseCentralizer base;
  /// (E^, C^); nullopt when S1 is the full matrix ring.
  std::optional<std::pair<Mat2<Residue>, Mat2<Residue>>> s1_generators;
  Mat2<PrincipalIdeal> s2;
  IMatrixWitness witness;
  Element defect;
  Cardinality cardinality = 0;
};

/// Accepts any pre-image B of the target B^.
CentralizerDescription describe(const Context& ctx, const Mat2<Element>& b);

enum class FieldCase { Scalar, Diagonal, LowerTriangular, General };

const char* to_string(FieldCase c);

/// Cen over F_p split by which of the four cases applies. Outside the scalar
/// case the set is {a*P + b*Q : a, b in F_p}.
struct FieldCentralizer {
  FieldCase which = FieldCase::Scalar;
  Context ctx;
  std::optional<std::pair<Mat2<Residue>, Mat2<Residue>>> parameters;  // (P, Q)
  Cardinality cardinality = 0;

  Mat2<Residue> at(const Residue& a, const Residue& b) const;
  std::vector<Mat2<Residue>> elements() const;
};

/// Throws DomainError unless p is prime.
FieldCentralizer field_centralizer(std::int64_t p, const Mat2<Element>& b);

}  // namespace cent2
