#pragma once

// When is S2 inside S1, S1 inside S2, or S1 = S2? Each question reduces to
// gcd and invertibility predicates on e-h, f, g and k.

#include <optional>
#include <string>
#include <vector>

#include "cent2/matrix.hpp"

namespace cent2 {

/// S2 ⊆ S1, i.e. Cen(B^) = Theta(Cen(B)). True iff the lift B is scalar, or
/// gcd(e-h, f, g, k) = 1 and for each pair (b, c) from {e-h, f, g} with a
/// non-unit delta = gcd(b, c, k) the third element a has gcd(a, delta) = 1.
bool cen_equals_theta(const QuotientContext& ctx, const Mat2<Element>& b);

/// S1 ⊆ S2, i.e. Cen(B^) = S2: f^ = g^ = 0.
bool cen_equals_s2(const Mat2<Residue>& bhat);

/// S1 = S2: f^ = g^ = 0 and e^ - h^ is invertible or zero.
bool s1_equals_s2(const Mat2<Residue>& bhat);

/// One of e^-h^, f^, g^ is invertible. Implies cen_equals_theta.
bool sufficient_invertible(const Mat2<Residue>& bhat);

/// Simplified PID form of cen_equals_theta: scalar lift or gcd(e-h, f, g, k) = 1.
bool pid_shortcut(const QuotientContext& ctx, const Mat2<Element>& b);

struct ContainmentDiagnostic {
  std::string predicate;  // "s2_in_s1", "s1_in_s2" or "equal"
  std::optional<Element> prime;
  int exponent = 0;
  std::string condition;
};

struct ContainmentReport {
  bool s2_subset_s1 = false;
  bool s1_subset_s2 = false;
  bool s1_equals_s2 = false;
  Element defect;
  std::vector<ContainmentDiagnostic> diagnostics;
};

ContainmentReport report(const QuotientContext& ctx, const Mat2<Element>& b);

}  // namespace cent2
