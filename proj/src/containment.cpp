#include "cent2/containment.hpp"

#include <array>

#include "cent2/counting.hpp"

namespace cent2 {

namespace {

struct Triple {
  const char* name;
  Element value;
};

std::array<Triple, 3> entries(const Mat2<Element>& b) { return {{{"e-h", b.e - b.h}, {"f", b.f}, {"g", b.g}}}; }

// (b, c, a) index triples: the pair and the remaining element.
constexpr int kPairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};

const PrimePower* first_prime_dividing(const QuotientContext& ctx, const Element& x) {
  for (const auto& pp : ctx.factorization().factors)
    if (divides(pp.prime, x)) return &pp;
  return nullptr;
}

std::vector<ContainmentDiagnostic> theta_failures(const QuotientContext& ctx, const Mat2<Element>& b) {
  std::vector<ContainmentDiagnostic> out;
  if (is_scalar(b)) return out;
  const Element& k = ctx.modulus();
  const auto t = entries(b);
  for (const auto& pp : ctx.factorization().factors) {
    if (divides(pp.prime, t[0].value) && divides(pp.prime, t[1].value) && divides(pp.prime, t[2].value))
      out.push_back({"s2_in_s1", pp.prime, pp.exponent, "prime divides e-h, f and g"});
  }
  for (const auto& pair : kPairs) {
    const Triple &x = t[pair[0]], &y = t[pair[1]], &a = t[pair[2]];
    Element delta = gcd({x.value, y.value, k});
    if (delta.is_unit() || gcd(a.value, delta).is_unit()) continue;
    const PrimePower* pp = first_prime_dividing(ctx, gcd(a.value, delta));
    out.push_back({"s2_in_s1", pp->prime, pp->exponent,
                   std::string("gcd(") + x.name + ", " + y.name + ", k) = " + delta.to_string() + " and " + a.name +
                       " is not invertible modulo it"});
  }
  return out;
}

}  // namespace

bool cen_equals_theta(const QuotientContext& ctx, const Mat2<Element>& b) {
  if (is_scalar(b)) return true;
  if (!defect(b, ctx.modulus()).is_one()) return false;
  return theta_failures(ctx, b).empty();
}

bool cen_equals_s2(const Mat2<Residue>& bhat) { return bhat.f.is_zero() && bhat.g.is_zero(); }

bool s1_equals_s2(const Mat2<Residue>& bhat) {
  const Residue diff = bhat.e - bhat.h;
  return cen_equals_s2(bhat) && (diff.is_zero() || is_invertible(diff));
}

bool sufficient_invertible(const Mat2<Residue>& bhat) {
  return is_invertible(bhat.e - bhat.h) || is_invertible(bhat.f) || is_invertible(bhat.g);
}

bool pid_shortcut(const QuotientContext& ctx, const Mat2<Element>& b) {
  return is_scalar(b) || defect(b, ctx.modulus()).is_one();
}

ContainmentReport report(const QuotientContext& ctx, const Mat2<Element>& b) {
  const Mat2<Residue> bhat = reduce(ctx, b);
  ContainmentReport out;
  out.s2_subset_s1 = cen_equals_theta(ctx, b);
  out.s1_subset_s2 = cen_equals_s2(bhat);
  out.s1_equals_s2 = s1_equals_s2(bhat);
  out.defect = defect(b, ctx.modulus());
  if (!out.s2_subset_s1) out.diagnostics = theta_failures(ctx, b);
  if (!bhat.f.is_zero()) out.diagnostics.push_back({"s1_in_s2", std::nullopt, 0, "f is nonzero in R/<k>"});
  if (!bhat.g.is_zero()) out.diagnostics.push_back({"s1_in_s2", std::nullopt, 0, "g is nonzero in R/<k>"});
  if (!out.s1_subset_s2) out.diagnostics.push_back({"equal", std::nullopt, 0, "S1 is not contained in S2"});
  const Residue diff = bhat.e - bhat.h;
  if (!diff.is_zero() && !is_invertible(diff)) {
    const PrimePower* pp = first_prime_dividing(ctx, diff.lift());
    out.diagnostics.push_back({"equal", pp->prime, pp->exponent, "e-h is neither zero nor invertible in R/<k>"});
  }
  return out;
}

}  // namespace cent2
