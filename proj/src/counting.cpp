#include "cent2/counting.hpp"

namespace cent2 {

Element defect(const Mat2<Element>& b, const Element& k) { return gcd({b.e - b.h, b.f, b.g, k}); }

std::uint64_t ideal_size(const QuotientContext& ctx, const Element& x) {
  return ctx.size() / quotient_size(gcd(x, ctx.modulus()));
}

Cardinality count(const QuotientContext& ctx, const Mat2<Element>& b) {
  const Element& k = ctx.modulus();
  Element d = defect(b, k);
  // k/d a unit (scalar B^) gives |R/<1>| = 1 and |<1^>| = |R/<k>|.
  Element kd = exact_div(k, d);
  Cardinality reduced = quotient_size(kd);
  Cardinality ideal = ideal_size(ctx, kd);
  return checked_mul(checked_pow(reduced, 2), checked_pow(ideal, 4));
}

Cardinality count_zk(const Mat2<Element>& b, std::int64_t k) {
  if (k < 2) throw DomainError("Z/kZ needs k >= 2");
  Element d = defect(b, Element::integer(k));
  Cardinality kd = checked_mul(static_cast<Cardinality>(k), static_cast<Cardinality>(d.as_integer()));
  return checked_mul(kd, kd);
}

Cardinality coprime_count_check(const QuotientContext& ctx, const Mat2<Element>& b) {
  Element d = defect(b, ctx.modulus());
  if (!d.is_one()) throw DomainError("gcd(e-h, f, g, k) = " + d.to_string() + ", expected 1");
  return checked_pow(ctx.size(), 2);
}

std::optional<Mat2<Residue>> EquivClassStructure::class_of(const Mat2<Residue>& a) const {
  if (degenerate()) return std::nullopt;
  return reduce(*reduced_ctx, lift(a));
}

EquivClassStructure equiv_structure(const Context& ctx, const Mat2<Element>& b) {
  const Element& k = ctx->modulus();
  Element d = defect(b, k);
  Element kd = exact_div(k, d);
  PrincipalIdeal ideal = principal_ideal(ctx->reduce(kd));
  Cardinality class_size = checked_pow(ideal.cardinality, 4);
  Cardinality total = count(*ctx, b);
  Context reduced = kd.is_unit() ? nullptr : make_context(kd);
  Mat2<Element> reduced_matrix{exact_div(b.e - b.h, d), exact_div(b.f, d), exact_div(b.g, d), Element::zero(b.e.ring())};
  return {d, kd, ideal, class_size, total / class_size, reduced, reduced_matrix};
}

std::vector<Residue> CrtDecomposition::forward(const Residue& r) const {
  if (!r.context().same_as(*ctx)) throw TypeError("residue is not in " + ctx->spec());
  std::vector<Residue> parts;
  parts.reserve(factors.size());
  for (const auto& f : factors) parts.push_back(f.ctx->reduce(r.lift()));
  return parts;
}

Residue CrtDecomposition::backward(const std::vector<Residue>& parts) const {
  if (parts.size() != factors.size()) throw DomainError("wrong number of CRT components");
  Element acc = Element::zero(ctx->ring());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].context().same_as(*factors[i].ctx)) throw TypeError("CRT component in the wrong ring");
    acc = ctx->reduce(acc + idempotents[i] * parts[i].lift()).lift();
  }
  return ctx->reduce(acc);
}

std::vector<Mat2<Residue>> CrtDecomposition::forward(const Mat2<Residue>& a) const {
  auto e = forward(a.e), f = forward(a.f), g = forward(a.g), h = forward(a.h);
  std::vector<Mat2<Residue>> out;
  for (std::size_t i = 0; i < factors.size(); ++i) out.push_back({e[i], f[i], g[i], h[i]});
  return out;
}

Mat2<Residue> CrtDecomposition::backward(const std::vector<Mat2<Residue>>& parts) const {
  std::vector<Residue> e, f, g, h;
  for (const auto& m : parts) {
    e.push_back(m.e);
    f.push_back(m.f);
    g.push_back(m.g);
    h.push_back(m.h);
  }
  return {backward(e), backward(f), backward(g), backward(h)};
}

CrtDecomposition crt_decompose(const Context& ctx) {
  CrtDecomposition out{ctx, {}, {}};
  const Element& k = ctx->modulus();
  for (const auto& pp : ctx->factorization().factors) {
    Element q = normalize(power(pp.prime, pp.exponent));
    Element cofactor = exact_div(k, q);
    Bezout bz = extended_gcd(cofactor, q);
    if (!bz.gcd.is_one()) throw DomainError("CRT factors are not coprime");
    Context part = make_context(q);
    // Only s mod q matters; reducing first keeps the product small.
    out.idempotents.push_back(ctx->reduce(part->reduce(bz.s).lift() * cofactor).lift());
    out.factors.push_back({pp, q, std::move(part)});
  }
  return out;
}

}  // namespace cent2
