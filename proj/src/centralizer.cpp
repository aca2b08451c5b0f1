#include "cent2/centralizer.hpp"

#include <algorithm>
#include <array>

#include "cent2/counting.hpp"

namespace cent2 {

namespace {

using IndexKey = std::array<std::uint64_t, 4>;

IndexKey index_key(const QuotientContext& ctx, const Mat2<Residue>& a) {
  return {ctx.index_of(a.e), ctx.index_of(a.f), ctx.index_of(a.g), ctx.index_of(a.h)};
}

}  // namespace

BaseCentralizer base_centralizer(const Mat2<Element>& b) {
  const BaseRing ring = b.e.ring();
  const Element zero = Element::zero(ring);
  const Mat2<Element> zero2{zero, zero, zero, zero};
  if (is_scalar(b)) return {true, zero, identity2(ring), zero2};
  Element diff = b.e - b.h;
  Element m = gcd({diff, b.f, b.g});
  Mat2<Element> c{exact_div(diff, m), exact_div(b.f, m), exact_div(b.g, m), zero};
  return {false, m, identity2(ring), c};
}

std::vector<Mat2<Residue>> s1_set(const QuotientContext& ctx, const Mat2<Element>& b, const Budget& budget) {
  BaseCentralizer base = base_centralizer(b);
  const std::uint64_t n = ctx.size();
  std::vector<std::pair<IndexKey, Mat2<Residue>>> keyed;
  const auto residues = ctx.enumerate();
  if (base.full_ring) {
    require_budget("S1 (full matrix ring)", checked::mul(checked::mul(n, n), checked::mul(n, n)), budget);
    for (const auto& x : residues)
      for (const auto& y : residues)
        for (const auto& z : residues)
          for (const auto& w : residues) keyed.push_back({{}, {x, y, z, w}});
    return [&] {
      std::vector<Mat2<Residue>> out;
      out.reserve(keyed.size());
      for (auto& [key, mat] : keyed) out.push_back(std::move(mat));
      return out;
    }();
  }
  require_budget("S1 parameter pairs", checked::mul(n, n), budget);
  const Mat2<Residue> e = reduce(ctx, base.identity);
  const Mat2<Residue> c = reduce(ctx, base.generator);
  for (const auto& v : residues) {
    const Mat2<Residue> ve = v * e;
    for (const auto& w : residues) {
      Mat2<Residue> a = ve + w * c;
      keyed.push_back({index_key(ctx, a), std::move(a)});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  std::vector<Mat2<Residue>> out;
  out.reserve(keyed.size());
  for (auto& [key, mat] : keyed) out.push_back(std::move(mat));
  return out;
}

Mat2<PrincipalIdeal> s2_ideals(const Mat2<Residue>& bhat) {
  const Residue diff = bhat.e - bhat.h;
  PrincipalIdeal diag = ann_intersection(bhat.f, bhat.g);
  return {diag, ann_intersection(bhat.g, diff), ann_intersection(bhat.f, diff), diag};
}

bool in_s2(const Mat2<PrincipalIdeal>& s2, const Mat2<Residue>& a) {
  return s2.e.contains(a.e) && s2.f.contains(a.f) && s2.g.contains(a.g) && s2.h.contains(a.h);
}

const char* to_string(WitnessPair pair) {
  switch (pair) {
    case WitnessPair::DiffAndF: return "e-h,f";
    case WitnessPair::DiffAndG: return "e-h,g";
    case WitnessPair::FAndG: return "f,g";
  }
  return "?";
}

IMatrixWitness i_matrix_witness(const Mat2<Residue>& bhat) {
  // Every supported base ring is a PID, so the first pair always generates a
  // principal ideal: <x^, y^> = <gcd(x, y, k)^>.
  const Element& k = bhat.e.context().modulus();
  return {gcd({bhat.e.lift() - bhat.h.lift(), bhat.f.lift(), k}), WitnessPair::DiffAndF};
}

CentralizerDescription describe(const Context& ctx, const Mat2<Element>& b) {
  CentralizerDescription out{ctx,
                             b,
                             reduce(*ctx, b),
                             base_centralizer(b),
                             std::nullopt,
                             s2_ideals(reduce(*ctx, b)),
                             {},
                             defect(b, ctx->modulus()),
                             count(*ctx, b)};
  if (!out.base.full_ring) out.s1_generators.emplace(reduce(*ctx, out.base.identity), reduce(*ctx, out.base.generator));
  out.witness = i_matrix_witness(out.bhat);
  return out;
}

const char* to_string(FieldCase c) {
  switch (c) {
    case FieldCase::Scalar: return "scalar";
    case FieldCase::Diagonal: return "diagonal";
    case FieldCase::LowerTriangular: return "lower-triangular";
    case FieldCase::General: return "general";
  }
  return "?";
}

Mat2<Residue> FieldCentralizer::at(const Residue& a, const Residue& b) const {
  if (!parameters) throw DomainError("scalar case has no two-parameter form");
  return a * parameters->first + b * parameters->second;
}

std::vector<Mat2<Residue>> FieldCentralizer::elements() const {
  const auto residues = ctx->enumerate();
  std::vector<Mat2<Residue>> out;
  if (!parameters) {
    for (const auto& x : residues)
      for (const auto& y : residues)
        for (const auto& z : residues)
          for (const auto& w : residues) out.push_back({x, y, z, w});
    return out;
  }
  for (const auto& a : residues)
    for (const auto& b : residues) out.push_back(at(a, b));
  return out;
}

FieldCentralizer field_centralizer(std::int64_t p, const Mat2<Element>& b) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  Context ctx = make_context(BaseRing::integers(), Element::integer(p));
  const Mat2<Residue> bh = reduce(*ctx, b);
  const Residue zero = ctx->zero(), one = ctx->one();
  const Residue diff = bh.e - bh.h;
  const Cardinality p2 = checked_pow(static_cast<Cardinality>(p), 2);
  if (is_scalar(bh)) return {FieldCase::Scalar, ctx, std::nullopt, checked_pow(static_cast<Cardinality>(p), 4)};
  const Mat2<Residue> id = identity2(*ctx);
  if (bh.f.is_zero() && bh.g.is_zero()) {
    return {FieldCase::Diagonal, ctx, std::pair{Mat2<Residue>{one, zero, zero, zero}, Mat2<Residue>{zero, zero, zero, one}},
            p2};
  }
  if (bh.f.is_zero()) {
    const Residue ginv = *inverse(bh.g);
    return {FieldCase::LowerTriangular, ctx, std::pair{id, Mat2<Residue>{zero, zero, one, -(ginv * diff)}}, p2};
  }
  const Residue finv = *inverse(bh.f);
  return {FieldCase::General, ctx, std::pair{id, Mat2<Residue>{zero, one, finv * bh.g, -(finv * diff)}}, p2};
}

}  // namespace cent2
