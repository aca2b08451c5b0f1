#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cent2/parse.hpp"
#include "naive.hpp"

using namespace cent2;

namespace {

const char* const kContexts[] = {"int/4",   "int/6",      "int/12",       "int/9",     "int/25",
                                 "gauss/2", "gauss/1+1i", "gauss/3",      "gauss/2+1i", "gauss/12",
                                 "gauss/3+3i", "poly/2/x^2", "poly/2/x^2+x+1", "poly/3/x^2", "poly/5/x^2+1"};

}  // namespace

TEST(MakeContext, Cardinalities) {
  EXPECT_EQ(parse_ring("int/12")->size(), 12u);
  EXPECT_EQ(parse_ring("gauss/12")->size(), 144u);
  EXPECT_EQ(parse_ring("gauss/1+1i")->size(), 2u);
  EXPECT_EQ(parse_ring("poly/2/x^2+x+1")->size(), 4u);
  EXPECT_EQ(parse_ring("poly/3/x^3")->size(), 27u);
}

TEST(MakeContext, RejectsZeroAndUnits) {
  EXPECT_THROW(make_context(Element::integer(0)), DomainError);
  EXPECT_THROW(make_context(Element::integer(-1)), DomainError);
  EXPECT_THROW(make_context(Element::gaussian(0, 1)), DomainError);
  EXPECT_THROW(make_context(Element::polynomial(3, {2})), DomainError);
  EXPECT_THROW(make_context(BaseRing::gaussian(), Element::integer(3)), TypeError);
}

TEST(MakeContext, ModulusIsNormalized) {
  EXPECT_EQ(make_context(Element::integer(-12))->modulus(), Element::integer(12));
  EXPECT_EQ(make_context(Element::gaussian(0, 12))->modulus(), Element::gaussian(12, 0));
}

TEST(Reduce, Examples) {
  EXPECT_EQ(parse_ring("int/12")->reduce(Element::integer(14)).lift(), Element::integer(2));
  EXPECT_EQ(parse_ring("int/12")->reduce(Element::integer(-1)).lift(), Element::integer(11));
  EXPECT_EQ(parse_ring("gauss/12")->reduce(Element::gaussian(0, 9)).lift(), Element::gaussian(0, 9));
  const BaseRing f2 = BaseRing::polynomials(2);
  EXPECT_EQ(parse_ring("poly/2/x^2+x+1")->reduce(parse_element("x^2", f2)).lift(), parse_element("x+1", f2));
}

TEST(Reduce, GaussianLatticeRepresentativesAreUnique) {
  // Every lattice-coset representative is hit exactly once by reducing a
  // large box of Gaussian integers.
  for (const char* spec : {"gauss/2+1i", "gauss/3+3i", "gauss/1+2i", "gauss/4+1i"}) {
    Context ctx = parse_ring(spec);
    std::set<std::uint64_t> seen;
    for (int re = -20; re <= 20; ++re)
      for (int im = -20; im <= 20; ++im) {
        Residue r = ctx->reduce(Element::gaussian(re, im));
        EXPECT_EQ(ctx->reduce(r.lift()), r);
        // x - rep is a multiple of k
        EXPECT_TRUE(divides(ctx->modulus(), Element::gaussian(re, im) - r.lift()));
        seen.insert(ctx->index_of(r));
      }
    EXPECT_EQ(seen.size(), ctx->size()) << spec;
  }
}

TEST(Invertible, Examples) {
  Context z12 = parse_ring("int/12");
  EXPECT_TRUE(is_invertible(z12->reduce(Element::integer(5))));
  EXPECT_FALSE(is_invertible(z12->reduce(Element::integer(4))));
  Context g12 = parse_ring("gauss/12");
  Residue i = g12->reduce(Element::gaussian(0, 1));
  ASSERT_TRUE(is_invertible(i));
  EXPECT_EQ(*inverse(i), g12->reduce(Element::gaussian(0, -1)));
  EXPECT_FALSE(inverse(z12->reduce(Element::integer(6))).has_value());
}

TEST(Annihilator, Examples) {
  Context z12 = parse_ring("int/12");
  PrincipalIdeal a = annihilator(z12->reduce(Element::integer(4)));
  EXPECT_EQ(a.generator.lift(), Element::integer(3));
  EXPECT_EQ(a.cardinality, 4u);
  EXPECT_EQ(naive::members(a), (std::set<std::uint64_t>{0, 3, 6, 9}));

  a = annihilator(z12->zero());
  EXPECT_TRUE(a.is_whole_ring());
  EXPECT_EQ(a.cardinality, 12u);

  Context g12 = parse_ring("gauss/12");
  a = annihilator(g12->reduce(Element::gaussian(3, 0)));
  EXPECT_EQ(a.generator.lift(), Element::gaussian(4, 0));
  EXPECT_EQ(a.cardinality, 9u);
}

TEST(AnnIntersection, Examples) {
  Context z12 = parse_ring("int/12");
  PrincipalIdeal a = ann_intersection(z12->reduce(Element::integer(4)), z12->reduce(Element::integer(6)));
  EXPECT_EQ(a.generator.lift(), Element::integer(6));
  EXPECT_EQ(a.cardinality, 2u);
  EXPECT_EQ(naive::members(a), (std::set<std::uint64_t>{0, 6}));
  EXPECT_TRUE(ann_intersection(z12->zero(), z12->zero()).is_whole_ring());

  Context g12 = parse_ring("gauss/12");
  a = ann_intersection(g12->reduce(Element::gaussian(3, 6)), g12->reduce(Element::gaussian(0, 9)));
  EXPECT_EQ(a.generator.lift(), Element::gaussian(4, 0));
  EXPECT_EQ(a.cardinality, 9u);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(parse_ring("int/4")->enumerate().size(), 4u);
  auto g = parse_ring("gauss/1+1i")->enumerate();
  ASSERT_EQ(g.size(), 2u);
  EXPECT_TRUE(g[0].is_zero());
  auto p = parse_ring("poly/2/x^2")->enumerate();
  ASSERT_EQ(p.size(), 4u);
  std::vector<std::string> names;
  for (const auto& r : p) names.push_back(r.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"0", "1", "x", "x+1"}));
}

class ContextProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(ContextProperties, EnumerationMatchesCardinality) {
  Context ctx = parse_ring(GetParam());
  auto all = ctx->enumerate();
  ASSERT_EQ(all.size(), ctx->size());
  std::set<std::string> distinct;
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(ctx->index_of(all[i]), i);
    EXPECT_EQ(ctx->reduce(all[i].lift()), all[i]);
    distinct.insert(all[i].to_string());
  }
  EXPECT_EQ(distinct.size(), all.size());
}

TEST_P(ContextProperties, ReduceIsAHomomorphism) {
  Context ctx = parse_ring(GetParam());
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> u(-500, 500);
  for (int i = 0; i < 1000; ++i) {
    Element a, b;
    switch (ctx->ring().kind) {
      case RingKind::Int:
        a = Element::integer(u(rng));
        b = Element::integer(u(rng));
        break;
      case RingKind::Gauss:
        a = Element::gaussian(u(rng), u(rng));
        b = Element::gaussian(u(rng), u(rng));
        break;
      case RingKind::Poly: {
        std::vector<std::int64_t> ca(6), cb(6);
        for (auto& c : ca) c = u(rng);
        for (auto& c : cb) c = u(rng);
        a = Element::polynomial(ctx->ring().characteristic, ca);
        b = Element::polynomial(ctx->ring().characteristic, cb);
        break;
      }
    }
    EXPECT_EQ(ctx->reduce(a + b), ctx->reduce(a) + ctx->reduce(b));
    EXPECT_EQ(ctx->reduce(a * b), ctx->reduce(a) * ctx->reduce(b));
    EXPECT_EQ(ctx->reduce(a - b), ctx->reduce(a) - ctx->reduce(b));
  }
}

TEST_P(ContextProperties, AnnihilatorIsExtensional) {
  Context ctx = parse_ring(GetParam());
  if (ctx->size() > 256) GTEST_SKIP();
  for (const auto& r : ctx->enumerate()) {
    PrincipalIdeal a = annihilator(r);
    auto expected = naive::annihilator(r);
    EXPECT_EQ(naive::members(a), expected) << r.to_string();
    EXPECT_EQ(a.cardinality, expected.size());
    for (const auto& x : ctx->enumerate()) EXPECT_EQ(a.contains(x), expected.count(ctx->index_of(x)) == 1);
  }
}

TEST_P(ContextProperties, AnnIntersectionIsExtensional) {
  Context ctx = parse_ring(GetParam());
  auto all = ctx->enumerate();
  std::mt19937_64 rng(29);
  const bool exhaustive = all.size() <= 64;
  const std::size_t pairs = exhaustive ? all.size() * all.size() : 400;
  for (std::size_t n = 0; n < pairs; ++n) {
    const Residue& x = exhaustive ? all[n / all.size()] : all[rng() % all.size()];
    const Residue& y = exhaustive ? all[n % all.size()] : all[rng() % all.size()];
    auto ax = naive::annihilator(x), ay = naive::annihilator(y);
    std::set<std::uint64_t> both;
    for (auto v : ax)
      if (ay.count(v)) both.insert(v);
    PrincipalIdeal got = ann_intersection(x, y);
    EXPECT_EQ(naive::members(got), both);
    EXPECT_EQ(got.cardinality, both.size());
  }
}

TEST_P(ContextProperties, InvertibilityMatchesSearch) {
  Context ctx = parse_ring(GetParam());
  if (ctx->size() > 256) GTEST_SKIP();
  auto all = ctx->enumerate();
  for (const auto& r : all) {
    bool found = false;
    for (const auto& s : all) found = found || (r * s == ctx->one());
    EXPECT_EQ(is_invertible(r), found) << r.to_string();
    if (found) EXPECT_EQ(*inverse(r) * r, ctx->one());
  }
}

TEST_P(ContextProperties, IdealCardinalityMatchesEnumeration) {
  Context ctx = parse_ring(GetParam());
  if (ctx->size() > 256) GTEST_SKIP();
  for (const auto& g : ctx->enumerate()) {
    PrincipalIdeal i = principal_ideal(g);
    auto generated = naive::ideal_generated(*ctx, {g});
    EXPECT_EQ(i.cardinality, generated.size()) << g.to_string();
    EXPECT_EQ(naive::members(i), generated);
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, ContextProperties, ::testing::ValuesIn(kContexts), [](const auto& info) {
  std::string name;
  for (char c : std::string(info.param)) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return name;
});

TEST(Residue, MixingContextsIsATypeError) {
  Context a = parse_ring("int/4"), b = parse_ring("int/6");
  EXPECT_THROW(a->one() + b->one(), TypeError);
  EXPECT_THROW(a->index_of(b->one()), TypeError);
  EXPECT_THROW(a->reduce(Element::gaussian(1, 1)), TypeError);
}

TEST(Residue, EqualContextsFromSeparateConstruction) {
  Context a = parse_ring("int/6"), b = parse_ring("int/6");
  EXPECT_EQ((a->one() + b->one()).lift(), Element::integer(2));
}
