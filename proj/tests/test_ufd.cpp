#include <gtest/gtest.h>

#include <random>

#include "cent2/parse.hpp"
#include "cent2/ufd.hpp"

using namespace cent2;

namespace {

const BaseRing Z = BaseRing::integers();
const BaseRing G = BaseRing::gaussian();
const BaseRing F2 = BaseRing::polynomials(2);
const BaseRing F3 = BaseRing::polynomials(3);

Element I(std::int64_t v) { return Element::integer(v); }
Element Gs(std::int64_t re, std::int64_t im) { return Element::gaussian(re, im); }
Element P(const char* text, const BaseRing& r) { return parse_element(text, r); }

Element random_element(const BaseRing& ring, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  switch (ring.kind) {
    case RingKind::Int: return I(u(rng));
    case RingKind::Gauss: return Gs(u(rng), u(rng));
    case RingKind::Poly: {
      std::uniform_int_distribution<int> deg(0, 6), c(0, static_cast<int>(ring.characteristic) - 1);
      std::vector<std::int64_t> coeffs(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& x : coeffs) x = c(rng);
      return Element::polynomial(ring.characteristic, coeffs);
    }
  }
  return I(0);
}

}  // namespace

TEST(Gcd, VariadicIntegerExample) { EXPECT_EQ(gcd({I(-6), I(2), I(4), I(12)}), I(2)); }

TEST(Gcd, WithZero) {
  EXPECT_EQ(gcd(I(0), I(12)), I(12));
  EXPECT_EQ(gcd(I(0), I(-12)), I(12));
  EXPECT_EQ(gcd(I(0), I(0)), I(0));
}

TEST(Gcd, GaussianExampleNormalizesToThree) {
  EXPECT_EQ(gcd({Gs(0, 3), Gs(3, 6), Gs(0, 9), Gs(12, 0)}), Gs(3, 0));
}

TEST(Gcd, PolynomialOverF2) { EXPECT_EQ(gcd(P("x^2+x", F2), P("x^2+1", F2)), P("x+1", F2)); }

TEST(Gcd, MixedRingsAreATypeError) {
  EXPECT_THROW(gcd(I(2), Gs(1, 1)), TypeError);
  EXPECT_THROW(gcd(P("x", F2), P("x", F3)), TypeError);
  EXPECT_THROW(I(1) + Gs(0, 1), TypeError);
}

TEST(Normalize, Examples) {
  Associate a = normalize_associate(I(-6));
  EXPECT_EQ(a.unit, I(-1));
  EXPECT_EQ(a.canonical, I(6));

  a = normalize_associate(Gs(0, 3));
  EXPECT_EQ(a.unit, Gs(0, 1));
  EXPECT_EQ(a.canonical, Gs(3, 0));

  a = normalize_associate(P("2x+2", F3));
  EXPECT_EQ(a.unit, P("2", F3));
  EXPECT_EQ(a.canonical, P("x+1", F3));

  a = normalize_associate(I(0));
  EXPECT_EQ(a.unit, I(1));
  EXPECT_EQ(a.canonical, I(0));
}

TEST(Normalize, GaussianFirstQuadrant) {
  for (auto z : {Gs(-2, 5), Gs(-3, -1), Gs(4, -7), Gs(0, -2), Gs(-5, 0)}) {
    Element c = normalize(z);
    const auto& g = c.as_gaussian();
    EXPECT_GT(g.re, 0) << z.to_string();
    EXPECT_GE(g.im, 0) << z.to_string();
    EXPECT_TRUE(associates(c, z));
  }
}

TEST(Factor, IntegerTwelve) {
  Factorization f = factor(I(12));
  EXPECT_EQ(f.unit, I(1));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, I(2));
  EXPECT_EQ(f.factors[0].exponent, 2);
  EXPECT_EQ(f.factors[1].prime, I(3));
  EXPECT_EQ(f.factors[1].exponent, 1);
}

TEST(Factor, GaussianTwelveMultipliesBack) {
  Factorization f = factor(Gs(12, 0));
  EXPECT_EQ(f.unit, Gs(-1, 0));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, Gs(1, 1));
  EXPECT_EQ(f.factors[0].exponent, 4);
  EXPECT_EQ(f.factors[1].prime, Gs(3, 0));
  EXPECT_EQ(f.factors[1].exponent, 1);
  // -1 * (1+i)^4 * 3 = -1 * (-4) * 3
  EXPECT_EQ(power(Gs(1, 1), 4), Gs(-4, 0));
  EXPECT_EQ(f.expand(), Gs(12, 0));
}

TEST(Factor, GaussianSplitPrime) {
  Factorization f = factor(Gs(5, 0));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_FALSE(associates(f.factors[0].prime, f.factors[1].prime));
  EXPECT_EQ(norm(f.factors[0].prime.as_gaussian()), 5);
  EXPECT_EQ(f.expand(), Gs(5, 0));
}

TEST(Factor, PolynomialOverF2) {
  Factorization f = factor(P("x^2+x", F2));
  EXPECT_EQ(f.unit, P("1", F2));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, P("x", F2));
  EXPECT_EQ(f.factors[1].prime, P("x+1", F2));
}

TEST(Factor, ZeroIsADomainError) {
  EXPECT_THROW(factor(I(0)), DomainError);
  EXPECT_THROW(factor(Gs(0, 0)), DomainError);
}

TEST(ExactDiv, Examples) {
  EXPECT_EQ(exact_div(I(12), I(2)), I(6));
  EXPECT_EQ(exact_div(Gs(3, 6), Gs(3, 0)), Gs(1, 2));
  EXPECT_EQ(exact_div(P("x^2+x", F2), P("x", F2)), P("x+1", F2));
  EXPECT_THROW(exact_div(I(12), I(5)), DomainError);
  EXPECT_THROW(exact_div(I(12), I(0)), DomainError);
}

TEST(Checked, OverflowIsReported) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(I(big) + I(1), OverflowError);
  EXPECT_THROW(I(big / 2 + 1) * I(2), OverflowError);
  EXPECT_THROW(Gs(big, 0) * Gs(2, 0), OverflowError);
  EXPECT_THROW(checked_pow(Cardinality{1} << 64, 2), OverflowError);
}

TEST(ExtendedGcd, BezoutIdentity) {
  std::mt19937_64 rng(7);
  for (const BaseRing& ring : {Z, G, F3}) {
    for (int i = 0; i < 300; ++i) {
      Element a = random_element(ring, rng, 200), b = random_element(ring, rng, 200);
      Bezout bz = extended_gcd(a, b);
      EXPECT_EQ(bz.s * a + bz.t * b, bz.gcd) << a.to_string() << ", " << b.to_string();
      EXPECT_EQ(bz.gcd, gcd(a, b));
    }
  }
}

class UfdProperties : public ::testing::TestWithParam<BaseRing> {};

TEST_P(UfdProperties, GcdDividesAndIsGreatest) {
  const BaseRing ring = GetParam();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    Element a = random_element(ring, rng, 300), b = random_element(ring, rng, 300);
    Element d = gcd(a, b);
    ASSERT_TRUE(divides(d, a));
    ASSERT_TRUE(divides(d, b));
    EXPECT_EQ(d, normalize(d));
    if (a.is_zero() || a.is_unit()) continue;
    for (const auto& pp : factor(a).factors) {
      if (divides(pp.prime, b)) EXPECT_TRUE(divides(pp.prime, d)) << a.to_string() << " " << b.to_string();
    }
  }
}

TEST_P(UfdProperties, FactorRoundTrip) {
  const BaseRing ring = GetParam();
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 500) {
    Element a = random_element(ring, rng, 1000);
    if (a.is_zero()) continue;
    Factorization f = factor(a);
    EXPECT_EQ(f.expand(), a);
    EXPECT_TRUE(f.unit.is_unit());
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      EXPECT_EQ(f.factors[i].prime, normalize(f.factors[i].prime));
      EXPECT_GE(f.factors[i].exponent, 1);
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(associates(f.factors[i].prime, f.factors[j].prime));
    }
    ++done;
  }
}

TEST_P(UfdProperties, NormalizeIsIdempotent) {
  const BaseRing ring = GetParam();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    Element c = normalize(random_element(ring, rng, 500));
    Associate again = normalize_associate(c);
    EXPECT_TRUE(again.unit.is_one());
    EXPECT_EQ(again.canonical, c);
  }
}

TEST_P(UfdProperties, GcdCommutativeAndAssociative) {
  const BaseRing ring = GetParam();
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    Element a = random_element(ring, rng, 200), b = random_element(ring, rng, 200), c = random_element(ring, rng, 200);
    EXPECT_EQ(gcd(a, b), gcd(b, a));
    EXPECT_EQ(gcd(gcd(a, b), c), gcd(a, gcd(b, c)));
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, UfdProperties, ::testing::Values(Z, G, F2, F3),
                         [](const auto& info) {
                           switch (info.param.kind) {
                             case RingKind::Int: return std::string("Int");
                             case RingKind::Gauss: return std::string("Gauss");
                             case RingKind::Poly: return "PolyF" + std::to_string(info.param.characteristic);
                           }
                           return std::string("Unknown");
                         });

TEST(Primes, IsPrime) {
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(997));
  EXPECT_FALSE(is_prime(1001));
  EXPECT_THROW(BaseRing::polynomials(4), DomainError);
  EXPECT_THROW(Element::polynomial(6, {1}), DomainError);
}

TEST(Printing, Literals) {
  EXPECT_EQ(Gs(3, 6).to_string(), "3+6i");
  EXPECT_EQ(Gs(0, 1).to_string(), "1i");
  EXPECT_EQ(Gs(2, -1).to_string(), "2-1i");
  EXPECT_EQ(P("x^2+2x+1", F3).to_string(), "x^2+2x+1");
  for (const char* text : {"3+6i", "-2-5i", "7i", "0"}) EXPECT_EQ(parse_element(text, G).to_string(), text);
}
