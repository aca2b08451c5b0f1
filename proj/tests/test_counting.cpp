#include <gtest/gtest.h>

#include <map>
#include <random>

#include "cent2/counting.hpp"
#include "naive.hpp"

using namespace cent2;
using naive::m2;

namespace {
const BaseRing G = BaseRing::gaussian();
}

TEST(Defect, Examples) {
  EXPECT_EQ(defect(m2("[[2,2],[4,8]]"), Element::integer(12)), Element::integer(2));
  EXPECT_EQ(defect(m2("[[3,0],[0,3]]"), Element::integer(12)), Element::integer(12));
  EXPECT_EQ(defect(m2("[[4i,3+6i],[9i,1i]]", G), Element::gaussian(12, 0)), Element::gaussian(3, 0));
}

TEST(Count, Examples) {
  EXPECT_EQ(count(*parse_ring("int/12"), m2("[[2,2],[4,8]]")), 576u);
  EXPECT_EQ(count(*parse_ring("gauss/12"), m2("[[4i,3+6i],[9i,1i]]", G)), 1679616u);
  EXPECT_EQ(count(*parse_ring("gauss/12"), m2("[[5,0],[0,5]]", G)), Cardinality{144} * 144 * 144 * 144);
  EXPECT_EQ(count(*parse_ring("poly/2/x^3"), m2("[[1,0],[0,1]]", BaseRing::polynomials(2))), 4096u);
}

TEST(CountZk, Examples) {
  EXPECT_EQ(count_zk(m2("[[2,2],[4,8]]"), 12), 576u);
  EXPECT_EQ(count_zk(m2("[[0,1],[0,0]]"), 6), 36u);
  Context z6 = parse_ring("int/6");
  EXPECT_EQ(naive::centralizer(*z6, reduce(*z6, m2("[[0,1],[0,0]]"))).size(), 36u);
  EXPECT_EQ(count_zk(m2("[[2,0],[0,2]]"), 5), 625u);
  EXPECT_THROW(count_zk(m2("[[2,0],[0,2]]"), 1), DomainError);
}

TEST(CoprimeCount, Examples) {
  Context z12 = parse_ring("int/12");
  EXPECT_EQ(coprime_count_check(*z12, m2("[[0,1],[0,0]]")), 144u);
  EXPECT_EQ(naive::centralizer(*z12, reduce(*z12, m2("[[0,1],[0,0]]"))).size(), 144u);

  const BaseRing f2 = BaseRing::polynomials(2);
  Context p = parse_ring("poly/2/x^2");
  EXPECT_EQ(coprime_count_check(*p, m2("[[1,1],[1,0]]", f2)), 16u);
  EXPECT_EQ(naive::centralizer(*p, reduce(*p, m2("[[1,1],[1,0]]", f2))).size(), 16u);

  EXPECT_THROW(coprime_count_check(*z12, m2("[[2,2],[4,8]]")), DomainError);
}

TEST(EquivStructure, IntegerExample) {
  Context z12 = parse_ring("int/12");
  auto b = m2("[[2,2],[4,8]]");
  EquivClassStructure st = equiv_structure(z12, b);
  EXPECT_EQ(st.d, Element::integer(2));
  EXPECT_EQ(st.k_over_d, Element::integer(6));
  EXPECT_EQ(st.class_size, 16u);
  EXPECT_EQ(st.class_count, 36u);
  EXPECT_EQ(st.reduced_matrix, m2("[[-3,1],[2,0]]"));
  ASSERT_FALSE(st.degenerate());

  // Partition the brute-force centralizer by image mod 6.
  std::map<naive::MatKey, int> classes;
  const auto bh = reduce(*z12, b);
  for (const auto& a : naive::all_matrices(*z12))
    if (a * bh == bh * a) ++classes[naive::key(*st.class_of(a))];
  EXPECT_EQ(classes.size(), 36u);
  for (const auto& [k, n] : classes) EXPECT_EQ(n, 16);
  Context z6 = st.reduced_ctx;
  EXPECT_EQ(naive::centralizer(*z6, reduce(*z6, st.reduced_matrix)).size(), 36u);
}

TEST(EquivStructure, ScalarIsDegenerate) {
  EquivClassStructure st = equiv_structure(parse_ring("int/4"), m2("[[1,0],[0,1]]"));
  EXPECT_TRUE(st.degenerate());
  EXPECT_EQ(st.class_size, 256u);
  EXPECT_EQ(st.class_count, 1u);
}

TEST(EquivStructure, GaussianExample) {
  EquivClassStructure st = equiv_structure(parse_ring("gauss/12"), m2("[[4i,3+6i],[9i,1i]]", G));
  EXPECT_EQ(st.class_size, 6561u);
  EXPECT_EQ(st.class_count, 256u);
  EXPECT_EQ(st.reduced_ctx->size(), 16u);
}

TEST(Crt, IntegerTwelve) {
  CrtDecomposition dec = crt_decompose(parse_ring("int/12"));
  ASSERT_EQ(dec.factors.size(), 2u);
  EXPECT_EQ(dec.factors[0].ctx->spec(), "int/4");
  EXPECT_EQ(dec.factors[1].ctx->spec(), "int/3");
  auto b = m2("[[2,2],[4,8]]");
  EXPECT_EQ(count(*dec.factors[0].ctx, b), 64u);
  EXPECT_EQ(count(*dec.factors[1].ctx, b), 9u);
  Context z4 = dec.factors[0].ctx;
  EXPECT_EQ(naive::centralizer(*z4, reduce(*z4, b)).size(), 64u);
}

TEST(Crt, PrimePowerIsSingleton) {
  CrtDecomposition dec = crt_decompose(parse_ring("int/8"));
  ASSERT_EQ(dec.factors.size(), 1u);
  EXPECT_EQ(dec.factors[0].ctx->size(), 8u);
  EXPECT_EQ(dec.idempotents[0], Element::integer(1));
}

TEST(Crt, GaussianTwelve) {
  Context ctx = parse_ring("gauss/12");
  CrtDecomposition dec = crt_decompose(ctx);
  ASSERT_EQ(dec.factors.size(), 2u);
  EXPECT_EQ(dec.factors[0].ctx->size(), 16u);
  EXPECT_EQ(dec.factors[1].ctx->size(), 9u);
  std::set<std::string> images;
  for (const auto& r : ctx->enumerate()) {
    auto parts = dec.forward(r);
    EXPECT_EQ(dec.backward(parts), r);
    images.insert(parts[0].to_string() + "|" + parts[1].to_string());
  }
  EXPECT_EQ(images.size(), 144u);
}

TEST(Crt, IdempotentsAreOrthogonal) {
  for (const char* spec : {"int/60", "gauss/15", "gauss/6+2i", "poly/3/x^3+x"}) {
    Context ctx = parse_ring(spec);
    CrtDecomposition dec = crt_decompose(ctx);
    for (std::size_t i = 0; i < dec.factors.size(); ++i) {
      Residue ei = ctx->reduce(dec.idempotents[i]);
      EXPECT_EQ(ei * ei, ei) << spec;
      for (std::size_t j = 0; j < dec.factors.size(); ++j) {
        EXPECT_EQ(dec.factors[j].ctx->reduce(dec.idempotents[i]).is_zero(), i != j) << spec;
        if (i != j) EXPECT_TRUE((ei * ctx->reduce(dec.idempotents[j])).is_zero());
      }
    }
  }
}

class CountProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(CountProperties, FormulaMatchesNaiveEnumeration) {
  Context ctx = parse_ring(GetParam());
  std::mt19937_64 rng(59);
  for (int i = 0; i < 30; ++i) {
    auto b = naive::random_lift(*ctx, rng);
    EXPECT_EQ(count(*ctx, b), naive::centralizer(*ctx, reduce(*ctx, b)).size()) << to_string(b);
    if (ctx->ring().kind == RingKind::Int) EXPECT_EQ(count_zk(b, ctx->modulus().as_integer()), count(*ctx, b));
  }
}

TEST_P(CountProperties, IdealSizeMatchesEnumeration) {
  Context ctx = parse_ring(GetParam());
  for (const auto& r : ctx->enumerate())
    EXPECT_EQ(ideal_size(*ctx, r.lift()), naive::ideal_generated(*ctx, {r}).size()) << r.to_string();
}

INSTANTIATE_TEST_SUITE_P(Small, CountProperties,
                         ::testing::Values("int/4", "int/6", "int/8", "int/9", "gauss/2", "gauss/1+1i", "poly/2/x^2",
                                           "poly/3/x^2"),
                         [](const auto& info) {
                           std::string name;
                           for (char c : std::string(info.param)) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return name;
                         });
