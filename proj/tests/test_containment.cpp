#include <gtest/gtest.h>

#include "cent2/centralizer.hpp"
#include "cent2/containment.hpp"
#include "naive.hpp"

using namespace cent2;
using naive::m2;

namespace {

struct SetFacts {
  bool cen_is_s1, cen_is_s2, s1_is_s2;
};

SetFacts set_facts(const QuotientContext& ctx, const Mat2<Element>& b) {
  const auto bh = reduce(ctx, b);
  const auto cen = naive::centralizer(ctx, bh);
  const auto s1 = naive::keys(s1_set(ctx, b));
  const auto ideals = s2_ideals(bh);
  std::set<naive::MatKey> s2;
  for (const auto& e : ideals.e.elements())
    for (const auto& f : ideals.f.elements())
      for (const auto& g : ideals.g.elements())
        for (const auto& h : ideals.h.elements()) s2.insert(naive::key({e, f, g, h}));
  // S1 and S2 always sit inside Cen, so containment of Cen means equality.
  return {cen == s1, cen == s2, s1 == s2};
}

}  // namespace

TEST(CenEqualsTheta, Examples) {
  Context z12 = parse_ring("int/12");
  EXPECT_FALSE(cen_equals_theta(*z12, m2("[[2,2],[4,8]]")));
  EXPECT_TRUE(cen_equals_theta(*z12, m2("[[4,0],[0,4]]")));
  EXPECT_TRUE(cen_equals_theta(*z12, m2("[[0,1],[0,0]]")));
  EXPECT_TRUE(set_facts(*z12, m2("[[0,1],[0,0]]")).cen_is_s1);
}

TEST(CenEqualsTheta, NonCanonicalScalarLiftIsNotScalar) {
  // [[5,0],[0,17]] is scalar mod 12 but its integer centralizer is only the
  // diagonal matrices, so S1 misses most of M_2(Z/12).
  Context z12 = parse_ring("int/12");
  EXPECT_FALSE(cen_equals_theta(*z12, m2("[[5,0],[0,17]]")));
  EXPECT_TRUE(cen_equals_theta(*z12, m2("[[5,0],[0,5]]")));
}

TEST(CenEqualsS2, Examples) {
  Context z12 = parse_ring("int/12");
  EXPECT_TRUE(cen_equals_s2(reduce(*z12, m2("[[2,0],[0,8]]"))));
  EXPECT_FALSE(cen_equals_s2(reduce(*z12, m2("[[2,2],[4,8]]"))));
  EXPECT_TRUE(cen_equals_s2(reduce(*z12, m2("[[0,12],[24,0]]"))));
}

TEST(S1EqualsS2, Examples) {
  Context z12 = parse_ring("int/12");
  EXPECT_TRUE(s1_equals_s2(reduce(*z12, m2("[[5,0],[0,0]]"))));
  EXPECT_TRUE(set_facts(*z12, m2("[[5,0],[0,0]]")).s1_is_s2);
  EXPECT_FALSE(s1_equals_s2(reduce(*z12, m2("[[2,0],[0,8]]"))));
  EXPECT_FALSE(set_facts(*z12, m2("[[2,0],[0,8]]")).s1_is_s2);
  EXPECT_TRUE(s1_equals_s2(reduce(*z12, m2("[[3,0],[0,3]]"))));
}

TEST(SufficientInvertible, Examples) {
  Context z12 = parse_ring("int/12");
  EXPECT_TRUE(sufficient_invertible(reduce(*z12, m2("[[0,1],[0,0]]"))));
  EXPECT_FALSE(sufficient_invertible(reduce(*z12, m2("[[2,2],[4,8]]"))));
}

TEST(Report, Examples) {
  Context z12 = parse_ring("int/12");
  ContainmentReport r = report(*z12, m2("[[2,2],[4,8]]"));
  EXPECT_FALSE(r.s2_subset_s1);
  EXPECT_FALSE(r.s1_subset_s2);
  EXPECT_FALSE(r.s1_equals_s2);
  EXPECT_EQ(r.defect, Element::integer(2));
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(r.diagnostics.front().predicate, "s2_in_s1");
  ASSERT_TRUE(r.diagnostics.front().prime.has_value());
  EXPECT_EQ(*r.diagnostics.front().prime, Element::integer(2));
  EXPECT_EQ(r.diagnostics.front().exponent, 2);

  r = report(*z12, m2("[[7,0],[0,7]]"));
  EXPECT_TRUE(r.s2_subset_s1 && r.s1_subset_s2 && r.s1_equals_s2);
  EXPECT_TRUE(r.diagnostics.empty());

  Context z4 = parse_ring("int/4");
  r = report(*z4, m2("[[0,1],[0,0]]"));
  EXPECT_TRUE(r.s2_subset_s1);
  EXPECT_FALSE(r.s1_subset_s2);
  EXPECT_FALSE(r.s1_equals_s2);
  SetFacts facts = set_facts(*z4, m2("[[0,1],[0,0]]"));
  EXPECT_TRUE(facts.cen_is_s1);
  EXPECT_FALSE(facts.cen_is_s2);
  EXPECT_FALSE(facts.s1_is_s2);
}

class ExhaustiveContainment : public ::testing::TestWithParam<const char*> {};

TEST_P(ExhaustiveContainment, PredicatesMatchSets) {
  Context ctx = parse_ring(GetParam());
  for (const auto& bh : naive::all_matrices(*ctx)) {
    const Mat2<Element> b = lift(bh);
    const SetFacts facts = set_facts(*ctx, b);
    const bool theta = cen_equals_theta(*ctx, b);
    ASSERT_EQ(theta, facts.cen_is_s1) << to_string(bh);
    ASSERT_EQ(cen_equals_s2(bh), facts.cen_is_s2) << to_string(bh);
    ASSERT_EQ(s1_equals_s2(bh), facts.s1_is_s2) << to_string(bh);
    ASSERT_EQ(pid_shortcut(*ctx, b), theta) << to_string(bh);
    if (sufficient_invertible(bh)) ASSERT_TRUE(theta) << to_string(bh);
    const ContainmentReport r = report(*ctx, b);
    ASSERT_TRUE(!r.s1_equals_s2 || (r.s1_subset_s2 && r.s2_subset_s1));
    ASSERT_EQ(r.s2_subset_s1, theta);
  }
}

INSTANTIATE_TEST_SUITE_P(Small, ExhaustiveContainment,
                         ::testing::Values("int/4", "int/6", "gauss/2", "gauss/1+1i", "poly/2/x^2"),
                         [](const auto& info) {
                           std::string name;
                           for (char c : std::string(info.param)) name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return name;
                         });
