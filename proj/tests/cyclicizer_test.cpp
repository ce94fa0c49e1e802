#include <gtest/gtest.h>

#include "noncyc/cyclicizer.hpp"
#include "noncyc/error.hpp"
#include "noncyc/group_ops.hpp"
#include "noncyc/noncyclic_graph.hpp"
#include "noncyc/number_theory.hpp"
#include "test_support.hpp"

namespace noncyc {
namespace {

using testing::catalog_groups;
using testing::make;

Element find_element(const FiniteGroup& g, const std::string& name) {
  const auto x = g.find(name);
  EXPECT_TRUE(x.has_value()) << name;
  return x.value_or(0);
}

TEST(CycOfElement, IdentityIsCyclicWithEverything) {
  auto g = make("Symmetric(4)");
  EXPECT_TRUE(cyc_of_element(*g, 0).all());
}

TEST(CycOfElement, OrderThreeElementOfC6TimesS3) {
  auto g = make("DirectProduct(Cyclic(6),Symmetric(3))");
  auto c6 = make("Cyclic(6)");
  Element c3 = 0;
  for (Element x = 0; x < c6->order(); ++x)
    if (c6->element_order(x) == 3) {
      c3 = x;
      break;
    }
  const Element x = find_element(*g, "(" + c6->name(c3) + "," + make("Symmetric(3)")->name(0) + ")");
  ASSERT_EQ(g->element_order(x), 3U);
  EXPECT_EQ(cyc_of_element(*g, x).count(), 24U);
}

TEST(CycOfElement, TranspositionInS3) {
  auto s3 = make("Symmetric(3)");
  for (Element t = 0; t < s3->order(); ++t) {
    if (s3->element_order(t) != 2) continue;
    const auto c = cyc_of_element(*s3, t);
    EXPECT_EQ(c.count(), 2U);
    EXPECT_TRUE(c.test(0));
    EXPECT_TRUE(c.test(t));
  }
}

TEST(Cyclicizer, CyclicGroupIsItsOwnCyclicizer) { EXPECT_EQ(cyclicizer(*make("Cyclic(15)")).count(), 15U); }

TEST(Cyclicizer, QuaternionHasOrderTwo) { EXPECT_EQ(cyclicizer(*make("Dicyclic(2)")).count(), 2U); }

TEST(Cyclicizer, C6TimesS3IsTrivial) {
  EXPECT_EQ(cyclicizer(*make("DirectProduct(Cyclic(6),Symmetric(3))")).count(), 1U);
}

TEST(QuotientByCyclicizer, Quaternion) {
  const auto q = quotient_by_cyclicizer(*make("Dicyclic(2)"));
  EXPECT_EQ(q.group.order(), 4U);
  EXPECT_EQ(q.group.exponent(), 2U);
}

TEST(QuotientByCyclicizer, KleinFourIsUnchanged) {
  const auto q = quotient_by_cyclicizer(*make("ElementaryAbelian(2,2)"));
  EXPECT_EQ(q.group.order(), 4U);
  EXPECT_EQ(q.group.exponent(), 2U);
}

TEST(QuotientByCyclicizer, Sl25GivesSimpleGroupOfOrder60) {
  auto g = make("SL2(5)");
  EXPECT_EQ(cyclicizer(*g).count(), 2U);
  const auto q = quotient_by_cyclicizer(*g);
  EXPECT_EQ(q.group.order(), 60U);
  EXPECT_EQ(normal_subgroups(q.group).size(), 2U);
}

TEST(QuotientByCyclicizer, CyclicGroupIsRejected) {
  EXPECT_THROW(quotient_by_cyclicizer(*make("Cyclic(8)")), CyclicGroupError);
}

TEST(CyclicizerData, InvariantsOnCatalog) {
  for (const auto& [e, g] : catalog_groups(100)) {
    const auto d = CyclicizerData::compute(g);
    ElementSet meet = g->full_set();
    for (Element x = 0; x < g->order(); ++x) {
      ASSERT_TRUE(d.cyc_of[x].test(x)) << e.name;
      ASSERT_TRUE(d.cyc_of[x].test(0)) << e.name;
      ASSERT_TRUE(d.cyc_of[x].is_subset_of(centralizer(*g, x))) << e.name;
      meet &= d.cyc_of[x];
    }
    EXPECT_EQ(meet, d.cyc) << e.name;
    EXPECT_TRUE(is_normal_subgroup(*g, d.cyc)) << e.name;
    ElementSet maximal_meet = g->full_set();
    for (const auto& m : maximal_cyclic_subgroups(*g)) maximal_meet &= m;
    EXPECT_EQ(maximal_meet, d.cyc) << e.name;
    if (d.cyc.count() < g->order()) EXPECT_EQ(cyclicizer(d.quotient.group).count(), 1U) << e.name;
  }
}

TEST(CyclicizerData, MatrixMatchesPerElementSets) {
  for (const auto& [e, g] : catalog_groups(30)) {
    const auto d = CyclicizerData::compute(g);
    for (Element x = 0; x < g->order(); ++x) ASSERT_EQ(d.cyc_of[x], cyc_of_element(*g, x)) << e.name;
  }
}

TEST(CyclicizerData, CenterContainsCyclicizerInPrimePowerGroups) {
  std::size_t exercised = 0;
  for (const auto& [e, g] : catalog_groups(100)) {
    if (!as_prime_power(g->order()) || is_cyclic(*g)) continue;
    const auto cyc = cyclicizer(*g);
    const auto z = center(*g);
    EXPECT_TRUE(cyc.is_subset_of(z)) << e.name;
    if (cyc.count() == 1 && z.count() > 1) ++exercised;
  }
  EXPECT_GT(exercised, 0U);
}

// Within A5 and S5, Cyc_G(x) depends only on the maximal cyclic subgroup of x.
TEST(CyclicizerData, CycSetsConstantOnMaximalCyclicSubgroupsOfA5AndS5) {
  for (const char* s : {"Alternating(5)", "Symmetric(5)"}) {
    auto g = make(s);
    const auto d = CyclicizerData::compute(g);
    const auto gens = maximal_cyclic_generators(*g);
    ASSERT_EQ(gens.size(), 31U) << s;
    for (Element x : gens)
      d.cyc_of[x].for_each([&](std::size_t a) {
        if (a != 0) EXPECT_EQ(d.cyc_of[a], d.cyc_of[x]) << s;
      });
  }
}

}  // namespace
}  // namespace noncyc
