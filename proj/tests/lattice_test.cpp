#include <gtest/gtest.h>

#include "csec/lattice.hpp"
#include "csec/named.hpp"
#include "oracle/oracle.hpp"

using namespace csec;

TEST(Lattice, KnownSubgroupCounts) {
  EXPECT_EQ(subgroup_count(all_subgroups(symmetric_group(3))), 6u);
  EXPECT_EQ(subgroup_count(all_subgroups(dihedral_group(8))), 10u);
  EXPECT_EQ(subgroup_count(all_subgroups(alternating_group(4))), 10u);
  EXPECT_EQ(subgroup_count(all_subgroups(symmetric_group(4))), 30u);
  EXPECT_EQ(all_subgroups(symmetric_group(4)).size(), 11u);
  EXPECT_EQ(subgroup_count(all_subgroups(alternating_group(5))), 59u);
  EXPECT_EQ(subgroup_count(all_subgroups(quaternion_group())), 6u);
  EXPECT_EQ(subgroup_count(all_subgroups(elementary_abelian_group(2, 3))), 16u);
}

TEST(Lattice, LargerCountsAreStable) {
  EXPECT_EQ(subgroup_count(all_subgroups(alternating_group(6))), 501u);
  EXPECT_EQ(subgroup_count(all_subgroups(symmetric_group(6))), 1455u);
  EXPECT_EQ(subgroup_count(all_subgroups(psl2_group(7))), 179u);
}

TEST(Lattice, MatchesBruteForceOnSmallBatteryGroups) {
  for (const auto& spec : scan_battery(72)) {
    auto g = build_group(spec);
    SCOPED_TRACE(spec.label());
    GroupContext ctx(g);
    auto subs = oracle::all_subgroups(g);
    auto all = oracle::elements(g);

    std::uint64_t total = 0;
    for (const auto& c : ctx.subgroup_classes()) total += c.class_size;
    EXPECT_EQ(total, subs.size());

    std::vector<std::size_t> maxes;
    for (const auto& m : ctx.maximal_classes())
      for (std::uint64_t i = 0; i < m.class_size; ++i) maxes.push_back(m.order);
    if (g.order() == 1) maxes.clear();
    EXPECT_EQ(maxes, oracle::maximal_orders(subs, all));
    EXPECT_TRUE(ctx.maximal_classes_complete());

    EXPECT_EQ(ctx.normal_subgroups().size(), oracle::normal_subgroups(subs, all).size());
  }
}

TEST(Lattice, ClassesArePairwiseNonConjugateAndSizedByNormalizer) {
  GroupContext ctx(symmetric_group(5));
  const auto& classes = ctx.subgroup_classes();
  EXPECT_EQ(classes.size(), 19u);
  for (const auto& c : classes) {
    EXPECT_EQ(c.class_size * ctx.normalizer(c.representative).size(), 120u);
    EXPECT_EQ(ctx.conjugates(c.representative).front(), c.representative);
  }
  for (std::size_t i = 0; i + 1 < classes.size(); ++i)
    if (classes[i].order == classes[i + 1].order)
      EXPECT_FALSE(ctx.are_conjugate(classes[i].representative, classes[i + 1].representative));
}

TEST(Lattice, MaximalsOfPgl27) {
  auto maxes = maximal_subgroups(pgl2_group(7));
  ASSERT_EQ(maxes.size(), 4u);
  std::vector<Order> orders;
  for (const auto& m : maxes) orders.push_back(m.representative.order());
  EXPECT_EQ(orders, (std::vector<Order>{168, 42, 16, 12}));
  for (const auto& m : maxes) {
    EXPECT_TRUE(m.verified_complete);
    EXPECT_TRUE(is_maximal(pgl2_group(7), m.representative));
  }
}

TEST(Lattice, SmallIndexAndMaximality) {
  auto a5 = alternating_group(5);
  EXPECT_TRUE(subgroups_of_index(a5, 2).empty());
  EXPECT_TRUE(subgroups_of_index(a5, 3).empty());
  EXPECT_TRUE(subgroups_of_index(a5, 4).empty());
  EXPECT_EQ(subgroups_of_index(a5, 5).size(), 1u);
  auto s4 = symmetric_group(4);
  Subgroup s3(s4, {Permutation({1, 0, 2, 3}), Permutation({0, 2, 1, 3})});
  EXPECT_TRUE(is_maximal(s4, s3));
  Subgroup z2(s4, {Permutation({1, 0, 2, 3})});
  EXPECT_FALSE(is_maximal(s4, z2));
}

TEST(Lattice, RandomSearchIsMarkedIncomplete) {
  LatticeOptions opts;
  opts.order_cap = 100;
  GroupContext ctx(symmetric_group(5), opts);
  EXPECT_FALSE(ctx.lattice_available());
  EXPECT_FALSE(ctx.maximal_classes_complete());
  auto found = maximal_subgroups(ctx);
  EXPECT_FALSE(found.empty());
  for (const auto& m : found) {
    EXPECT_FALSE(m.verified_complete);
    EXPECT_TRUE(is_maximal(ctx.group(), m.representative));
  }
}

TEST(Lattice, NormalSubgroups) {
  EXPECT_EQ(normal_subgroups(symmetric_group(4)).size(), 4u);
  EXPECT_EQ(normal_subgroups(psl2_group(7)).size(), 2u);
  EXPECT_EQ(minimal_normal_subgroups(symmetric_group(4)).front().order(), 4);
  EXPECT_EQ(minimal_normal_subgroups(elementary_abelian_group(2, 2)).size(), 3u);
}

TEST(Lattice, KleinFoursAndFusion) {
  auto l27 = psl2_group(7);
  GroupContext inner(l27);
  auto kf = klein_four_classes(inner);
  ASSERT_EQ(kf.size(), 2u);
  for (const auto& c : kf) EXPECT_EQ(c.normalizer_order, 24);

  GroupContext outer(pgl2_group(7));
  std::vector<SubgroupClass> lifted;
  for (const auto& c : kf) {
    auto h = c;
    h.representative = Subgroup(outer.group(), c.representative.generators());
    lifted.push_back(h);
  }
  auto fusion = fusion_analysis(outer, lifted);
  EXPECT_EQ(fusion.inner_classes, 2u);
  EXPECT_EQ(fusion.outer_classes, 1u);

  EXPECT_EQ(klein_four_classes(symmetric_group(4)).size(), 2u);
  EXPECT_EQ(klein_four_classes(alternating_group(5)).size(), 1u);
}
