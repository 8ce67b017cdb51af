#include <gtest/gtest.h>

#include "csec/lattice.hpp"
#include "csec/named.hpp"
#include "csec/series.hpp"
#include "oracle/oracle.hpp"

using namespace csec;

namespace {

std::vector<std::string> ids(const std::vector<GroupId>& v) {
  std::vector<std::string> out;
  for (const auto& id : v) out.push_back(id.to_string());
  return out;
}

}  // namespace

TEST(ChiefSeries, TermsAreNormalAndFactorsAreChief) {
  for (const auto& spec : scan_battery(200)) {
    auto g = build_group(spec);
    SCOPED_TRACE(spec.label());
    GroupContext ctx(g);
    auto s = chief_series(ctx);
    ASSERT_EQ(s.terms.front().order(), g.order());
    ASSERT_EQ(s.terms.back().order(), 1);
    ASSERT_EQ(s.factors.size() + 1, s.terms.size());
    for (const auto& t : s.terms) EXPECT_TRUE(is_normal(g, t));
    for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
      auto k = ctx.set_of(s.terms[i]), l = ctx.set_of(s.terms[i + 1]);
      EXPECT_TRUE(l.is_subset_of(k));
      for (const auto& n : ctx.normal_subgroups())
        EXPECT_FALSE(l.is_subset_of(n) && n.is_subset_of(k) && n.size() != l.size() && n.size() != k.size());
      EXPECT_EQ(s.factors[i].order * s.terms[i + 1].order(), s.terms[i].order());
    }
  }
}

TEST(Supersolvable, AgreesWithCyclicNormalSeriesOracle) {
  int checked = 0;
  for (const auto& spec : scan_battery(200)) {
    auto g = build_group(spec);
    SCOPED_TRACE(spec.label());
    EXPECT_EQ(is_supersolvable(g), oracle::supersolvable(g));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Supersolvable, KnownCases) {
  EXPECT_TRUE(is_supersolvable(symmetric_group(3)));
  EXPECT_FALSE(is_supersolvable(alternating_group(4)));
  EXPECT_FALSE(is_supersolvable(symmetric_group(4)));
  EXPECT_TRUE(is_supersolvable(dihedral_group(16)));
  EXPECT_TRUE(is_supersolvable(frobenius21_group()));
  EXPECT_TRUE(is_supersolvable(affine_line_group(7)));
  EXPECT_TRUE(is_supersolvable(elementary_abelian_group(2, 2)));
}

TEST(CompositionFactors, InvariantUnderRandomChiefSeries) {
  for (const auto& spec : scan_battery(500)) {
    auto g = build_group(spec);
    SCOPED_TRACE(spec.label());
    GroupContext ctx(g);
    auto base = ids(composition_factors(ctx));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      SeriesOptions opts;
      opts.random_seed = seed;
      EXPECT_EQ(ids(composition_factors(ctx, opts)), base);
    }
  }
}

TEST(CompositionFactors, KnownMultisets) {
  EXPECT_EQ(ids(composition_factors(symmetric_group(4))), (std::vector<std::string>{"Z2", "Z2", "Z2", "Z3"}));
  EXPECT_EQ(ids(composition_factors(pgl2_group(7))), (std::vector<std::string>{"L2(7)", "Z2"}));
  EXPECT_EQ(ids(composition_factors(symmetric_group(5))), (std::vector<std::string>{"A5", "Z2"}));
  EXPECT_EQ(ids(composition_factors(special_linear_group(2, 5))), (std::vector<std::string>{"A5", "Z2"}));
  auto a5sq = direct_product({alternating_group(5), alternating_group(5)});
  auto cs = chief_series(a5sq);
  ASSERT_EQ(cs.factors.size(), 2u);
  EXPECT_EQ(ids(composition_factors(a5sq)), (std::vector<std::string>{"A5", "A5"}));
}

TEST(ChiefSeries, NonabelianFactorOfPowerType) {
  auto g = direct_product({alternating_group(5), alternating_group(5)});
  GroupContext ctx(g);
  auto s = chief_series(ctx);
  for (const auto& f : s.factors) {
    EXPECT_FALSE(f.is_abelian);
    EXPECT_EQ(f.simple_factor_count, 1u);
  }
}

TEST(DerivedSeries, SolvableAndNilpotent) {
  EXPECT_TRUE(is_solvable(symmetric_group(4)));
  EXPECT_FALSE(is_solvable(alternating_group(5)));
  EXPECT_TRUE(is_nilpotent(dihedral_group(8)));
  EXPECT_TRUE(is_nilpotent(quaternion_group()));
  EXPECT_FALSE(is_nilpotent(symmetric_group(3)));
  EXPECT_EQ(derived_series(symmetric_group(4)).size(), 4u);
  EXPECT_TRUE(is_simple(alternating_group(5)));
  EXPECT_TRUE(is_simple(psl2_group(7)));
  EXPECT_TRUE(is_simple(cyclic_group(7)));
  EXPECT_FALSE(is_simple(symmetric_group(5)));
}
