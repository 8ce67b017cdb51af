#include <gtest/gtest.h>

#include <random>

#include "csec/csection.hpp"
#include "csec/error.hpp"
#include "csec/named.hpp"
#include "csec/series.hpp"

using namespace csec;

namespace {

PermGroup shuffled_copy(const PermGroup& g, std::mt19937_64& rng) {
  std::vector<Point> sigma(g.degree() + 2);
  for (Point i = 0; i < sigma.size(); ++i) sigma[i] = i;
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) {
    std::vector<Point> img(sigma.size());
    for (Point i = 0; i < img.size(); ++i) img[i] = i;
    for (Point i = 0; i < g.degree(); ++i) img[sigma[i]] = sigma[p[i]];
    gens.emplace_back(std::move(img));
  }
  return PermGroup(sigma.size(), gens);
}

Subgroup maximal_rep(const GroupContext& ctx, std::size_t i) {
  return ctx.subgroup(ctx.maximal_classes().at(i).representative);
}

}  // namespace

TEST(ChiefPairs, ExistForEveryMaximal) {
  for (const auto& spec : scan_battery(120)) {
    auto g = build_group(spec);
    if (g.order() == 1) continue;
    SCOPED_TRACE(spec.label());
    GroupContext ctx(g);
    for (std::size_t i = 0; i < ctx.maximal_classes().size(); ++i) {
      Subgroup m = maximal_rep(ctx, i);
      auto pairs = chief_pairs_for_maximal(ctx, m);
      ASSERT_FALSE(pairs.empty());
      auto ms = ctx.set_of(m);
      for (const auto& p : pairs) {
        EXPECT_TRUE(ctx.set_of(p.l).is_subset_of(ms));
        EXPECT_FALSE(ctx.set_of(p.k).is_subset_of(ms));
        EXPECT_TRUE(p.k.contains(p.witness));
        EXPECT_FALSE(m.contains(p.witness));
        EXPECT_TRUE(ctx.is_normal(ctx.set_of(p.k)));
        EXPECT_TRUE(ctx.is_normal(ctx.set_of(p.l)));
      }
    }
  }
}

TEST(ChiefPairs, NonMaximalIsRejected) {
  auto s4 = symmetric_group(4);
  Subgroup z2(s4, {Permutation({1, 0, 2, 3})});
  EXPECT_THROW(chief_pairs_for_maximal(s4, z2), NotMaximal);
}

TEST(Sec, Pgl27Sections) {
  GroupContext ctx(pgl2_group(7));
  std::vector<std::uint64_t> orders;
  for (std::size_t i = 0; i < 4; ++i) {
    auto s = sec(ctx, maximal_rep(ctx, i), true);
    EXPECT_TRUE(s.supersolvable);
    orders.push_back(to_u64(s.group.order()));
  }
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 21, 8, 6}));
  EXPECT_EQ(sec(ctx, maximal_rep(ctx, 1)).identified.to_string(), "F21");
}

TEST(Sec, TrivialWhenUniqueMinimalNormalIsMaximal) {
  int seen = 0;
  for (const auto& spec : scan_battery(500)) {
    auto g = build_group(spec);
    GroupContext ctx(g);
    auto minimal = ctx.minimal_normal_subgroups();
    if (minimal.size() != 1 || !ctx.is_maximal(minimal.front())) continue;
    SCOPED_TRACE(spec.label());
    ++seen;
    EXPECT_EQ(sec(ctx, ctx.subgroup(minimal.front())).group.order(), 1);
  }
  EXPECT_GE(seen, 3);
}

TEST(Sec, UniqueAcrossChiefPairs) {
  for (const auto& spec : scan_battery(200)) {
    GroupContext ctx(build_group(spec));
    auto r = verify_sections_unique(ctx, spec.label());
    EXPECT_EQ(r.status, Status::Pass) << spec.label();
    EXPECT_EQ(r.evidence.class_counts.at("violations"), 0u);
  }
}

TEST(Implication, Sym5FailsHypothesisWithAlternatingWitness) {
  GroupContext ctx(symmetric_group(5));
  auto h = check_hypothesis(ctx, "S5");
  EXPECT_EQ(h.status, Status::Fail);
  EXPECT_EQ(h.evidence.witnesses.at("section"), "A4");
  auto t = verify_theorem_instance(ctx, "S5");
  EXPECT_EQ(t.status, Status::Pass);
  EXPECT_EQ(check_conclusion(ctx).status, Status::Fail);
}

TEST(Implication, Pgl27PassesBothSides) {
  GroupContext ctx(pgl2_group(7));
  EXPECT_EQ(check_hypothesis(ctx).status, Status::Pass);
  EXPECT_EQ(check_conclusion(ctx).status, Status::Pass);
  auto t = verify_theorem_instance(ctx);
  EXPECT_EQ(t.status, Status::Pass);
  EXPECT_EQ(t.evidence.witnesses.at("implication"), "hypothesis holds");
}

TEST(Implication, ConclusionInvariantUnderRelabelling) {
  std::mt19937_64 rng(29);
  for (const auto& spec : scan_battery(500)) {
    auto g = build_group(spec);
    GroupContext a(g), b(shuffled_copy(g, rng));
    auto ra = check_conclusion(a, "x"), rb = check_conclusion(b, "x");
    EXPECT_EQ(ra.status, rb.status) << spec.label();
    EXPECT_EQ(ra.evidence.factor_ids, rb.evidence.factor_ids) << spec.label();
  }
}

TEST(Implication, IncompleteEnumerationNeverPasses) {
  LatticeOptions opts;
  opts.order_cap = 20;
  for (auto g : {symmetric_group(4), pgl2_group(7), dihedral_group(60)}) {
    GroupContext ctx(g, opts);
    for (const auto& r : {check_hypothesis(ctx), verify_theorem_instance(ctx), verify_sections_unique(ctx)}) {
      EXPECT_FALSE(r.complete);
      EXPECT_NE(r.status, Status::Pass);
    }
  }
}

TEST(Implication, FailWithCertifiedWitnessSurvivesIncompleteSearch) {
  LatticeOptions opts;
  opts.order_cap = 20;
  GroupContext ctx(symmetric_group(5), opts);
  auto r = check_hypothesis(ctx);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(r.evidence.witnesses.at("section"), "A4");
}

TEST(AlternatingGroups, NoSmallIndex) {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto r = verify_alternating_no_small_index(n);
    EXPECT_EQ(r.status, Status::Pass) << n;
  }
  auto a4 = verify_alternating_no_small_index(4);
  EXPECT_EQ(a4.evidence.class_counts.at("index 3"), 1u);
  EXPECT_TRUE(a4.evidence.witnesses.count("exception"));
  auto a5 = verify_alternating_no_small_index(5);
  for (const char* k : {"index 2", "index 3", "index 4"}) EXPECT_EQ(a5.evidence.class_counts.at(k), 0u);
  EXPECT_THROW(verify_alternating_no_small_index(9), InvalidArgument);
}

TEST(AlternatingGroups, IndexNClasses) {
  for (std::size_t n = 4; n <= 7; ++n) {
    auto r = verify_alternating_index_n_conjugate(n);
    EXPECT_EQ(r.status, Status::Pass) << n;
    EXPECT_EQ(r.evidence.class_counts.at("index_n_classes"), n == 6 ? 2u : 1u);
  }
}

TEST(SylowNormalizerReport, AllCasesPass) {
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{2, 4}, {2, 8}, {2, 9}, {3, 4}}) {
    auto r = verify_sylow_normalizer(n, q);
    EXPECT_EQ(r.status, Status::Pass) << n << "," << q;
    ASSERT_EQ(r.subchecks.size(), 3u);
  }
}

TEST(Pgl2Example, FiveSubchecks) {
  auto r = verify_pgl2_example(7);
  EXPECT_EQ(r.status, Status::Pass);
  ASSERT_EQ(r.subchecks.size(), 5u);
  for (const auto& s : r.subchecks) EXPECT_EQ(s.status, Status::Pass) << s.check;
  EXPECT_THROW(verify_pgl2_example(5), InvalidArgument);
  EXPECT_THROW(verify_pgl2_example(17), CapExceeded);
}

TEST(Pgl2Example, SeventeenWithOverride) {
  VerifyOptions opts;
  opts.allow_large = true;
  auto r = verify_pgl2_example(17, opts);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.evidence.orders.at("group"), 4896u);
}

TEST(UniqueClass, KleinFoursInL27AreNotUnique) {
  GroupContext ctx(psl2_group(7));
  auto v4 = klein_four_classes(ctx).front().representative;
  auto r = unique_class_check(ctx, v4);
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.evidence.class_counts.at("isomorphic_classes"), 2u);
}

TEST(Status, TextRoundTrip) {
  for (auto s : {Status::Pass, Status::Fail, Status::Inconclusive}) EXPECT_EQ(parse_status(to_string(s)), s);
  EXPECT_THROW(parse_status("maybe"), InvalidArgument);
}
