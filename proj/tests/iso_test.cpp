#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "csec/error.hpp"
#include "csec/iso.hpp"
#include "csec/named.hpp"

using namespace csec;

namespace {

// The same group moved to a larger point set by a random relabelling.
PermGroup relabel(const PermGroup& g, std::size_t extra, std::mt19937_64& rng) {
  std::size_t n = g.degree() + extra;
  std::vector<Point> sigma(n);
  for (Point i = 0; i < n; ++i) sigma[i] = i;
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<Permutation> gens;
  for (const auto& p : g.generators()) {
    std::vector<Point> img(n);
    for (Point i = 0; i < n; ++i) img[i] = i;
    for (Point i = 0; i < g.degree(); ++i) img[sigma[i]] = sigma[p[i]];
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, gens);
}

// phi(x s) == phi(x) phi(s) for every element x and generator s, with phi
// spread from the identity along generator edges; plus bijectivity.
bool is_isomorphism(const PermGroup& g, const PermGroup& h, const std::vector<Permutation>& images) {
  const auto& gens = g.generators();
  std::map<Permutation, Permutation> phi{{g.identity(), h.identity()}};
  std::vector<Permutation> queue{g.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Permutation y = queue[k] * gens[i];
      Permutation want = phi[queue[k]] * images[i];
      auto [it, fresh] = phi.emplace(y, want);
      if (fresh)
        queue.push_back(y);
      else if (it->second != want)
        return false;
    }
  std::set<Permutation> range;
  for (const auto& [x, y] : phi) range.insert(y);
  return phi.size() == g.order() && range.size() == h.order();
}

}  // namespace

TEST(GroupId, TextRoundTrip) {
  for (auto id : {GroupId::cyclic(12), GroupId::elementary_abelian(2, 3), GroupId::dihedral(8), GroupId::alternating(5),
                  GroupId::symmetric(4), GroupId::psl2(7), GroupId::named("Q8"), GroupId::named("F21"),
                  GroupId::named("F42"), GroupId::unknown_simple(4896), GroupId::composite(136),
                  GroupId::product({GroupId::cyclic(2), GroupId::cyclic(4)})}) {
    EXPECT_EQ(GroupId::parse(id.to_string()), id) << id.to_string();
  }
  EXPECT_THROW(GroupId::parse("nonsense"), InvalidArgument);
  EXPECT_EQ(GroupId::psl2(7).to_string(), "L2(7)");
  EXPECT_FALSE(GroupId::composite(12).identified());
}

TEST(Identify, CatalogGroups) {
  EXPECT_EQ(identify(cyclic_group(12)).to_string(), "Z12");
  EXPECT_EQ(identify(elementary_abelian_group(2, 3)).to_string(), "E2^3");
  EXPECT_EQ(identify(direct_product({cyclic_group(2), cyclic_group(4)})).to_string(), "Z2 x Z4");
  EXPECT_EQ(identify(direct_product({cyclic_group(3), cyclic_group(4)})).to_string(), "Z12");
  EXPECT_EQ(identify(dihedral_group(10)).to_string(), "D10");
  EXPECT_EQ(identify(symmetric_group(3)).to_string(), "D6");
  EXPECT_EQ(identify(alternating_group(4)).to_string(), "A4");
  EXPECT_EQ(identify(symmetric_group(4)).to_string(), "S4");
  EXPECT_EQ(identify(alternating_group(5)).to_string(), "A5");
  EXPECT_EQ(identify(psl2_group(5)).to_string(), "A5");
  EXPECT_EQ(identify(psl2_group(4)).to_string(), "A5");
  EXPECT_EQ(identify(psl2_group(9)).to_string(), "A6");
  EXPECT_EQ(identify(psl2_group(7)).to_string(), "L2(7)");
  EXPECT_EQ(identify(psl2_group(8)).to_string(), "L2(8)");
  EXPECT_EQ(identify(pgl2_group(5)).to_string(), "S5");
  EXPECT_EQ(identify(quaternion_group()).to_string(), "Q8");
  EXPECT_EQ(identify(frobenius21_group()).to_string(), "F21");
  EXPECT_EQ(identify(affine_line_group(5)).to_string(), "F20");
  EXPECT_EQ(identify(special_linear_group(2, 3)).to_string(), "group(24)");
  EXPECT_EQ(psl2_parameters(GroupId::alternating(5)), (std::vector<std::uint64_t>{4, 5}));
  EXPECT_EQ(psl2_parameters(GroupId::alternating(6)), (std::vector<std::uint64_t>{9}));
}

TEST(Isomorphism, DistinguishesEqualOrderGroups) {
  EXPECT_FALSE(is_isomorphic(dihedral_group(8), quaternion_group()));
  EXPECT_FALSE(is_isomorphic(cyclic_group(4), elementary_abelian_group(2, 2)));
  EXPECT_FALSE(is_isomorphic(symmetric_group(4), special_linear_group(2, 3)));
  EXPECT_FALSE(is_isomorphic(direct_product({alternating_group(4), cyclic_group(2)}), symmetric_group(4)));
  EXPECT_FALSE(is_isomorphic(dihedral_group(12), alternating_group(4)));
  EXPECT_TRUE(is_isomorphic(symmetric_group(3), dihedral_group(6)));
  EXPECT_TRUE(is_isomorphic(psl2_group(4), psl2_group(5)));
  EXPECT_TRUE(is_isomorphic(psl2_group(9), alternating_group(6)));
  EXPECT_TRUE(is_isomorphic(pgl2_group(3), symmetric_group(4)));
  EXPECT_FALSE(is_isomorphic(psl2_group(7), psl2_group(8)));
}

TEST(Isomorphism, InvariantUnderRelabellingWithWitness) {
  std::mt19937_64 rng(23);
  for (const auto& spec : scan_battery(200)) {
    auto g = build_group(spec);
    SCOPED_TRACE(spec.label());
    auto h = relabel(g, rng() % 3, rng);
    EXPECT_EQ(fingerprint(g), fingerprint(h));
    EXPECT_EQ(identify(g), identify(h));
    auto images = find_isomorphism(g, h);
    ASSERT_TRUE(images.has_value());
    ASSERT_EQ(images->size(), g.generators().size());
    EXPECT_EQ(group_from_generators(h.degree(), *images).order(), h.order());
    EXPECT_TRUE(is_isomorphism(g, h, *images));
  }
}

TEST(Isomorphism, InvariantFactors) {
  EXPECT_EQ(invariant_factors({2, 4, 3}), (std::vector<std::uint64_t>{2, 12}));
  EXPECT_EQ(invariant_factors({2, 2, 2}), (std::vector<std::uint64_t>{2, 2, 2}));
  EXPECT_EQ(invariant_factors({5}), (std::vector<std::uint64_t>{5}));
}
