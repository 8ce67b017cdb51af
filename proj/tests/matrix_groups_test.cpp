#include <gtest/gtest.h>

#include <numeric>

#include "csec/error.hpp"
#include "csec/field.hpp"
#include "csec/matrix_groups.hpp"
#include "csec/named.hpp"
#include "csec/series.hpp"

using namespace csec;

TEST(FiniteField, AxiomsHoldExhaustively) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    auto f = FiniteField::of_order(q);
    ASSERT_EQ(f.size(), q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      EXPECT_EQ(f.mul(a, 1), a);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
        for (std::uint32_t c = 0; c < q; c += 1 + q / 5) EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    EXPECT_EQ(f.multiplicative_order(f.primitive_element()), q - 1);
  }
}

TEST(FiniteField, RejectsNonPrimePowers) {
  EXPECT_THROW(FiniteField::of_order(6), InvalidArgument);
  EXPECT_THROW(FiniteField::of_order(1), InvalidArgument);
}

TEST(FiniteField, Irreducibility) {
  EXPECT_TRUE(is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible({1, 0, 1}, 3));
}

TEST(LinearGroups, Psl2OrderFormula) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    std::uint64_t expected = std::uint64_t(q) * (q * q - 1) / std::gcd(2u, q - 1);
    EXPECT_EQ(psl2_group(q).order(), expected) << q;
    EXPECT_EQ(pgl2_group(q).order(), std::uint64_t(q) * (q * q - 1)) << q;
  }
}

TEST(LinearGroups, SpecialLinearOrders) {
  for (auto [n, q] : {std::pair{2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 2u}, {3u, 3u}}) {
    EXPECT_EQ(special_linear_group(n, q).order(), special_linear_order(n, q));
  }
  EXPECT_EQ(special_linear_order(2, 7), 336);
  EXPECT_EQ(special_linear_order(3, 4), 60480);
}

TEST(LinearGroups, ProjectivePointCount) {
  EXPECT_EQ(projective_point_count(2, 7), 8u);
  EXPECT_EQ(projective_point_count(3, 4), 21u);
}

TEST(LinearGroups, SingularMatrixIsRejected) {
  auto f = FiniteField::of_order(3);
  PointSet pts(f, 2, LinearAction::Vectors);
  Matrix zero(f, 2);
  EXPECT_THROW(pts.permutation(zero), InvalidArgument);
}

struct SylowCase {
  std::size_t n;
  std::uint32_t q;
  std::uint64_t linear;
  std::uint64_t projective;
};

class SylowNormalizer : public ::testing::TestWithParam<SylowCase> {};

TEST_P(SylowNormalizer, ClosedFormMinimalCornerAndNotSupersolvable) {
  const auto c = GetParam();
  auto f = FiniteField::of_order(c.q);
  EXPECT_TRUE(corner_conjugation_identity(c.n, f, 200, 1));
  for (auto action : {LinearAction::Vectors, LinearAction::ProjectivePoints}) {
    auto t = lower_triangular_normalizer(c.n, f, action);
    std::uint64_t expected = action == LinearAction::Vectors ? c.linear : c.projective;
    EXPECT_EQ(t.normalizer.order(), expected);
    EXPECT_EQ(t.closed_form, expected);
    EXPECT_EQ(normalizer(t.special_linear, t.sylow).order(), expected);
    auto cert = certify_corner_minimal_normal(t);
    EXPECT_TRUE(cert.normal);
    EXPECT_TRUE(cert.minimal);
    EXPECT_EQ(cert.corner_order, c.q);
    EXPECT_FALSE(is_supersolvable(t.normalizer.group()));
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, SylowNormalizer,
                         ::testing::Values(SylowCase{2, 4, 12, 12}, SylowCase{2, 8, 56, 56}, SylowCase{2, 9, 72, 36},
                                           SylowCase{3, 4, 576, 192}),
                         [](const auto& info) {
                           return "n" + std::to_string(info.param.n) + "_q" + std::to_string(info.param.q);
                         });
