#include <gtest/gtest.h>

#include <random>

#include "csec/error.hpp"
#include "csec/perm.hpp"

using namespace csec;

namespace {

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  for (Point i = 0; i < n; ++i) v[i] = i;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace

TEST(Permutation, ProductAppliesLeftFactorFirst) {
  Permutation a({1, 0, 2});  // (1,2)
  Permutation b({0, 2, 1});  // (2,3)
  Permutation ab = a * b;
  EXPECT_EQ(ab[0], b[a[0]]);
  EXPECT_EQ(ab.to_cycle_string(), "(1,3,2)");
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation({0, 3, 1}), InvalidArgument);
}

TEST(Permutation, CyclesRoundTrip) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto p = random_perm(1 + t % 12, rng);
    auto cycles = p.cycles();
    EXPECT_EQ(Permutation::from_cycles(p.degree(), cycles), p);
  }
}

TEST(Permutation, IdentityPrintsEmptyCycle) {
  EXPECT_EQ(Permutation(4).to_cycle_string(), "()");
  EXPECT_TRUE(Permutation(4).is_identity());
}

TEST(Permutation, OrderIsLcmOfCycleLengths) {
  std::vector<std::vector<Point>> cycles{{0, 1}, {2, 3, 4}, {5, 6, 7, 8}};
  auto p = Permutation::from_cycles(9, cycles);
  EXPECT_EQ(p.order(), 12u);
  EXPECT_EQ(p.support_size(), 9u);
}

TEST(Permutation, GroupAxiomsOnRandomSamples) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 1 + t % 10;
    auto a = random_perm(n, rng), b = random_perm(n, rng), c = random_perm(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(conjugate(a, b), b.inverse() * a * b);
    EXPECT_EQ(commutator(a, b), a.inverse() * b.inverse() * a * b);
    Permutation x = a;
    for (std::uint64_t k = 1; k < a.order(); ++k) {
      EXPECT_FALSE(x.is_identity());
      x = x * a;
    }
    EXPECT_TRUE(x.is_identity());
  }
}
