#include "support.hpp"

#include "surfcalc/bundles.hpp"
#include "surfcalc/errors.hpp"

#include <gtest/gtest.h>

using namespace surfcalc;
using namespace surfcalc::testing;

TEST(Chern, DiscriminantTwistInvariance) {
  std::mt19937_64 rng(4242);
  std::vector<SurfaceModel> surfaces;
  for (const auto& name : fixture_names()) surfaces.push_back(fixture(name));
  for (int i = 0; i < 1000; ++i) {
    const auto& s = surfaces[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(surfaces.size()) - 1))];
    const ChernData e(2, random_class(rng, s.rank(), -6, 6), Integer(uniform(rng, -20, 20)));
    const auto n = random_class(rng, s.rank(), -6, 6);
    EXPECT_EQ(discriminant(s, twist(s, e, n)), discriminant(s, e));
  }
}

TEST(Chern, ExtensionAndElementaryTransformation) {
  const auto q = fixture("p1xp1.json");
  const auto e = from_extension(q, cls({1, 0}), cls({0, 1}), 3);
  EXPECT_EQ(e.c1, cls({1, 1}));
  EXPECT_EQ(e.c2, 4);
  const auto v = elementary_transformation(q, e, cls({1, 0}), 2);
  EXPECT_EQ(v.c1, cls({0, 1}));
  EXPECT_EQ(v.c2, 4 - 1 + 2);
  EXPECT_THROW(ChernData(2, parse_class("1/2,0"), Integer(0)), InputError);
}

TEST(Chern, DestabilizerSearchFindsSubbundles) {
  const auto q = fixture("p1xp1.json");
  const ChernData e(2, cls({1, 1}), Integer(-1));
  const auto r = destabilizer_search(q, e, cls({1, 1}), 3);
  EXPECT_EQ(r.verdict, StabilityVerdict::CandidatesFound);
  ASSERT_FALSE(r.candidates.empty());
  for (const auto& c : r.candidates) {
    const auto diff = Rational(2) * c.a - e.c1;
    EXPECT_GT(q.lattice.pair(diff, diff), 0);
    EXPECT_GT(q.lattice.pair(diff, cls({1, 1})), 0);
    EXPECT_GE(c.length_z, 0);
    EXPECT_EQ(r.discriminant, q.lattice.pair(diff, diff) - 4 * c.length_z);
  }
  const auto stable = destabilizer_search(q, ChernData(2, cls({3, 3}), Integer(5)), cls({1, 1}), 1);
  EXPECT_EQ(stable.discriminant, -2);
  EXPECT_EQ(stable.verdict, StabilityVerdict::StableConsistent);
}

TEST(ReiderChain, FreenessTerminalPairs) {
  const auto ok = reider_chain_from_numbers(Rational(6), Rational(1), Rational(0));
  EXPECT_TRUE(ok.terminal);
  const auto failing = reider_chain_from_numbers(Rational(6), Rational(2), Rational(2));
  EXPECT_TRUE(failing.first_failure);
}

TEST(ReiderChain, RefusesWithoutHypotheses) {
  const auto q = fixture("p1xp1.json");
  EXPECT_TRUE(reider_chain_verify(q, cls({1, 1}), cls({0, 1})).refused);  // L² = 2 < 5
  EXPECT_FALSE(reider_chain_verify(q, cls({1, 3}), cls({0, 1})).refused);
}

TEST(K3, EndomorphismEulerRoutesAgree) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto r = uniform(rng, 1, 5);
    const auto d = uniform(rng, 0, 20);
    const auto g = uniform(rng, 2, 12);
    const auto rho = g - (r + 1) * (g - d + r);
    const auto rk = r + 1;
    EXPECT_EQ(k3_end_euler(r, d, g), 2 - 2 * rho);
    EXPECT_EQ(k3_end_euler(r, d, g), 2 * rk * rk - 2 * rk * d + (rk - 1) * (2 * g - 2));
  }
}

TEST(Curves, BrillNoetherAndGonality) {
  EXPECT_EQ(brill_noether_rho(4, 1, 3), 0);
  EXPECT_EQ(brill_noether_rho(7, 1, 5), 1);
  const std::vector<std::int64_t> quartic_cubic{3, 4};
  EXPECT_EQ(gonality_bound(quartic_cubic), 8);
  const std::vector<std::int64_t> unsorted{4, 3};
  EXPECT_THROW(gonality_bound(unsorted), InputError);
}
