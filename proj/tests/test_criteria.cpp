#include "support.hpp"

#include "surfcalc/criteria.hpp"
#include "surfcalc/errors.hpp"

#include <gtest/gtest.h>

using namespace surfcalc;
using namespace surfcalc::testing;

namespace {

void expect_witnesses_rescore(const SurfaceModel& s, const DivisorClass& l, const CertificateReport& r) {
  for (const auto& w : r.witnesses) {
    EXPECT_EQ(s.lattice.pair(w.cls, l), w.dot_l);
    EXPECT_EQ(s.lattice.pair(w.cls, w.cls), w.self);
  }
  if (r.verdict == Verdict::ObstructionFound) EXPECT_FALSE(r.witnesses.empty());
}

}  // namespace

TEST(Reider, SignatureTablesAreTheHandTranscribedOnes) {
  EXPECT_EQ(freeness_signatures(), (std::vector<Signature>{{0, -1}, {1, 0}}));
  EXPECT_EQ(very_ample_signatures(), (std::vector<Signature>{{0, -1}, {0, -2}, {1, 0}, {1, -1}, {2, 0}}));
  for (const auto& s : freeness_signatures()) {
    EXPECT_NE(std::find(very_ample_signatures().begin(), very_ample_signatures().end(), s),
              very_ample_signatures().end());
  }
}

TEST(Reider, RuledSurfaceFibreObstructsFreeness) {
  const auto q = fixture("p1xp1.json");
  const auto l = cls({1, 3});
  const auto r = reider_freeness(q, l, std::nullopt, 3);
  EXPECT_EQ(r.verdict, Verdict::ObstructionFound);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.witnesses[0].description, "F2");
  EXPECT_EQ(r.witnesses[0].dot_l, 1);
  EXPECT_EQ(r.witnesses[0].self, 0);
  expect_witnesses_rescore(q, l, r);
  const auto va = reider_very_ample(q, l, 3);
  expect_witnesses_rescore(q, l, va);
}

TEST(Reider, PlaneCubicAndQuartic) {
  const auto p2 = fixture("p2.json");
  EXPECT_EQ(reider_freeness(p2, cls({3}), std::nullopt, 3).verdict, Verdict::CriterionHolds);
  EXPECT_EQ(reider_freeness(p2, cls({3}), std::string("x"), 3).verdict, Verdict::CriterionHolds);
  EXPECT_EQ(reider_very_ample(p2, cls({4}), 3).verdict, Verdict::CriterionHolds);
  EXPECT_EQ(reider_very_ample(p2, cls({3}), 3).verdict, Verdict::HypothesesFail);
  EXPECT_EQ(reider_freeness(p2, cls({2}), std::nullopt, 3).verdict, Verdict::HypothesesFail);
}

TEST(Reider, NonNefIsHypothesisFailure) {
  const auto bl = fixture("bl_p2.json");
  const auto r = reider_freeness(bl, cls({3, 1}), std::nullopt, 3);
  EXPECT_EQ(r.verdict, Verdict::HypothesesFail);
}

TEST(Reider, EllipticCurveOnAbelianSurface) {
  const auto a = fixture("abelian_elliptic.json");
  const auto l = cls({2, 1});
  const auto r = reider_very_ample(a, l, 3);
  EXPECT_EQ(r.verdict, Verdict::ObstructionFound);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses[0].description, "E");
  expect_witnesses_rescore(a, l, r);
}

TEST(Reider, IncompleteTableIsInconclusive) {
  const auto k3 = fixture("k3_elliptic.json");
  const auto r = reider_freeness(k3, cls({3, 1}), std::nullopt, 3);  // L² = 8, e·L = 1
  EXPECT_EQ(r.verdict, Verdict::ObstructionFound);
  auto p2 = fixture("p2.json");
  p2.complete_through.clear();
  EXPECT_EQ(reider_freeness(p2, cls({3}), std::nullopt, 3).verdict, Verdict::Inconclusive);
}

TEST(Reider, PointRestrictionFiltersWitnesses) {
  auto q = fixture("p1xp1.json");
  q.curves[1].point_mults.clear();
  EXPECT_EQ(reider_freeness(q, cls({1, 3}), std::string("p"), 3).verdict, Verdict::CriterionHolds);
}

TEST(Reider, MonotoneInBoundAndSubsetProperty) {
  const auto q = fixture("p1xp1.json");
  for (long long a = 0; a <= 4; ++a) {
    for (long long b = 0; b <= 4; ++b) {
      const auto l = cls({a, b});
      const auto small = reider_very_ample(q, l, 1);
      const auto large = reider_very_ample(q, l, 4);
      EXPECT_LE(small.witnesses.size(), large.witnesses.size());
      const auto free = reider_freeness(q, l, std::nullopt, 4);
      for (const auto& w : free.witnesses) {
        const bool found = std::any_of(large.witnesses.begin(), large.witnesses.end(),
                                       [&](const Witness& v) { return v.cls == w.cls; });
        if (large.verdict != Verdict::HypothesesFail) EXPECT_TRUE(found);
      }
    }
  }
}

TEST(Reider, ChainWindowAdmitsExactlyTheFreenessPairs) {
  std::vector<Signature> admitted;
  for (int ld = 0; ld <= 10; ++ld)
    for (int d2 = -10; d2 <= 10; ++d2)
      if (ld - 1 <= d2 && 2 * d2 < ld) admitted.emplace_back(ld, d2);
  EXPECT_EQ(admitted, freeness_signatures());
}

TEST(NumericalGeneration, Thresholds) {
  const auto q = fixture("p1xp1.json");
  const auto g = numerical_global_generation(q, cls({1, 3}));
  EXPECT_EQ(g.freeness.verdict, Verdict::HypothesesFail);
  const auto p2 = fixture("p2.json");
  const auto three = numerical_global_generation(p2, cls({3}));
  EXPECT_EQ(three.freeness.verdict, Verdict::CriterionHolds);
  EXPECT_EQ(numerical_global_generation(p2, cls({0})).freeness.verdict, Verdict::HypothesesFail);
}

TEST(Fujita, PlaneQuadricAndNonAmple) {
  const auto p2 = fixture("p2.json");
  const auto f = fujita_adjoint(p2, cls({1}));
  EXPECT_EQ(f.free_3a.verdict, Verdict::CriterionHolds);
  EXPECT_EQ(f.very_ample_4a.verdict, Verdict::CriterionHolds);
  EXPECT_EQ(f.free_threshold, 3);
  EXPECT_EQ(f.very_ample_threshold, 4);
  const auto q = fixture("p1xp1.json");
  const auto fq = fujita_adjoint(q, cls({1, 1}));
  EXPECT_EQ(fq.free_3a.verdict, Verdict::CriterionHolds);
  EXPECT_EQ(fq.very_ample_4a.verdict, Verdict::CriterionHolds);
  EXPECT_EQ(fujita_adjoint(q, cls({1, 0})).free_3a.verdict, Verdict::HypothesesFail);
}

TEST(Pluricanonical, MatchesTable) {
  // Rows K² = 1..5, columns m = 1..6: free / embedding.
  const char* free_table[5] = {"000111", "001111", "001111", "001111", "001111"};
  const char* emb_table[5] = {"000011", "000111", "001111", "001111", "001111"};
  for (int k2 = 1; k2 <= 5; ++k2) {
    for (int m = 1; m <= 6; ++m) {
      const auto s = pluricanonical_status(k2, m);
      EXPECT_EQ(s.free == Guarantee::Yes, free_table[k2 - 1][m - 1] == '1') << k2 << "," << m;
      EXPECT_EQ(s.embedding_away_from_minus2 == Guarantee::Yes, emb_table[k2 - 1][m - 1] == '1') << k2 << "," << m;
    }
  }
  EXPECT_THROW(pluricanonical_status(0, 5), InputError);
}

TEST(KodairaZero, K3AndAbelianCases) {
  const auto k3 = fixture("k3_elliptic.json");
  const auto r = kodaira_zero_obstructions(k3, cls({2, 1}), 3);
  EXPECT_EQ(r.freeness.verdict, Verdict::ObstructionFound);
  ASSERT_FALSE(r.freeness.witnesses.empty());
  EXPECT_EQ(r.freeness.witnesses[0].description, "e");
  EXPECT_EQ(r.very_ample.verdict, Verdict::HypothesesFail);
  const auto eight = kodaira_zero_obstructions(k3, cls({3, 1}), 3);  // L² = 8
  EXPECT_NE(eight.freeness.verdict, Verdict::HypothesesFail);
  EXPECT_EQ(eight.very_ample.verdict, Verdict::HypothesesFail);
  const auto ab = fixture("abelian_1_5.json");
  EXPECT_EQ(kodaira_zero_obstructions(ab, cls({1}), 3).very_ample.verdict, Verdict::CriterionHolds);
  EXPECT_THROW(kodaira_zero_obstructions(fixture("p2.json"), cls({3}), 3), InputError);
}

TEST(Jets, LengthD) {
  const auto q = fixture("p1xp1.json");
  const auto r = jets_length_d(q, cls({2, 3}), 2, 3);
  EXPECT_NE(r.verdict, Verdict::HypothesesFail);
  ASSERT_GE(r.trace.size(), 2u);
  EXPECT_FALSE(r.trace[1].pass);  // min L·C = 2 < 4
  for (const auto& w : r.witnesses) {
    EXPECT_LE(w.dot_l - 2, w.self);
    EXPECT_LT(2 * w.self, w.dot_l);
  }
  EXPECT_EQ(jets_length_d(fixture("p2.json"), cls({2}), 1, 3).verdict, Verdict::HypothesesFail);  // L² = 4d
}

TEST(Curves, BundleStatusAndNormalGeneration) {
  auto s = curve_bundle_status(2, 4);
  EXPECT_EQ(s.free, Guarantee::Yes);
  EXPECT_EQ(s.very_ample, Guarantee::Unknown);
  EXPECT_EQ(curve_bundle_status(0, 0).free, Guarantee::Yes);
  s = curve_bundle_status(3, 7);
  EXPECT_EQ(s.very_ample, Guarantee::Yes);
  for (int g = 0; g <= 5; ++g)
    for (int d = 0; d <= 12; ++d) {
      EXPECT_EQ(curve_bundle_status(g, d).free == Guarantee::Yes, d >= 2 * g);
      EXPECT_EQ(curve_bundle_status(g, d).very_ample == Guarantee::Yes, d >= 2 * g + 1);
    }
  EXPECT_EQ(normal_generation_threshold(7, 0, 3), 12);
  EXPECT_EQ(normal_generation_threshold(4, 0, 0), 9);
  EXPECT_EQ(normal_generation_threshold(4, 1, 0), 7);
}
