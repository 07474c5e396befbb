#include "oracles.hpp"
#include "support.hpp"

#include "surfcalc/linalg.hpp"
#include "surfcalc/positivity.hpp"

#include <gtest/gtest.h>

using namespace surfcalc;
using namespace surfcalc::testing;

TEST(Vanishing, Applicability) {
  const auto p2 = fixture("p2.json");
  const auto kv = kv_applicability(p2, parse_qdivisor("3/2*line_y", p2));
  EXPECT_TRUE(kv.vanishing_applies);
  EXPECT_EQ(kv.adjoint_class, cls({-1}));
  const auto q = fixture("p1xp1.json");
  EXPECT_FALSE(kv_applicability(q, parse_qdivisor("F1", q)).vanishing_applies);
}

TEST(Krs, StrictCertificate) {
  const auto p2 = fixture("p2.json");
  const auto c = krs_jet_certificate(p2, cls({4}), 1, parse_qdivisor("quartic_x3", p2), "x", 0);
  EXPECT_EQ(c.report.verdict, Verdict::CriterionHolds);
  EXPECT_EQ(c.q, 3);
  EXPECT_FALSE(c.branch);
}

TEST(Krs, BoundaryNeedsAmpleAssertion) {
  const auto p2 = fixture("p2.json");
  // D = 2*line_x + 2*line_y ∈ |4H|, q = 2 at x... use line_x2 to reach q = 4.
  const auto d = parse_qdivisor("2*line_x + 2*line_x2", p2);
  const auto plain = krs_jet_certificate(p2, cls({4}), 1, d, "x", 0);
  EXPECT_EQ(plain.q, 4);
  EXPECT_EQ(plain.report.verdict, Verdict::Inconclusive);
  const auto asserted = krs_jet_certificate(p2, cls({4}), 1, d, "x", 0, true);
  EXPECT_EQ(asserted.report.verdict, Verdict::CriterionHolds);
}

TEST(Krs, BranchChainValue) {
  const auto p2 = fixture("p2.json");
  // k = 2, L = 4H, D = 3*line_x + 2*line_x2 + 3*line_y ∈ |8H|, q = 5, d0 = 3.
  const auto d = parse_qdivisor("3*line_x + 2*line_x2 + 3*line_y", p2);
  const auto c = krs_jet_certificate(p2, cls({4}), 2, d, "x", 0);
  EXPECT_EQ(c.q, 5);
  ASSERT_TRUE(c.branch);
  EXPECT_EQ(c.branch->component, "line_x");
  EXPECT_EQ(c.branch->d0, 3);
  ASSERT_TRUE(c.branch->chain_bound);
  EXPECT_EQ(*c.branch->chain_bound, Rational(4, 3));
  ASSERT_TRUE(c.branch->restricted_degree);
  // N = floor(2/3*line_x2 + line_y) = line_y; (4H − H − H)·H = 2.
  EXPECT_EQ(c.branch->rounded_rest.str(), "line_y");
  EXPECT_EQ(*c.branch->restricted_degree, 2);
}

TEST(Krs, InputErrors) {
  const auto p2 = fixture("p2.json");
  EXPECT_THROW(krs_jet_certificate(p2, cls({4}), 2, parse_qdivisor("quartic_x3", p2), "x", 0), InputError);
  EXPECT_THROW(krs_jet_certificate(p2, cls({1}), 1, parse_qdivisor("1/2*line_x + 1/2*line_y", p2), "x", 0),
               InputError);
}

TEST(AlmostIsolated, Index) {
  auto p2 = fixture("p2.json");
  CurveRecord septic;
  septic.name = "septic";
  septic.cls = cls({7});
  septic.point_mults = {{"x", 7}, {"z", 1}};
  p2.curves.push_back(septic);
  const auto d = parse_qdivisor("septic + 2*line_y", p2);
  const auto r = almost_isolated_index(d, 3, "x");
  ASSERT_TRUE(r.index_sup);
  EXPECT_EQ(*r.index_sup, Rational(7, 3));
  EXPECT_FALSE(almost_isolated_index(parse_qdivisor("3*line_x", p2), 3, "x").index_sup);
  EXPECT_FALSE(almost_isolated_index(QDivisor(), 3, "x").index_sup);
}

TEST(Zariski, BlownUpPlaneExamples) {
  const auto bl = fixture("bl_p2.json");
  const auto z = zariski_decompose(bl, cls({1, 1}));
  EXPECT_EQ(z.positive, cls({1, 0}));
  ASSERT_EQ(z.negative.size(), 1u);
  EXPECT_EQ(z.negative[0].first, "E");
  EXPECT_EQ(z.negative[0].second, 1);
  const auto nef = zariski_decompose(bl, cls({2, -1}));
  EXPECT_EQ(nef.positive, cls({2, -1}));
  EXPECT_TRUE(nef.negative.empty());
  const auto e = zariski_decompose(bl, cls({0, 1}));
  EXPECT_EQ(e.positive, cls({0, 0}));
  EXPECT_THROW(zariski_decompose(bl, cls({-1, 0})), NotPseudoeffectiveError);
}


TEST(Zariski, RandomFixturesMatchSubsetOracle) {
  std::mt19937_64 rng(20250101);
  int checked = 0;
  while (checked < 200) {
    const std::size_t points = static_cast<std::size_t>(uniform(rng, 1, 3));
    SurfaceModel s = blown_up_plane(points);
    auto candidates = plane_curve_candidates(points);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (const auto& c : candidates) {
      if (s.curves.size() >= 4) break;
      bool compatible = true;
      for (const auto& existing : s.curves)
        if (s.lattice.pair(existing.cls, c) < 0) compatible = false;
      if (!compatible) continue;
      CurveRecord rec;
      rec.name = "C" + std::to_string(s.curves.size());
      rec.cls = c;
      s.curves.push_back(rec);
    }
    DivisorClass d(s.rank());
    for (const auto& c : s.curves) d += Rational(uniform(rng, 0, 3), uniform(rng, 1, 2)) * c.cls;
    if (d.is_zero()) continue;

    const auto z = zariski_decompose(s, d);
    const auto oracle = zariski_subset_oracle(s, d);
    ASSERT_FALSE(oracle.empty());
    std::map<std::size_t, Rational> got;
    for (const auto& [name, coeff] : z.negative) {
      for (std::size_t i = 0; i < s.curves.size(); ++i)
        if (s.curves[i].name == name) got[i] = coeff;
    }
    for (const auto& o : oracle) {
      EXPECT_EQ(o.p, z.positive);
      EXPECT_EQ(o.n, got);
    }
    // Invariants.
    EXPECT_TRUE(is_nef_on_table(s, z.positive).nef);
    EXPECT_EQ(z.positive + z.negative_class(s), d);
    linalg::Matrix g(z.negative.size(), std::vector<Rational>(z.negative.size()));
    for (std::size_t a = 0; a < z.negative.size(); ++a) {
      const auto* ca = s.find_curve(z.negative[a].first);
      EXPECT_GT(z.negative[a].second, 0);
      EXPECT_EQ(s.lattice.pair(z.positive, ca->cls), 0);
      for (std::size_t b = 0; b < z.negative.size(); ++b)
        g[a][b] = s.lattice.pair(ca->cls, s.find_curve(z.negative[b].first)->cls);
    }
    if (!z.negative.empty()) EXPECT_TRUE(linalg::is_negative_definite(g));
    const auto again = zariski_decompose(s, z.positive);
    EXPECT_EQ(again.positive, z.positive);
    EXPECT_TRUE(again.negative.empty());
    ++checked;
  }
}

TEST(Mumford, QuadricConeAndA2) {
  const auto res = resolution_from_model(fixture("quadric_cone.json"), {"sigma"});
  EXPECT_EQ(mumford_pullback(res, "ruling1"), std::vector<Rational>{Rational(1, 2)});
  EXPECT_EQ(mumford_intersect(res, "ruling1", "ruling2", Rational(0)), Rational(1, 2));
  ResolutionData a2;
  a2.exceptional_gram = {{-2, 1}, {1, -2}};
  a2.incidence = {{"D", {1, 0}}, {"C", {0, 1}}, {"far", {0, 0}}};
  EXPECT_EQ(mumford_pullback(a2, "D"), (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
  EXPECT_EQ(mumford_pullback(a2, "far"), (std::vector<Rational>{Rational(0), Rational(0)}));
  EXPECT_EQ(mumford_intersect(a2, "far", "far", Rational(5)), 5);
  EXPECT_EQ(mumford_intersect(a2, "D", "C", Rational(0)), mumford_intersect(a2, "C", "D", Rational(0)));
  EXPECT_THROW(mumford_pullback(a2, "missing"), InputError);
  ResolutionData bad;
  bad.exceptional_gram = {{0}};
  bad.incidence = {{"D", {1}}};
  EXPECT_THROW(mumford_pullback(bad, "D"), InputError);
}

TEST(Mumford, OrthogonalityAndPositivity) {
  std::mt19937_64 rng(5);
  const std::vector<std::vector<std::vector<std::int64_t>>> grams{
      {{-2}}, {{-3}}, {{-2, 1}, {1, -2}}, {{-2, 1, 0}, {1, -2, 1}, {0, 1, -2}}, {{-3, 1}, {1, -2}}};
  for (const auto& g : grams) {
    for (int t = 0; t < 20; ++t) {
      ResolutionData r;
      r.exceptional_gram = g;
      std::vector<std::int64_t> inc;
      for (std::size_t i = 0; i < g.size(); ++i) inc.push_back(uniform(rng, 0, 3));
      r.incidence["D"] = inc;
      const auto delta = mumford_pullback(r, "D");
      for (std::size_t j = 0; j < g.size(); ++j) {
        Rational dot = inc[j];
        for (std::size_t i = 0; i < g.size(); ++i) dot += delta[i] * g[i][j];
        EXPECT_EQ(dot, 0);
        EXPECT_GE(delta[j], 0);
      }
    }
  }
}

TEST(QCheck, Generation) {
  const auto p2 = fixture("p2.json");
  const auto r = qdivisor_generation_check(p2, parse_qdivisor("5/2*line_y", p2));
  EXPECT_EQ(r.report.verdict, Verdict::CriterionHolds);
  EXPECT_EQ(r.adjoint_class, cls({0}));
  EXPECT_EQ(qdivisor_generation_check(p2, parse_qdivisor("2*line_y", p2)).report.verdict, Verdict::HypothesesFail);
}

TEST(QCheck, VeryAmple) {
  const auto p2 = fixture("p2.json");
  EXPECT_EQ(qdivisor_very_ample_check(p2, parse_qdivisor("9/2*line_y", p2)).report.verdict, Verdict::CriterionHolds);
  const auto q = fixture("p1xp1.json");
  EXPECT_EQ(qdivisor_very_ample_check(q, parse_qdivisor("3*F1", q)).report.verdict, Verdict::HypothesesFail);  // M² = 0
  EXPECT_EQ(qdivisor_very_ample_check(q, parse_qdivisor("3*F1 + 4*F2", q)).report.verdict, Verdict::CriterionHolds);
  // M² = 18 exactly: (3,3).
  EXPECT_EQ(qdivisor_very_ample_check(q, parse_qdivisor("3*F1 + 3*F2", q)).report.verdict, Verdict::HypothesesFail);
}

TEST(NormalSurface, BetaConditions) {
  const auto [b1, b2] = normal_surface_preset();
  EXPECT_EQ(normal_surface_check(Rational(17), Rational(2), b1, b2).verdict, Verdict::CriterionHolds);
  EXPECT_EQ(normal_surface_check(Rational(16), Rational(2), b1, b2).verdict, Verdict::HypothesesFail);
  EXPECT_EQ(normal_surface_check(Rational(100), Rational(9), Rational(9), Rational(2)).verdict, Verdict::HypothesesFail);
  EXPECT_EQ(normal_surface_check(Rational(10), Rational(3), Rational(3), Rational(3)).verdict, Verdict::CriterionHolds);
}

TEST(Cusps, Bounds) {
  EXPECT_EQ(cusp_bound(7).k_min, 3);
  EXPECT_EQ(cusp_bound(7).bound, 10);
  EXPECT_EQ(cusp_bound(6).k_min, 3);
  EXPECT_EQ(cusp_bound(3).k_min, 0);
  EXPECT_EQ(cusp_bound(3).bound, 1);
  for (int d = 4; d < 60; ++d) EXPECT_LE(cusp_bound(d).bound, cusp_bound(d + 1).bound);
}

TEST(Matsusaka, PlaneAndClamp) {
  const auto r = matsusaka_for(fixture("p2.json"), cls({1}));
  EXPECT_EQ(r.a, 1);
  EXPECT_EQ(r.b, 1);
  EXPECT_EQ(r.m_free, 2);
  EXPECT_EQ(r.m_very_ample, 4);
  for (int m = 1; m <= 10; ++m) EXPECT_EQ(r.rho(m), Rational((m + 3) * (m + 3) - 2 * (m + 3)));
  EXPECT_TRUE(r.star_condition(r.m_free));
  const auto c = matsusaka_thresholds(Rational(1), Rational(-1));
  EXPECT_EQ(c.m_free, 1);
  EXPECT_FALSE(c.notes.empty());
  EXPECT_THROW(matsusaka_thresholds(Rational(0), Rational(1)), InputError);
}

TEST(Matsusaka, StarOrGapFlagOnFixtures) {
  for (const auto& name : fixture_names()) {
    const auto s = fixture(name);
    for (const auto& c : s.curves) {
      if (!is_ample_on_table(s, c.cls)) continue;
      const auto r = matsusaka_for(s, c.cls);
      for (std::int64_t m = r.m_free; m < r.m_free + 6; ++m)
        EXPECT_TRUE(r.rho(m) > 4 || r.regime_gap()) << name;
    }
  }
}

TEST(Singularities, ThresholdsAndExactSquaring) {
  EXPECT_EQ(singularity_thresholds(0).square, 5);
  EXPECT_EQ(singularity_thresholds(0).curve, 3);
  EXPECT_EQ(singularity_thresholds(1).square, 10);
  EXPECT_EQ(singularity_thresholds(1).curve, 7);
  EXPECT_TRUE(f_s_below(Rational(5), 0, Rational(3)));
  EXPECT_TRUE(f_s_below(Rational(10), 1, Rational(7)));
  EXPECT_FALSE(f_s_below(Rational(4), 0, Rational(2)));  // f_0(4) = 4
  EXPECT_FALSE(f_s_below(Rational(3), 0, Rational(3)));  // outside the domain
}

TEST(Singularities, ProductionCheckOnFixtures) {
  const auto p2 = fixture("p2.json");
  const auto r = singularity_production_check(p2, cls({3}), 0, std::string("x"));
  EXPECT_EQ(r.report.verdict, Verdict::CriterionHolds);
  ASSERT_TRUE(r.nonvanishing_section);
  EXPECT_TRUE(*r.nonvanishing_section);
  EXPECT_TRUE(*r.alternate_hypotheses == false);
  EXPECT_FALSE(r.very_ample_preset);
  const auto seven = singularity_production_check(p2, cls({7}), 1, std::nullopt);
  EXPECT_TRUE(seven.very_ample_preset);
}

TEST(MovingPart, Samples) {
  const auto v = moving_part_inequality_check(Rational(1), {{10, Rational(100)}, {10, Rational(95)}, {10, Rational(80)}},
                                              Rational(1));
  EXPECT_EQ(v, (std::vector<bool>{true, true, false}));
  EXPECT_EQ(moving_part_inequality_check(Rational(1), {{10, Rational(100)}}, Rational(0)), std::vector<bool>{true});
  EXPECT_THROW(moving_part_inequality_check(Rational(0), {}, Rational(0)), InputError);
}

TEST(MovingPart, DivisorProductionCount) {
  const auto p2 = fixture("p2.json");
  // χ(kdH) vs C(2k+2, 2): positive once d² > 4 roughly.
  const auto k = divisor_production_k(p2, cls({3}), 0);
  ASSERT_TRUE(k);
  const auto chi = [](long long n) { return (n + 1) * (n + 2) / 2; };
  EXPECT_GT(chi(3 * *k), (2 * *k + 2) * (2 * *k + 1) / 2);
  for (long long j = 1; j < *k; ++j) EXPECT_LE(chi(3 * j), (2 * j + 2) * (2 * j + 1) / 2);
  EXPECT_FALSE(divisor_production_k(p2, cls({1}), 0, 200));
}
