#include "surfcalc/bundles.hpp"

#include "surfcalc/errors.hpp"

namespace surfcalc {

ChernData::ChernData(std::int64_t r, DivisorClass first, Integer second)
    : rank(r), c1(std::move(first)), c2(std::move(second)) {
  if (rank < 1) throw InputError("Chern data needs rank >= 1");
  if (!c1.is_integral()) throw InputError("c1 must be an integral class");
  if (rank == 1 && c2 != 0) throw InputError("rank-1 Chern data has c2 = 0");
}

namespace {

void require_rank_two(const ChernData& e) {
  if (e.rank != 2) throw InputError("operation needs rank-2 Chern data, got rank " + std::to_string(e.rank));
}

Integer as_integer(const Rational& r, const char* what) {
  if (!is_integer(r)) throw InputError(std::string(what) + " is not an integer: " + to_string(r));
  return numerator_of(r);
}

}  // namespace

Rational discriminant(const SurfaceModel& model, const ChernData& e) {
  require_rank_two(e);
  return model.lattice.pair(e.c1, e.c1) - 4 * Rational(e.c2);
}

ChernData twist(const SurfaceModel& model, const ChernData& e, const DivisorClass& n) {
  require_rank_two(e);
  if (!n.is_integral()) throw InputError("twisting class must be integral");
  const Rational c2 = Rational(e.c2) + model.lattice.pair(e.c1, n) + model.lattice.pair(n, n);
  return ChernData(2, e.c1 + Rational(2) * n, as_integer(c2, "twisted c2"));
}

ChernData from_extension(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b,
                         std::int64_t length_z) {
  if (!a.is_integral() || !b.is_integral()) throw InputError("extension classes must be integral");
  if (length_z < 0) throw InputError("length(Z) must be non-negative");
  const Rational c2 = model.lattice.pair(a, b) + length_z;
  return ChernData(2, a + b, as_integer(c2, "extension c2"));
}

ChernData elementary_transformation(const SurfaceModel& model, const ChernData& v, const DivisorClass& c,
                                    std::int64_t d) {
  if (!c.is_integral()) throw InputError("curve class must be integral");
  const Rational c2 = Rational(v.c2) - model.lattice.pair(v.c1, c) + d;
  return ChernData(v.rank, v.c1 - c, as_integer(c2, "transformed c2"));
}

DestabilizerResult destabilizer_search(const SurfaceModel& model, const ChernData& e, const DivisorClass& ample,
                                       std::int64_t coeff_bound) {
  require_rank_two(e);
  if (coeff_bound < 1) throw InputError("coeff_bound must be at least 1");
  if (model.lattice.pair(ample, ample) <= 0) throw InputError("ample class must have positive square");
  if (!is_nef_on_table(model, ample).nef) throw InputError("ample class is negative on a table curve");

  DestabilizerResult result;
  result.discriminant = discriminant(model, e);
  result.coeff_bound = coeff_bound;
  const std::size_t n = model.rank();
  std::vector<std::int64_t> coeffs(n, -coeff_bound);

  // Odometer over the box, last coordinate fastest: lexicographic order.
  while (true) {
    DivisorClass a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = coeffs[i];
    const DivisorClass diff = Rational(2) * a - e.c1;
    if (model.lattice.pair(diff, diff) > 0 && model.lattice.pair(diff, ample) > 0) {
      const Rational ab = model.lattice.pair(a, e.c1 - a);
      if (ab <= Rational(e.c2)) result.candidates.push_back({a, Rational(e.c2) - ab});
    }
    std::size_t k = n;
    while (k > 0 && coeffs[k - 1] == coeff_bound) {
      coeffs[k - 1] = -coeff_bound;
      --k;
    }
    if (k == 0) break;
    ++coeffs[k - 1];
  }

  if (!result.candidates.empty()) result.verdict = StabilityVerdict::CandidatesFound;
  else if (result.discriminant > 0) result.verdict = StabilityVerdict::Inconclusive;
  else result.verdict = StabilityVerdict::StableConsistent;
  return result;
}

ReiderChainReport reider_chain_from_numbers(const Rational& l2, const Rational& ld, const Rational& d2,
                                            std::int64_t c2) {
  if (c2 < 1) throw InputError("reider chain needs c2 >= 1");
  ReiderChainReport r;
  r.c2 = c2;
  r.checks.criterion = "reider-chain";
  r.checks.check("(L-2D).L > 0", l2 - 2 * ld, ">", Rational(0));
  r.checks.check("(L^2)(D^2) <= (L.D)^2", l2 * d2, "<=", ld * ld);
  r.checks.check("(L-D).D <= c2", ld - d2, "<=", Rational(c2));
  r.checks.check("2D^2 < L.D", 2 * d2, "<", ld);
  for (std::size_t i = 0; i < r.checks.trace.size(); ++i)
    if (!r.checks.trace[i].pass) {
      r.first_failure = i;
      break;
    }
  if (r.first_failure) {
    r.checks.verdict = Verdict::ObstructionFound;
    return r;
  }
  r.terminal = std::make_pair(ld, d2);
  r.checks.verdict = Verdict::CriterionHolds;
  if (c2 == 1) {
    const bool exceptional = ld == 0 && d2 == -1;
    const bool fibre = ld == 1 && d2 == 0;
    if (is_integer(ld) && is_integer(d2) && !exceptional && !fibre)
      throw InvariantError("chain holds but (L.D, D^2) is outside {(0,-1),(1,0)}");
    r.checks.note(exceptional ? "terminal case (0,-1)" : fibre ? "terminal case (1,0)" : "non-integral input");
  } else {
    r.checks.check("L.D - c2 <= D^2", ld - c2, "<=", d2);
    r.checks.check("D^2 < (L.D)/2", d2, "<", ld / 2);
    r.checks.note("window L.D - c2 <= D^2 < (L.D)/2");
  }
  return r;
}

ReiderChainReport reider_chain_verify(const SurfaceModel& model, const DivisorClass& l, const DivisorClass& d,
                                      std::int64_t c2) {
  const Rational l2 = model.lattice.pair(l, l);
  ReiderChainReport refused;
  refused.refused = true;
  refused.c2 = c2;
  refused.checks.criterion = "reider-chain";
  refused.checks.verdict = Verdict::HypothesesFail;
  const auto nef = is_nef_on_table(model, l);
  if (!nef.nef) {
    refused.refusal = "L is negative on table curve '" + model.curves[*nef.violated_curve].name + "'";
    return refused;
  }
  if (c2 == 1 && l2 < 5) {
    refused.refusal = "L^2 = " + to_string(l2) + " < 5";
    return refused;
  }
  if (c2 > 1 && l2 <= 4 * c2) {
    refused.refusal = "L^2 = " + to_string(l2) + " <= 4*c2";
    return refused;
  }
  return reider_chain_from_numbers(l2, model.lattice.pair(l, d), model.lattice.pair(d, d), c2);
}

std::int64_t brill_noether_rho(std::int64_t g, std::int64_t r, std::int64_t d) {
  if (g < 0 || r < 0) throw InputError("brill_noether_rho needs g >= 0 and r >= 0");
  return g - (r + 1) * (g - d + r);
}

std::int64_t k3_end_euler(std::int64_t r, std::int64_t d, std::int64_t g) {
  if (r < 1 || g < 2) throw InputError("k3_end_euler needs r >= 1 and g >= 2");
  const std::int64_t rank = r + 1;
  // Riemann–Roch on a K3: χ(End E) = 2·rk² − 2·rk·c₂ + (rk − 1)·c₁².
  const std::int64_t by_riemann_roch = 2 * rank * rank - 2 * rank * d + (rank - 1) * (2 * g - 2);
  const std::int64_t by_rho = 2 - 2 * brill_noether_rho(g, r, d);
  if (by_riemann_roch != by_rho)
    throw InvariantError("K3 endomorphism Euler characteristic mismatch: " + std::to_string(by_riemann_roch) +
                         " vs " + std::to_string(by_rho));
  return by_rho;
}

std::int64_t gonality_bound(std::span<const std::int64_t> degrees) {
  if (degrees.empty()) throw InputError("gonality_bound needs at least one degree");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 2) throw InputError("complete intersection degrees must be >= 2");
    if (i > 0 && degrees[i] < degrees[i - 1]) throw InputError("degrees must be sorted non-decreasing");
  }
  std::int64_t bound = degrees[0] - 1;
  for (std::size_t i = 1; i < degrees.size(); ++i) bound *= degrees[i];
  return bound;
}

}  // namespace surfcalc
