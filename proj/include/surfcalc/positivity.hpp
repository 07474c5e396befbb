#pragma once

#include "surfcalc/errors.hpp"
#include "surfcalc/lattice.hpp"
#include "surfcalc/qdivisor.hpp"
#include "surfcalc/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfcalc {

// ------------------------------------------------------------ vanishing

struct KvReport {
  BigNefVerdict big_nef;
  bool vanishing_applies = false;
  DivisorClass adjoint_class;  // K + ⌈M⌉
  std::vector<std::string> notes;
};

KvReport kv_applicability(const SurfaceModel& model, const QDivisor& m);

// ------------------------------------------------------------ KRS certificates

struct KrsBranch {
  std::string component;  // D₀, the component with (s+2)d₀ > q
  Rational d0;
  Rational threshold;     // q/(s+2)
  QDivisor rounded_rest;  // N = ⌊(D − d₀D₀)/d₀⌋
  std::optional<Rational> chain_bound;    // 1 + (q − 2k)/d₀, s = 0 only
  std::optional<Rational> restricted_degree;  // (L − D₀ − N)·D₀, s = 0 only
};

struct KrsCertificate {
  CertificateReport report;
  Rational q;
  std::optional<KrsBranch> branch;
};

/// Verifies that D ∈ |kL| certifies s-jet generation of K + L at `point`.
///
/// D must have non-negative integer coefficients and class exactly k·L
/// (InputError otherwise). Boundary coefficients (s+2)dᵢ = q are accepted
/// only when `l_ample_asserted` is set.
KrsCertificate krs_jet_certificate(const SurfaceModel& model, const DivisorClass& l, std::int64_t k,
                                   const QDivisor& d, const std::string& point, std::int64_t s,
                                   bool l_ample_asserted = false);

struct AlmostIsolatedIndex {
  std::optional<Rational> index_sup;  // mult_x(D)/k when valid
  std::string violation;
};

AlmostIsolatedIndex almost_isolated_index(const QDivisor& d, std::int64_t k, const std::string& point);

// ------------------------------------------------------------ Zariski

class NotPseudoeffectiveError : public InputError {
 public:
  explicit NotPseudoeffectiveError(const std::string& detail)
      : InputError("not-pseudoeffective-relative-to-table: " + detail) {}
};

struct ZariskiDecomposition {
  DivisorClass positive;
  std::vector<std::pair<std::string, Rational>> negative;  // table order, coefficients > 0

  DivisorClass negative_class(const SurfaceModel& model) const;
};

/// Classical iteration over the curve table: grow the support S by curves
/// with P·C < 0 and solve (D − N)·C = 0 on S. Curves with identical classes
/// are considered once (first in table order).
ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d);

// ------------------------------------------------------------ Mumford pullback

struct ResolutionData {
  std::vector<std::string> exceptional_names;
  std::vector<std::vector<std::int64_t>> exceptional_gram;
  std::map<std::string, std::vector<std::int64_t>> incidence;  // D'·Eⱼ

  // Symmetric, negative definite, incidence lengths match; InputError otherwise.
  void validate() const;
};

// Exceptional curves named in `exceptional`; every other table curve gets an incidence row.
ResolutionData resolution_from_model(const SurfaceModel& model, const std::vector<std::string>& exceptional);

// δ with G·δ = −incidence
std::vector<Rational> mumford_pullback(const ResolutionData& res, const std::string& divisor);

// (D₁' + Δ₁)·(D₂' + Δ₂)
Rational mumford_intersect(const ResolutionData& res, const std::string& first, const std::string& second,
                           const Rational& base_intersection);

// ------------------------------------------------------------ Q-divisor Reider

struct QCheckReport {
  CertificateReport report;
  DivisorClass adjoint_class;  // K + ⌈M⌉
};

QCheckReport qdivisor_generation_check(const SurfaceModel& model, const QDivisor& m, bool ample_asserted = false);
QCheckReport qdivisor_very_ample_check(const SurfaceModel& model, const QDivisor& m, bool ample_asserted = false);

CertificateReport normal_surface_check(const Rational& m2, const Rational& min_mc, const Rational& beta1,
                                       const Rational& beta2);
// β₁ = 2, β₂ = 4: M² > 16 and M·C >= 2.
std::pair<Rational, Rational> normal_surface_preset();

// ------------------------------------------------------------ effective bounds

struct CuspBound {
  std::int64_t k_min = 0;
  std::int64_t bound = 0;
};

CuspBound cusp_bound(std::int64_t d);

struct MatsusakaReport {
  Rational a;
  Rational b;
  std::int64_t m_free = 1;
  std::int64_t m_very_ample = 1;
  std::vector<std::string> notes;

  Rational rho(std::int64_t m) const;           // (m+3)²a − 2(m+3)b
  Rational l_dot_b(std::int64_t m) const;       // L·((m−1)L − K) = (m+3)a − b
  // ρ(m) > 4 and L·B_m − √((ρ(m) − 4)a) < 1, decided by exact squaring.
  bool star_condition(std::int64_t m) const;
  // True when star fails at m_free.
  bool regime_gap() const { return !star_condition(m_free); }
};

MatsusakaReport matsusaka_thresholds(const Rational& a, const Rational& b);
// a = L², b = (K + 4L)·L
MatsusakaReport matsusaka_for(const SurfaceModel& model, const DivisorClass& l);

struct SingularityThresholds {
  Rational square;  // (s+2)² + 1
  Rational curve;   // s² + 3s + 3
};

SingularityThresholds singularity_thresholds(std::int64_t s);

// f_s(x) = x − √(x(x − (s+2)²)) < c, exact; false when x < (s+2)².
bool f_s_below(const Rational& x, std::int64_t s, const Rational& c);

struct SingularityReport {
  CertificateReport report;      // main hypotheses
  SingularityThresholds thresholds;
  bool f_s_certified = false;    // f_s(L²) < s² + 3s + 3
  std::optional<bool> alternate_hypotheses;   // s = 0: L² >= 5 and L·C >= 5 for all C
  bool very_ample_preset = false;             // L² >= 10 and L·C >= 7
  std::optional<bool> nonvanishing_section;   // s = 0: L² >= 5 and through-point minimum >= 3
};

SingularityReport singularity_production_check(const SurfaceModel& model, const DivisorClass& l, std::int64_t s,
                                               const std::optional<std::string>& point);

struct MovingPartSample {
  std::int64_t k = 0;
  Rational mk2;
};

// Mk² >= ρk² − slack·k per sample; ρ > 0, slack >= 0.
std::vector<bool> moving_part_inequality_check(const Rational& rho, const std::vector<MovingPartSample>& samples,
                                               const Rational& slack);

/// Least k <= k_limit with χ(kL) − C((s+2)k + 2, 2) > 0, meaning a divisor in
/// |kL| of multiplicity > (s+2)k at a point exists provided h²(kL) = 0.
std::optional<std::int64_t> divisor_production_k(const SurfaceModel& model, const DivisorClass& l, std::int64_t s,
                                                 std::int64_t k_limit = 10000);

}  // namespace surfcalc
