#pragma once

#include "surfcalc/lattice.hpp"
#include "surfcalc/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfcalc {

using Signature = std::pair<int, int>;  // (D·L, D²)

// Effective divisors obstructing freeness of K + L when L² >= 5.
const std::vector<Signature>& freeness_signatures();
// Effective divisors obstructing very ampleness of K + L when L² >= 10.
const std::vector<Signature>& very_ample_signatures();

/// Searches table combinations whose (D·L, D²) is a freeness obstruction.
///
/// Verdicts: obstruction-found with witnesses; criterion-holds when nothing
/// is found, the table is declared complete at `point` (or everywhere when
/// no point is given) and the search box was exhaustive; inconclusive
/// otherwise. L must be nef on the table and L² >= 5.
CertificateReport reider_freeness(const SurfaceModel& model, const DivisorClass& l,
                                  const std::optional<std::string>& point, std::int64_t coeff_bound);

CertificateReport reider_very_ample(const SurfaceModel& model, const DivisorClass& l, std::int64_t coeff_bound,
                                    const std::optional<std::string>& point = std::nullopt);

struct GenerationReport {
  CertificateReport freeness;     // L² >= 5, L·C >= 2
  CertificateReport very_ample;   // L² >= 10, L·C >= 3
};

GenerationReport numerical_global_generation(const SurfaceModel& model, const DivisorClass& l);

struct FujitaReport {
  CertificateReport free_3a;         // K + 3A globally generated
  CertificateReport very_ample_4a;   // K + 4A very ample
  int dimension = 2;
  int free_threshold = 3;            // n + 1
  int very_ample_threshold = 4;      // n + 2
};

FujitaReport fujita_adjoint(const SurfaceModel& model, const DivisorClass& a);

enum class Guarantee { Yes, Unknown };
std::string guarantee_name(Guarantee g);

struct PluricanonicalStatus {
  Guarantee free = Guarantee::Unknown;
  Guarantee embedding_away_from_minus2 = Guarantee::Unknown;
};

// |mK| on a minimal surface of general type with K² = k2 >= 1.
PluricanonicalStatus pluricanonical_status(std::int64_t k2, std::int64_t m);

struct KodairaZeroReport {
  CertificateReport freeness;     // elliptic E with E·L = 1
  CertificateReport very_ample;   // elliptic E with E·L = 2
};

// Requires K = 0 and an even form.
KodairaZeroReport kodaira_zero_obstructions(const SurfaceModel& model, const DivisorClass& l,
                                            std::int64_t coeff_bound);

/// Surjectivity onto length-d subschemes: hypotheses L nef, L² > 4d; the
/// sufficient condition L·C >= 2d is traced and effective D with
/// L·D − d <= D² < L·D/2 are reported as obstructions.
CertificateReport jets_length_d(const SurfaceModel& model, const DivisorClass& l, std::int64_t d,
                                std::int64_t coeff_bound);

struct CurveBundleStatus {
  Guarantee free = Guarantee::Unknown;
  Guarantee very_ample = Guarantee::Unknown;
};

// Degree-d line bundle on a genus-g curve.
CurveBundleStatus curve_bundle_status(std::int64_t g, std::int64_t d);

// 2g + 1 − 2h¹ − Cliff
std::int64_t normal_generation_threshold(std::int64_t g, std::int64_t h1, std::int64_t cliff);

}  // namespace surfcalc
