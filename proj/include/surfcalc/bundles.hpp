#pragma once

#include "surfcalc/lattice.hpp"
#include "surfcalc/report.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace surfcalc {

/// Numerical Chern data of a vector bundle on a surface: rank, c₁ as an
/// integral class and c₂ as an integer.
struct ChernData {
  std::int64_t rank = 2;
  DivisorClass c1;
  Integer c2 = 0;

  ChernData() = default;
  ChernData(std::int64_t r, DivisorClass first, Integer second);
  friend bool operator==(const ChernData&, const ChernData&) = default;
};

// c₁² − 4c₂ of rank-2 data; positive means Bogomolov unstable.
Rational discriminant(const SurfaceModel& model, const ChernData& e);

// E ⊗ N: c₁ + 2N, c₂ + c₁·N + N².
ChernData twist(const SurfaceModel& model, const ChernData& e, const DivisorClass& n);

// Extension 0 → A → E → B ⊗ I_Z → 0: c₁ = A + B, c₂ = A·B + length(Z).
ChernData from_extension(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b,
                         std::int64_t length_z);

// Kernel of V → (degree-d line bundle on C): c₁ − C, c₂ − c₁·C + d.
ChernData elementary_transformation(const SurfaceModel& model, const ChernData& v, const DivisorClass& c,
                                    std::int64_t d);

struct DestabilizerCandidate {
  DivisorClass a;
  Rational length_z;  // c₂ − A·(c₁ − A)
};

enum class StabilityVerdict {
  CandidatesFound,
  StableConsistent,  // discriminant <= 0 and nothing found
  Inconclusive,      // discriminant > 0 but the box was too small
};

struct DestabilizerResult {
  Rational discriminant;
  std::vector<DestabilizerCandidate> candidates;
  StabilityVerdict verdict = StabilityVerdict::StableConsistent;
  std::int64_t coeff_bound = 0;
};

/// Integral classes A = Σ nᵢeᵢ with |nᵢ| <= bound and
///   (2A − c₁)² > 0,  (2A − c₁)·H > 0,  A·(c₁ − A) <= c₂,
/// in lexicographic order. H is a caller-asserted ample class; it must have
/// H² > 0 and be nef on the table.
DestabilizerResult destabilizer_search(const SurfaceModel& model, const ChernData& e, const DivisorClass& ample,
                                       std::int64_t coeff_bound);

struct ReiderChainReport {
  bool refused = false;
  std::string refusal;
  CertificateReport checks;                                 // one trace line per inequality
  std::optional<std::size_t> first_failure;                 // index into checks.trace
  std::optional<std::pair<Rational, Rational>> terminal;    // (L·D, D²) when every inequality holds
  Rational c2 = 1;
};

// Evaluates the chain on the numbers (L², L·D, D²) directly.
ReiderChainReport reider_chain_from_numbers(const Rational& l2, const Rational& ld, const Rational& d2,
                                            std::int64_t c2 = 1);

// Checks L nef on the table with L² >= 5 (c2 = 1) or L² > 4·c2, then runs the chain.
ReiderChainReport reider_chain_verify(const SurfaceModel& model, const DivisorClass& l, const DivisorClass& d,
                                      std::int64_t c2 = 1);

// g − (r+1)(g − d + r)
std::int64_t brill_noether_rho(std::int64_t g, std::int64_t r, std::int64_t d);

// χ(E ⊗ E*) for the rank-(r+1) bundle on a K3 with c₁² = 2g − 2, c₂ = d, computed
// by Riemann–Roch and by 2 − 2ρ; throws InvariantError if they differ.
std::int64_t k3_end_euler(std::int64_t r, std::int64_t d, std::int64_t g);

// (a₁ − 1)·a₂⋯a_{r−1} for sorted degrees, each >= 2.
std::int64_t gonality_bound(std::span<const std::int64_t> degrees);

}  // namespace surfcalc
