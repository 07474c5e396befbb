#pragma once

#include "surfcalc/criteria.hpp"
#include "surfcalc/lattice.hpp"
#include "surfcalc/qdivisor.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfcalc {

enum class SeshadriKind { UpperBound, ExactGivenCompleteTable, NoData };
std::string seshadri_kind_name(SeshadriKind k);

/// Minimum of L·C / mult(C) over table candidates meeting the point set.
///
/// `value` and the achieving data come from single table curves only.
/// Bounded combinations are scored too; if one ever scores strictly lower,
/// `reducible_candidate` records it without affecting `value`.
struct SeshadriBound {
  SeshadriKind kind = SeshadriKind::NoData;
  std::optional<Rational> value;
  std::string achieving_curve;
  DivisorClass achieving_class;
  Rational achieving_dot;   // L·C
  Rational achieving_mult;  // mult at the point set
  std::optional<Rational> reducible_candidate_value;
  std::string reducible_candidate;
  std::int64_t coeff_bound = 0;
  std::vector<std::string> notes;

  bool has_data() const { return kind != SeshadriKind::NoData; }
};

// L must be nef on the table (InputError otherwise).
SeshadriBound seshadri_at_point(const SurfaceModel& model, const DivisorClass& l, const std::string& point,
                                std::int64_t coeff_bound);

// Points must be distinct.
SeshadriBound multipoint_seshadri(const SurfaceModel& model, const DivisorClass& l,
                                  const std::vector<std::string>& points, std::int64_t coeff_bound);

// yes iff eps > s+2, or eps = s+2 and L² > (s+2)².
Guarantee jets_from_seshadri(const Rational& eps, const Rational& l2, std::int64_t s);

struct JetSchedule {
  std::int64_t multiplier = 3;  // |K + (s+3)A| generates s-jets
  std::string side_condition = "epsilon(A,x) >= 1";
};

JetSchedule adjoint_jet_schedule(std::int64_t s);

struct DegreeBoundCheck {
  Rational mult_z;  // Σ over points of mult(D)
  Rational degree;  // L·D
  bool holds = false;
  std::string note;
};

// mult_Z(D) <= L·D for effective D; InputError on negative coefficients.
DegreeBoundCheck multipoint_degree_bound(const SurfaceModel& model, const DivisorClass& l,
                                         const std::vector<std::string>& points, const QDivisor& d);

struct MirandaExample {
  SurfaceModel model;
  std::string point = "x";
  DivisorClass l;  // aD + S
  std::string fiber = "D";
  std::string section = "S";
};

/// Blow-up of P² at the d² base points of a pencil of degree-d curves, with
/// a pencil member D having an m-fold point at x, the section S = E₁ and
/// L = aD + S. Requires d >= 3, 2 <= m <= d−1, a >= 2.
MirandaExample miranda_example(std::int64_t d, std::int64_t m, std::int64_t a);

}  // namespace surfcalc
