#pragma once

#include "surfcalc/lattice.hpp"

#include <string>

namespace surfcalc {

/// A surface blown up at one labelled point.
///
/// The result lattice appends the exceptional class E as the last basis
/// vector: gram is block diagonal with E² = −1, K_Y = f*K_X + E and
/// χ(O_Y) = χ(O_X). Every base curve is replaced by its proper transform
/// f*C − mE (m = mult at the point) and E is added to the table.
struct BlowupModel {
  SurfaceModel base;
  std::string point;
  SurfaceModel result;
  std::size_t exceptional_index = 0;

  DivisorClass exceptional() const;
  std::string exceptional_name() const { return "E_" + point; }
};

BlowupModel blow_up(const SurfaceModel& model, const std::string& point);

DivisorClass pullback(const BlowupModel& bm, const DivisorClass& d);
DivisorClass pushforward(const BlowupModel& bm, const DivisorClass& d);

struct JetTwist {
  DivisorClass cls;  // f*L − (r+1)E
  // Set for r = 0, where the ideal-power identity is not asserted.
  bool zero_order_convention = false;
};

JetTwist jet_twist(const BlowupModel& bm, const DivisorClass& l, std::int64_t r);

// Table-relative nefness of f*L − εE on the blow-up.
NefVerdict seshadri_twist_nef_check(const BlowupModel& bm, const DivisorClass& l, const Rational& epsilon);

}  // namespace surfcalc
