#include "surfcalc/blowup.hpp"

#include "surfcalc/errors.hpp"

namespace surfcalc {

DivisorClass BlowupModel::exceptional() const {
  return DivisorClass::basis(result.rank(), exceptional_index);
}

namespace {

DivisorClass extend(const DivisorClass& d, const Rational& e_coeff) {
  std::vector<Rational> coeffs(d.coeffs().begin(), d.coeffs().end());
  coeffs.push_back(e_coeff);
  return DivisorClass(std::move(coeffs));
}

}  // namespace

BlowupModel blow_up(const SurfaceModel& model, const std::string& point) {
  require_valid(model);
  if (point.empty()) throw InputError("blow-up point label must be non-empty");
  BlowupModel bm;
  bm.base = model;
  bm.point = point;
  const std::size_t n = model.rank();
  bm.exceptional_index = n;

  std::vector<std::vector<std::int64_t>> gram = model.lattice.gram();
  for (auto& row : gram) row.push_back(0);
  gram.emplace_back(n + 1, 0);
  gram[n][n] = -1;

  SurfaceModel& out = bm.result;
  out.name = model.name + "_bl_" + point;
  out.lattice = IntersectionLattice(std::move(gram));
  out.canonical = extend(model.canonical, Rational(1));
  out.chi_O = model.chi_O;

  const std::string e_name = bm.exceptional_name();
  for (const auto& c : model.curves) {
    if (c.name == e_name) throw InputError("curve name '" + e_name + "' already used in " + model.name);
    const std::int64_t m = c.mult_at(point);
    CurveRecord t;
    t.name = c.name;
    t.cls = extend(c.cls, Rational(-m));
    t.point_mults = c.point_mults;
    t.point_mults.erase(point);
    t.ordinary = c.ordinary;
    if (c.genus) {
      if (m == 0) t.genus = c.genus;
      else if (c.ordinary) t.genus = *c.genus - m * (m - 1) / 2;
    }
    out.curves.push_back(std::move(t));
  }
  CurveRecord e;
  e.name = e_name;
  e.cls = DivisorClass::basis(n + 1, n);
  e.genus = 0;
  out.curves.push_back(std::move(e));

  // Completeness does not survive at the blown-up point or globally.
  for (const auto& p : model.complete_through)
    if (p != point && p != kEverywhere) out.complete_through.push_back(p);
  return bm;
}

DivisorClass pullback(const BlowupModel& bm, const DivisorClass& d) {
  if (d.rank() != bm.base.rank()) throw InputError("pullback: class is not on the base surface");
  return extend(d, Rational(0));
}

DivisorClass pushforward(const BlowupModel& bm, const DivisorClass& d) {
  if (d.rank() != bm.result.rank()) throw InputError("pushforward: class is not on the blown-up surface");
  std::vector<Rational> coeffs(d.coeffs().begin(), d.coeffs().end());
  coeffs.erase(coeffs.begin() + static_cast<std::ptrdiff_t>(bm.exceptional_index));
  return DivisorClass(std::move(coeffs));
}

JetTwist jet_twist(const BlowupModel& bm, const DivisorClass& l, std::int64_t r) {
  if (r < 0) throw InputError("jet_twist needs r >= 0");
  JetTwist out;
  out.cls = pullback(bm, l) - Rational(r + 1) * bm.exceptional();
  out.zero_order_convention = r == 0;
  return out;
}

NefVerdict seshadri_twist_nef_check(const BlowupModel& bm, const DivisorClass& l, const Rational& epsilon) {
  if (epsilon < 0) throw InputError("Seshadri twist needs epsilon >= 0");
  return is_nef_on_table(bm.result, pullback(bm, l) - epsilon * bm.exceptional());
}

}  // namespace surfcalc
