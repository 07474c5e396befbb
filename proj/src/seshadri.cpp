#include "surfcalc/seshadri.hpp"

#include "surfcalc/errors.hpp"

#include <algorithm>
#include <set>

namespace surfcalc {

std::string seshadri_kind_name(SeshadriKind k) {
  switch (k) {
    case SeshadriKind::UpperBound: return "upper-bound";
    case SeshadriKind::ExactGivenCompleteTable: return "exact-given-complete-table";
    case SeshadriKind::NoData: return "no-data";
  }
  throw InvariantError("unknown SeshadriKind");
}

namespace {

std::int64_t total_mult(const CurveRecord& c, const std::vector<std::string>& points) {
  std::int64_t m = 0;
  for (const auto& p : points) m += c.mult_at(p);
  return m;
}

std::int64_t total_mult(const EffectiveClass& e, const SurfaceModel& model, const std::vector<std::string>& points) {
  std::int64_t m = 0;
  for (const auto& p : points) m += e.mult_at(model, p);
  return m;
}

SeshadriBound scan(const SurfaceModel& model, const DivisorClass& l, const std::vector<std::string>& points,
                   std::int64_t coeff_bound) {
  if (points.empty()) throw InputError("at least one point is required");
  if (std::set<std::string>(points.begin(), points.end()).size() != points.size())
    throw InputError("points must be distinct");
  const auto nef = is_nef_on_table(model, l);
  if (!nef.nef) throw InputError("L is not nef on the table (fails on " + model.curves[*nef.violated_curve].name + ")");

  SeshadriBound out;
  out.coeff_bound = coeff_bound;
  for (const auto& c : model.curves) {
    const std::int64_t m = total_mult(c, points);
    if (m <= 0) continue;
    const Rational dot = model.lattice.pair(l, c.cls);
    const Rational ratio = dot / m;
    const bool better = !out.value || ratio < *out.value || (ratio == *out.value && c.cls < out.achieving_class);
    if (better) {
      out.value = ratio;
      out.achieving_curve = c.name;
      out.achieving_class = c.cls;
      out.achieving_dot = dot;
      out.achieving_mult = m;
    }
  }
  if (!out.value) {
    out.notes.push_back("no table curve passes through the point set");
    return out;
  }

  for (const auto& e : enumerate_effective_classes(model, {}, coeff_bound).classes) {
    if (e.single_curve(model)) continue;
    const std::int64_t m = total_mult(e, model, points);
    if (m <= 0) continue;
    const Rational ratio = model.lattice.pair(l, e.cls) / m;
    if (ratio < *out.value && (!out.reducible_candidate_value || ratio < *out.reducible_candidate_value)) {
      out.reducible_candidate_value = ratio;
      out.reducible_candidate = e.describe(model);
    }
  }
  if (out.reducible_candidate_value)
    out.notes.push_back("reducible-candidate " + out.reducible_candidate + " scores lower; not certified");

  const bool complete = std::all_of(points.begin(), points.end(),
                                    [&](const std::string& p) { return model.table_complete_at(p); });
  out.kind = complete ? SeshadriKind::ExactGivenCompleteTable : SeshadriKind::UpperBound;
  return out;
}

}  // namespace

SeshadriBound seshadri_at_point(const SurfaceModel& model, const DivisorClass& l, const std::string& point,
                                std::int64_t coeff_bound) {
  return scan(model, l, {point}, coeff_bound);
}

SeshadriBound multipoint_seshadri(const SurfaceModel& model, const DivisorClass& l,
                                  const std::vector<std::string>& points, std::int64_t coeff_bound) {
  auto out = scan(model, l, points, coeff_bound);
  if (model.lattice.pair(l, l) > static_cast<std::int64_t>(points.size()))
    out.notes.push_back("L nef with L^2 > r: epsilon(L,Z) >= 1 for r points in general position");
  return out;
}

Guarantee jets_from_seshadri(const Rational& eps, const Rational& l2, std::int64_t s) {
  if (eps < 0) throw InputError("Seshadri constant must be non-negative");
  if (s < 0) throw InputError("jet order must be non-negative");
  const Rational t = s + 2;
  if (eps > t || (eps == t && l2 > t * t)) return Guarantee::Yes;
  return Guarantee::Unknown;
}

JetSchedule adjoint_jet_schedule(std::int64_t s) {
  if (s < 0) throw InputError("jet order must be non-negative");
  JetSchedule j;
  j.multiplier = s + 3;
  return j;
}

DegreeBoundCheck multipoint_degree_bound(const SurfaceModel& model, const DivisorClass& l,
                                         const std::vector<std::string>& points, const QDivisor& d) {
  if (!d.is_effective()) throw InputError("divisor must have non-negative coefficients");
  DegreeBoundCheck out;
  out.mult_z = 0;
  for (const auto& p : points) out.mult_z += mult_at(d, p);
  out.degree = model.lattice.pair(l, class_of(model, d));
  out.holds = out.mult_z <= out.degree;
  if (!out.holds) out.note = "mult_Z(D) exceeds L.D: the points cannot be in general position";
  if (model.lattice.pair(l, l) <= static_cast<std::int64_t>(points.size()))
    out.note += std::string(out.note.empty() ? "" : "; ") + "L^2 > r is not satisfied";
  return out;
}

MirandaExample miranda_example(std::int64_t d, std::int64_t m, std::int64_t a) {
  if (d < 3) throw InputError("miranda_example needs d >= 3");
  if (m < 2 || m > d - 1) throw InputError("miranda_example needs 2 <= m <= d-1");
  if (a < 2) throw InputError("miranda_example needs a >= 2");
  const std::size_t rank = 1 + static_cast<std::size_t>(d * d);

  std::vector<std::vector<std::int64_t>> gram(rank, std::vector<std::int64_t>(rank, 0));
  gram[0][0] = 1;
  for (std::size_t i = 1; i < rank; ++i) gram[i][i] = -1;

  MirandaExample ex;
  SurfaceModel& s = ex.model;
  s.name = "miranda_" + std::to_string(d) + "_" + std::to_string(m) + "_" + std::to_string(a);
  s.lattice = IntersectionLattice(std::move(gram));
  s.canonical = DivisorClass(rank);
  s.canonical[0] = -3;
  for (std::size_t i = 1; i < rank; ++i) s.canonical[i] = 1;
  s.chi_O = 1;

  CurveRecord fiber;
  fiber.name = ex.fiber;
  fiber.cls = DivisorClass(rank);
  fiber.cls[0] = d;
  for (std::size_t i = 1; i < rank; ++i) fiber.cls[i] = -1;
  fiber.point_mults[ex.point] = m;
  fiber.genus = (d - 1) * (d - 2) / 2;

  CurveRecord section;
  section.name = ex.section;
  section.cls = DivisorClass::basis(rank, 1);
  section.genus = 0;

  ex.l = Rational(a) * fiber.cls + section.cls;
  s.curves = {fiber, section};
  return ex;
}

}  // namespace surfcalc
