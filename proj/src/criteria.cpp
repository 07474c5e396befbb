#include "surfcalc/criteria.hpp"

#include "surfcalc/errors.hpp"

#include <algorithm>

namespace surfcalc {

const std::vector<Signature>& freeness_signatures() {
  static const std::vector<Signature> table{{0, -1}, {1, 0}};
  return table;
}

const std::vector<Signature>& very_ample_signatures() {
  static const std::vector<Signature> table{{0, -1}, {0, -2}, {1, 0}, {1, -1}, {2, 0}};
  return table;
}

namespace {

bool in_table(const std::vector<Signature>& table, const Rational& ld, const Rational& d2) {
  return std::any_of(table.begin(), table.end(), [&](const Signature& s) { return ld == s.first && d2 == s.second; });
}

// L nef on the table; records the first violation in the trace.
bool check_nef(CertificateReport& report, const SurfaceModel& model, const DivisorClass& l) {
  const auto nef = is_nef_on_table(model, l);
  if (!nef.nef) {
    report.check("L.C >= 0 for C = " + model.curves[*nef.violated_curve].name, nef.violation_value, ">=",
                 Rational(0));
    report.verdict = Verdict::HypothesesFail;
    report.note("L is not nef on the curve table");
  }
  return nef.nef;
}

// A search with D·L <= max_ld over L-positive curves is exhaustive once the
// bound covers max_ld; L-trivial curves could enter with any multiplicity.
bool search_exhaustive(const SurfaceModel& model, const DivisorClass& l, const Rational& max_ld,
                       std::int64_t bound) {
  for (const auto& c : model.curves) {
    const Rational lc = model.lattice.pair(l, c.cls);
    if (lc <= 0) return false;
    if (Rational(bound) * lc <= max_ld) return false;
  }
  return true;
}

void conclude_search(CertificateReport& report, bool complete, bool exhaustive, const std::string& scope) {
  if (!report.witnesses.empty()) {
    report.verdict = Verdict::ObstructionFound;
    return;
  }
  if (complete && exhaustive) {
    report.verdict = Verdict::CriterionHolds;
    return;
  }
  report.verdict = Verdict::Inconclusive;
  if (!complete) report.note("curve table is not declared complete " + scope);
  if (!exhaustive) report.note("search box does not cover every class with small L-degree (L-trivial curve or bound too small)");
}

CertificateReport signature_search(const std::string& criterion, const SurfaceModel& model, const DivisorClass& l,
                                   int threshold, const std::vector<Signature>& table,
                                   const std::optional<std::string>& point, std::int64_t bound) {
  CertificateReport report;
  report.criterion = criterion;
  report.coeff_bound = bound;
  if (!check_nef(report, model, l)) return report;
  const Rational l2 = model.lattice.pair(l, l);
  if (!report.check("L^2 >= " + std::to_string(threshold), l2, ">=", Rational(threshold))) {
    report.verdict = Verdict::HypothesesFail;
    return report;
  }
  int max_ld = 0;
  for (const auto& s : table) max_ld = std::max(max_ld, s.first);
  const auto found = enumerate_effective_classes(model, {Constraint::dot(l, Relation::LessEq, Rational(max_ld))}, bound);
  if (found.empty_table) report.note("curve table is empty");
  for (const auto& e : found.classes) {
    if (point && e.mult_at(model, *point) <= 0) continue;
    const Rational ld = model.lattice.pair(e.cls, l);
    const Rational d2 = model.lattice.pair(e.cls, e.cls);
    if (!in_table(table, ld, d2)) continue;
    report.witnesses.push_back({e.cls, e.describe(model), ld, d2});
  }
  const bool complete = point ? model.table_complete_at(*point) : model.table_complete_globally();
  conclude_search(report, complete, search_exhaustive(model, l, Rational(max_ld), bound),
                  point ? "at " + *point : "globally");
  return report;
}

// min over the table of L·C, traced against `floor`.
bool check_curve_minimum(CertificateReport& report, const SurfaceModel& model, const DivisorClass& l,
                         const Rational& floor) {
  if (model.curves.empty()) {
    report.note("curve table is empty; curve-degree condition is vacuous on the table");
    return true;
  }
  std::size_t arg = 0;
  Rational best = model.lattice.pair(l, model.curves[0].cls);
  for (std::size_t i = 1; i < model.curves.size(); ++i) {
    const Rational v = model.lattice.pair(l, model.curves[i].cls);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  return report.check("min L.C >= " + to_string(floor) + " (attained by " + model.curves[arg].name + ")", best,
                      ">=", floor);
}

CertificateReport threshold_check(const std::string& criterion, const SurfaceModel& model, const DivisorClass& l,
                                  const Rational& square_floor, const Rational& curve_floor) {
  CertificateReport report;
  report.criterion = criterion;
  const bool square_ok = report.check("L^2 >= " + to_string(square_floor), model.lattice.pair(l, l), ">=", square_floor);
  const bool curves_ok = check_curve_minimum(report, model, l, curve_floor);
  if (!square_ok || !curves_ok) report.verdict = Verdict::HypothesesFail;
  else if (model.table_complete_globally()) report.verdict = Verdict::CriterionHolds;
  else {
    report.verdict = Verdict::Inconclusive;
    report.note("inequalities hold on the table, which is not declared complete");
  }
  return report;
}

}  // namespace

CertificateReport reider_freeness(const SurfaceModel& model, const DivisorClass& l,
                                  const std::optional<std::string>& point, std::int64_t coeff_bound) {
  return signature_search("reider-freeness", model, l, 5, freeness_signatures(), point, coeff_bound);
}

CertificateReport reider_very_ample(const SurfaceModel& model, const DivisorClass& l, std::int64_t coeff_bound,
                                    const std::optional<std::string>& point) {
  auto report = signature_search("reider-very-ample", model, l, 10, very_ample_signatures(), point, coeff_bound);
  report.note("point pairs are distinct labelled points; infinitely near pairs are not modelled");
  return report;
}

GenerationReport numerical_global_generation(const SurfaceModel& model, const DivisorClass& l) {
  return GenerationReport{threshold_check("global-generation", model, l, Rational(5), Rational(2)),
                          threshold_check("very-ampleness", model, l, Rational(10), Rational(3))};
}

FujitaReport fujita_adjoint(const SurfaceModel& model, const DivisorClass& a) {
  FujitaReport out;
  if (!is_ample_on_table(model, a)) {
    for (auto* r : {&out.free_3a, &out.very_ample_4a}) {
      r->criterion = r == &out.free_3a ? "fujita-free-3A" : "fujita-very-ample-4A";
      r->check("A^2 > 0", model.lattice.pair(a, a), ">", Rational(0));
      r->verdict = Verdict::HypothesesFail;
      r->note("A is not ample on the curve table");
    }
    return out;
  }
  out.free_3a = threshold_check("fujita-free-3A", model, Rational(3) * a, Rational(5), Rational(2));
  out.very_ample_4a = threshold_check("fujita-very-ample-4A", model, Rational(4) * a, Rational(10), Rational(3));
  return out;
}

std::string guarantee_name(Guarantee g) { return g == Guarantee::Yes ? "yes" : "unknown"; }

PluricanonicalStatus pluricanonical_status(std::int64_t k2, std::int64_t m) {
  if (k2 < 1) throw InputError("pluricanonical_status needs K^2 >= 1");
  if (m < 1) throw InputError("pluricanonical_status needs m >= 1");
  PluricanonicalStatus s;
  if (m >= 4 || (m >= 3 && k2 >= 2)) s.free = Guarantee::Yes;
  if (m >= 5 || (m >= 4 && k2 >= 2) || (m >= 3 && k2 >= 3)) s.embedding_away_from_minus2 = Guarantee::Yes;
  return s;
}

KodairaZeroReport kodaira_zero_obstructions(const SurfaceModel& model, const DivisorClass& l,
                                            std::int64_t coeff_bound) {
  if (!model.canonical.is_zero()) throw InputError("kodaira_zero_obstructions needs K = 0");
  if (!model.lattice.is_even()) throw InputError("kodaira_zero_obstructions needs an even intersection form");
  auto search = [&](const std::string& name, int threshold, int degree) {
    CertificateReport report;
    report.criterion = name;
    report.coeff_bound = coeff_bound;
    if (!check_nef(report, model, l)) return report;
    if (!report.check("L^2 >= " + std::to_string(threshold), model.lattice.pair(l, l), ">=", Rational(threshold))) {
      report.verdict = Verdict::HypothesesFail;
      return report;
    }
    // With K = 0, p_a(E) = 1 exactly when E² = 0.
    const auto found = enumerate_effective_classes(
        model, {Constraint::dot(l, Relation::Equal, Rational(degree)), Constraint::square(Relation::Equal, Rational(0))},
        coeff_bound);
    for (const auto& e : found.classes)
      report.witnesses.push_back({e.cls, e.describe(model), Rational(degree), Rational(0)});
    conclude_search(report, model.table_complete_globally(),
                    search_exhaustive(model, l, Rational(degree), coeff_bound), "globally");
    return report;
  };
  return KodairaZeroReport{search("kodaira-zero-freeness", 5, 1), search("kodaira-zero-very-ample", 10, 2)};
}

CertificateReport jets_length_d(const SurfaceModel& model, const DivisorClass& l, std::int64_t d,
                                std::int64_t coeff_bound) {
  if (d < 1) throw InputError("jets_length_d needs d >= 1");
  CertificateReport report;
  report.criterion = "length-" + std::to_string(d) + "-jets";
  report.coeff_bound = coeff_bound;
  if (!check_nef(report, model, l)) return report;
  if (!report.check("L^2 > 4d", model.lattice.pair(l, l), ">", Rational(4 * d))) {
    report.verdict = Verdict::HypothesesFail;
    return report;
  }
  check_curve_minimum(report, model, l, Rational(2 * d));
  // L·D − d <= D² < L·D/2 forces L·D < 2d.
  const auto found = enumerate_effective_classes(model, {Constraint::dot(l, Relation::Less, Rational(2 * d))},
                                                 coeff_bound);
  for (const auto& e : found.classes) {
    const Rational ld = model.lattice.pair(e.cls, l);
    const Rational d2 = model.lattice.pair(e.cls, e.cls);
    if (ld - d <= d2 && 2 * d2 < ld) report.witnesses.push_back({e.cls, e.describe(model), ld, d2});
  }
  conclude_search(report, model.table_complete_globally(),
                  search_exhaustive(model, l, Rational(2 * d - 1), coeff_bound), "globally");
  return report;
}

CurveBundleStatus curve_bundle_status(std::int64_t g, std::int64_t d) {
  if (g < 0) throw InputError("curve_bundle_status needs g >= 0");
  CurveBundleStatus s;
  if (d >= 2 * g) s.free = Guarantee::Yes;
  if (d >= 2 * g + 1) s.very_ample = Guarantee::Yes;
  return s;
}

std::int64_t normal_generation_threshold(std::int64_t g, std::int64_t h1, std::int64_t cliff) {
  if (g < 0 || h1 < 0 || cliff < 0) throw InputError("normal_generation_threshold needs non-negative inputs");
  return 2 * g + 1 - 2 * h1 - cliff;
}

}  // namespace surfcalc
