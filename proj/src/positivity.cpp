#include "surfcalc/positivity.hpp"

#include "surfcalc/linalg.hpp"

#include <algorithm>
#include <set>

namespace surfcalc {

// ------------------------------------------------------------ vanishing

KvReport kv_applicability(const SurfaceModel& model, const QDivisor& m) {
  KvReport out;
  const DivisorClass cls = class_of(model, m);
  out.big_nef = is_big_nef_on_table(model, cls);
  out.vanishing_applies = out.big_nef.big_and_nef();
  out.adjoint_class = model.canonical + class_of(model, round_up(m));
  out.notes.push_back("normal crossing hypothesis on the fractional part is not needed on a surface");
  if (!out.big_nef.nef.nef) out.notes.push_back("M is not nef on the curve table: vanishing not guaranteed");
  else if (out.big_nef.self_intersection <= 0) out.notes.push_back("M is nef but not big: vanishing not guaranteed");
  return out;
}

// ------------------------------------------------------------ KRS certificates

namespace {

void require_integral_effective(const QDivisor& d) {
  for (const auto& t : d.terms()) {
    if (t.coefficient < 0) throw InputError("divisor coefficient of " + t.component.name + " is negative");
    if (!is_integer(t.coefficient)) throw InputError("divisor coefficient of " + t.component.name + " is not an integer");
  }
}

}  // namespace

KrsCertificate krs_jet_certificate(const SurfaceModel& model, const DivisorClass& l, std::int64_t k,
                                   const QDivisor& d, const std::string& point, std::int64_t s,
                                   bool l_ample_asserted) {
  if (k < 1) throw InputError("k must be positive");
  if (s < 0) throw InputError("s must be non-negative");
  require_integral_effective(d);
  const DivisorClass target = Rational(k) * l;
  if (class_of(model, d) != target)
    throw InputError("class of D is " + class_of(model, d).str() + ", expected k*L = " + target.str());

  KrsCertificate out;
  CertificateReport& r = out.report;
  r.criterion = std::to_string(s) + "-jets-via-divisor";
  const auto bn = is_big_nef_on_table(model, l);
  if (!bn.big_and_nef()) {
    r.check("L^2 > 0", bn.self_intersection, ">", Rational(0));
    if (!bn.nef.nef) r.note("L is not nef on the curve table");
    r.verdict = Verdict::HypothesesFail;
    return out;
  }

  const Rational t = s + 2;
  out.q = mult_at(d, point);
  if (!r.check("q = mult_x(D) > (s+2)k", out.q, ">", t * k)) {
    r.verdict = Verdict::HypothesesFail;
    return out;
  }

  const QTerm* exceeding = nullptr;
  bool boundary = false;
  for (const auto& term : d.terms()) {
    if (term.component.mult_at(point) <= 0) continue;
    const Rational lhs = t * term.coefficient;
    if (lhs > out.q) {
      if (!exceeding || term.coefficient > exceeding->coefficient) exceeding = &term;
    } else if (lhs == out.q) {
      boundary = true;
    }
  }

  if (!exceeding && !boundary) {
    for (const auto& term : d.terms())
      if (term.component.mult_at(point) > 0)
        r.check("(s+2)d_i < q for " + term.component.name, t * term.coefficient, "<", out.q);
    r.verdict = Verdict::CriterionHolds;
    r.note("K+L generates " + std::to_string(s) + "-jets at " + point);
    return out;
  }

  if (!exceeding) {
    for (const auto& term : d.terms())
      if (term.component.mult_at(point) > 0)
        r.check("(s+2)d_i <= q for " + term.component.name, t * term.coefficient, "<=", out.q);
    if (l_ample_asserted) {
      r.verdict = Verdict::CriterionHolds;
      r.note("boundary coefficients accepted under the relaxed rule with L ample");
      r.note("K+L generates " + std::to_string(s) + "-jets at " + point);
    } else {
      r.verdict = Verdict::Inconclusive;
      r.note("boundary coefficient (s+2)d_i = q needs L asserted ample");
    }
    return out;
  }

  KrsBranch br;
  br.component = exceeding->component.name;
  br.d0 = exceeding->coefficient;
  br.threshold = out.q / t;
  r.check("d_0 > q/(s+2) for " + br.component, br.d0, ">", br.threshold);
  std::vector<QTerm> rest;
  for (const auto& term : d.terms())
    if (term.component.name != br.component) rest.push_back({term.coefficient / br.d0, term.component});
  br.rounded_rest = round_down(QDivisor(rest));
  if (s == 0) {
    const DivisorClass d0 = exceeding->component.cls;
    br.chain_bound = 1 + (out.q - 2 * Rational(k)) / br.d0;
    br.restricted_degree = model.lattice.pair(l - d0 - class_of(model, br.rounded_rest), d0);
    const bool chain = r.check("(L-D0-N).D0 >= 1 + (q-2k)/d0", *br.restricted_degree, ">=", *br.chain_bound);
    const bool gt = r.check("1 + (q-2k)/d0 > 1", *br.chain_bound, ">", Rational(1));
    r.verdict = chain && gt ? Verdict::CriterionHolds : Verdict::Inconclusive;
    if (r.verdict == Verdict::CriterionHolds) r.note("K+L is free at " + point + " via restriction to " + br.component);
  } else {
    r.verdict = Verdict::Inconclusive;
    r.note("a component exceeds q/(s+2); branch data reported, no conclusion for s > 0");
  }
  out.branch = std::move(br);
  return out;
}

AlmostIsolatedIndex almost_isolated_index(const QDivisor& d, std::int64_t k, const std::string& point) {
  if (k < 1) throw InputError("k must be positive");
  require_integral_effective(d);
  AlmostIsolatedIndex out;
  if (d.empty()) {
    out.violation = "D = 0";
    return out;
  }
  const Rational q = mult_at(d, point);
  if (q <= 0) {
    out.violation = "D does not pass through " + point;
    return out;
  }
  std::set<std::string> others;
  for (const auto& term : d.terms()) {
    for (const auto& [label, m] : term.component.point_mults)
      if (label != point && m > 0) others.insert(label);
    if (term.component.mult_at(point) > 0 && term.coefficient >= k) {
      out.violation = "coefficient of " + term.component.name + " is " + to_string(term.coefficient) + " >= k";
      return out;
    }
  }
  for (const auto& label : others) {
    const Rational m = mult_at(d, label);
    if (m >= k) {
      out.violation = "mult at " + label + " is " + to_string(m) + " >= k";
      return out;
    }
  }
  out.index_sup = q / k;
  return out;
}

// ------------------------------------------------------------ Zariski

DivisorClass ZariskiDecomposition::negative_class(const SurfaceModel& model) const {
  DivisorClass out(model.rank());
  for (const auto& [name, coeff] : negative) {
    const auto* c = model.find_curve(name);
    if (!c) throw InvariantError("negative part names unknown curve " + name);
    out += coeff * c->cls;
  }
  return out;
}

ZariskiDecomposition zariski_decompose(const SurfaceModel& model, const DivisorClass& d) {
  require_same_rank(d, model.canonical);
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    const bool dup = std::any_of(pool.begin(), pool.end(),
                                 [&](std::size_t j) { return model.curves[j].cls == model.curves[i].cls; });
    if (!dup) pool.push_back(i);
  }

  std::vector<std::size_t> support;
  std::vector<Rational> coeffs;
  DivisorClass p = d;
  for (std::size_t round = 0; round <= pool.size(); ++round) {
    bool grew = false;
    for (std::size_t i : pool) {
      if (std::find(support.begin(), support.end(), i) != support.end()) continue;
      if (model.lattice.pair(p, model.curves[i].cls) < 0) {
        support.push_back(i);
        grew = true;
      }
    }
    if (!grew) break;
    std::sort(support.begin(), support.end());

    const std::size_t n = support.size();
    linalg::Matrix g(n, std::vector<Rational>(n));
    std::vector<Rational> rhs(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b)
        g[a][b] = model.lattice.pair(model.curves[support[a]].cls, model.curves[support[b]].cls);
      rhs[a] = model.lattice.pair(d, model.curves[support[a]].cls);
    }
    if (!linalg::is_negative_definite(g)) {
      std::string names;
      for (std::size_t i : support) names += (names.empty() ? "" : ", ") + model.curves[i].name;
      throw NotPseudoeffectiveError("support {" + names + "} is not negative definite");
    }
    const auto x = linalg::solve(g, rhs);
    if (!x) throw InvariantError("negative definite system has no solution");
    coeffs = *x;
    p = d;
    for (std::size_t a = 0; a < n; ++a) {
      if (coeffs[a] < 0)
        throw NotPseudoeffectiveError("negative coefficient for " + model.curves[support[a]].name);
      p -= coeffs[a] * model.curves[support[a]].cls;
    }
  }

  if (!is_nef_on_table(model, p).nef) throw InvariantError("Zariski iteration ended with a non-nef positive part");
  ZariskiDecomposition out;
  out.positive = p;
  for (std::size_t a = 0; a < support.size(); ++a)
    if (coeffs[a] != 0) out.negative.emplace_back(model.curves[support[a]].name, coeffs[a]);
  return out;
}

// ------------------------------------------------------------ Mumford pullback

void ResolutionData::validate() const {
  const std::size_t k = exceptional_gram.size();
  if (k == 0) throw InputError("resolution has no exceptional curves");
  if (!exceptional_names.empty() && exceptional_names.size() != k)
    throw InputError("exceptional names do not match the Gram matrix size");
  linalg::Matrix g(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (exceptional_gram[i].size() != k) throw InputError("exceptional Gram matrix is not square");
    for (std::size_t j = 0; j < k; ++j) {
      if (exceptional_gram[i][j] != exceptional_gram[j][i]) throw InputError("exceptional Gram matrix is not symmetric");
      g[i][j] = exceptional_gram[i][j];
    }
  }
  if (!linalg::is_negative_definite(g)) throw InputError("exceptional Gram matrix is not negative definite");
  for (const auto& [name, row] : incidence)
    if (row.size() != k) throw InputError("incidence vector of " + name + " has the wrong length");
}

ResolutionData resolution_from_model(const SurfaceModel& model, const std::vector<std::string>& exceptional) {
  ResolutionData res;
  std::vector<const CurveRecord*> ex;
  for (const auto& name : exceptional) {
    const auto* c = model.find_curve(name);
    if (!c) throw InputError("unknown exceptional curve " + name);
    ex.push_back(c);
    res.exceptional_names.push_back(name);
  }
  for (const auto* a : ex) {
    std::vector<std::int64_t> row;
    for (const auto* b : ex) row.push_back(to_int64(model.lattice.pair(a->cls, b->cls)));
    res.exceptional_gram.push_back(std::move(row));
  }
  for (const auto& c : model.curves) {
    if (std::find(exceptional.begin(), exceptional.end(), c.name) != exceptional.end()) continue;
    std::vector<std::int64_t> row;
    for (const auto* e : ex) row.push_back(to_int64(model.lattice.pair(c.cls, e->cls)));
    res.incidence[c.name] = std::move(row);
  }
  res.validate();
  return res;
}

namespace {

const std::vector<std::int64_t>& incidence_of(const ResolutionData& res, const std::string& name) {
  const auto it = res.incidence.find(name);
  if (it == res.incidence.end()) throw InputError("no incidence data for " + name);
  return it->second;
}

}  // namespace

std::vector<Rational> mumford_pullback(const ResolutionData& res, const std::string& divisor) {
  res.validate();
  const auto& inc = incidence_of(res, divisor);
  const std::size_t k = res.exceptional_gram.size();
  linalg::Matrix g(k, std::vector<Rational>(k));
  std::vector<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) g[i][j] = res.exceptional_gram[i][j];
    rhs[i] = -inc[i];
  }
  auto x = linalg::solve(g, rhs);
  if (!x) throw InvariantError("negative definite exceptional system has no solution");
  return *x;
}

Rational mumford_intersect(const ResolutionData& res, const std::string& first, const std::string& second,
                           const Rational& base_intersection) {
  const auto d1 = mumford_pullback(res, first);
  const auto d2 = mumford_pullback(res, second);
  const auto& i1 = incidence_of(res, first);
  const auto& i2 = incidence_of(res, second);
  Rational total = base_intersection;
  const std::size_t k = d1.size();
  for (std::size_t j = 0; j < k; ++j) total += d2[j] * i1[j] + d1[j] * i2[j];
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) total += d1[a] * d2[b] * res.exceptional_gram[a][b];
  return total;
}

// ------------------------------------------------------------ Q-divisor Reider

namespace {

QCheckReport q_threshold_check(const std::string& criterion, const SurfaceModel& model, const QDivisor& m,
                               const Rational& square_floor, const Rational& curve_floor, bool ample_asserted) {
  QCheckReport out;
  CertificateReport& r = out.report;
  r.criterion = criterion;
  const DivisorClass cls = class_of(model, m);
  out.adjoint_class = model.canonical + class_of(model, round_up(m));
  const auto nef = is_nef_on_table(model, cls);
  if (!nef.nef && !ample_asserted) {
    r.check("M.C >= 0 for C = " + model.curves[*nef.violated_curve].name, nef.violation_value, ">=", Rational(0));
    r.verdict = Verdict::HypothesesFail;
    r.note("M is neither nef on the table nor asserted ample");
    return out;
  }
  bool ok = r.check("M^2 > " + to_string(square_floor), model.lattice.pair(cls, cls), ">", square_floor);
  for (const auto& c : model.curves)
    ok = r.check("M." + c.name + " >= " + to_string(curve_floor), model.lattice.pair(cls, c.cls), ">=", curve_floor) && ok;
  if (!ok) r.verdict = Verdict::HypothesesFail;
  else if (model.table_complete_globally()) r.verdict = Verdict::CriterionHolds;
  else {
    r.verdict = Verdict::Inconclusive;
    r.note("inequalities hold on the table, which is not declared complete");
  }
  return out;
}

}  // namespace

QCheckReport qdivisor_generation_check(const SurfaceModel& model, const QDivisor& m, bool ample_asserted) {
  return q_threshold_check("q-global-generation", model, m, Rational(4), Rational(2), ample_asserted);
}

QCheckReport qdivisor_very_ample_check(const SurfaceModel& model, const QDivisor& m, bool ample_asserted) {
  return q_threshold_check("q-very-ampleness", model, m, Rational(18), Rational(3), ample_asserted);
}

CertificateReport normal_surface_check(const Rational& m2, const Rational& min_mc, const Rational& beta1,
                                       const Rational& beta2) {
  if (beta1 <= 0 || beta2 <= 0) throw InputError("beta1 and beta2 must be positive");
  CertificateReport r;
  r.criterion = "normal-surface-generation";
  bool ok = r.check("M^2 > beta2^2", m2, ">", beta2 * beta2);
  ok = r.check("min M.C >= beta1", min_mc, ">=", beta1) && ok;
  ok = r.check("beta2 >= 2", beta2, ">=", Rational(2)) && ok;
  ok = r.check("beta1(1 - 2/beta2) >= 1", beta1 * (1 - 2 / beta2), ">=", Rational(1)) && ok;
  r.verdict = ok ? Verdict::CriterionHolds : Verdict::HypothesesFail;
  return r;
}

std::pair<Rational, Rational> normal_surface_preset() { return {Rational(2), Rational(4)}; }

// ------------------------------------------------------------ effective bounds

CuspBound cusp_bound(std::int64_t d) {
  if (d < 3) throw InputError("cusp_bound needs d >= 3");
  CuspBound out;
  const Rational threshold = Rational(5 * d, 6) - 3;
  out.k_min = to_int64(Rational(floor_of(threshold))) + 1;
  out.bound = (out.k_min + 1) * (out.k_min + 2) / 2;
  return out;
}

Rational MatsusakaReport::rho(std::int64_t m) const {
  const Rational t = m + 3;
  return t * t * a - 2 * t * b;
}

Rational MatsusakaReport::l_dot_b(std::int64_t m) const { return Rational(m + 3) * a - b; }

bool MatsusakaReport::star_condition(std::int64_t m) const {
  const Rational r = rho(m);
  if (r <= 4) return false;
  const Rational lhs = l_dot_b(m) - 1;  // need lhs < √((ρ−4)a)
  if (lhs < 0) return true;
  return lhs * lhs < (r - 4) * a;
}

MatsusakaReport matsusaka_thresholds(const Rational& a, const Rational& b) {
  if (a <= 0) throw InputError("matsusaka_thresholds needs L^2 >= 1");
  MatsusakaReport out;
  out.a = a;
  out.b = b;
  const Rational base = (b + 1) * (b + 1) / (2 * a);
  auto least_above = [](const Rational& x) { return to_int64(Rational(floor_of(x))) + 1; };
  out.m_free = least_above(base - 1);
  out.m_very_ample = least_above(base + 1);
  if (out.m_free < 1) {
    out.notes.push_back("m_free formula gives " + std::to_string(out.m_free) + "; clamped to 1");
    out.m_free = 1;
  }
  if (out.m_very_ample < 1) {
    out.notes.push_back("m_very_ample formula gives " + std::to_string(out.m_very_ample) + "; clamped to 1");
    out.m_very_ample = 1;
  }
  out.notes.push_back("star condition decided by exact squaring; it holds outright when L.B_m < 1");
  if (out.regime_gap()) out.notes.push_back("regime gap: star condition fails at m_free");
  return out;
}

MatsusakaReport matsusaka_for(const SurfaceModel& model, const DivisorClass& l) {
  if (!is_ample_on_table(model, l)) throw InputError("L is not ample on the curve table");
  const Rational a = model.lattice.pair(l, l);
  const Rational b = model.lattice.pair(model.canonical + Rational(4) * l, l);
  return matsusaka_thresholds(a, b);
}

SingularityThresholds singularity_thresholds(std::int64_t s) {
  if (s < 0) throw InputError("s must be non-negative");
  return {Rational((s + 2) * (s + 2) + 1), Rational(s * s + 3 * s + 3)};
}

bool f_s_below(const Rational& x, std::int64_t s, const Rational& c) {
  const Rational t2 = Rational((s + 2) * (s + 2));
  if (x < t2) return false;
  const Rational lhs = x - c;  // f_s(x) < c  ⟺  x − c < √(x(x − t²))
  if (lhs < 0) return true;
  return lhs * lhs < x * (x - t2);
}

SingularityReport singularity_production_check(const SurfaceModel& model, const DivisorClass& l, std::int64_t s,
                                               const std::optional<std::string>& point) {
  SingularityReport out;
  out.thresholds = singularity_thresholds(s);
  CertificateReport& r = out.report;
  r.criterion = "singularity-production";
  const auto nef = is_nef_on_table(model, l);
  if (!nef.nef) {
    r.check("L.C >= 0 for C = " + model.curves[*nef.violated_curve].name, nef.violation_value, ">=", Rational(0));
    r.verdict = Verdict::HypothesesFail;
    return out;
  }
  const Rational l2 = model.lattice.pair(l, l);
  std::optional<Rational> through_min;
  std::optional<Rational> global_min;
  for (const auto& c : model.curves) {
    const Rational v = model.lattice.pair(l, c.cls);
    if (!global_min || v < *global_min) global_min = v;
    if (point && c.mult_at(*point) <= 0) continue;
    if (!through_min || v < *through_min) through_min = v;
  }
  bool ok = r.check("L^2 >= (s+2)^2 + 1", l2, ">=", out.thresholds.square);
  if (through_min) ok = r.check("min L.C >= s^2 + 3s + 3", *through_min, ">=", out.thresholds.curve) && ok;
  else r.note("no table curve through the point; curve condition vacuous on the table");
  out.f_s_certified = f_s_below(l2, s, out.thresholds.curve);
  r.note(std::string("f_s(L^2) < s^2 + 3s + 3: ") + (out.f_s_certified ? "certified" : "not certified"));
  out.very_ample_preset = l2 >= 10 && (!global_min || *global_min >= 7);
  if (s == 0) {
    out.alternate_hypotheses = l2 >= 5 && (!global_min || *global_min >= 5);
    out.nonvanishing_section = l2 >= 5 && (!through_min || *through_min >= 3);
    if (*out.nonvanishing_section)
      r.note("K+L has a section not vanishing at " + (point ? *point : std::string("the point")));
  }
  const bool complete = point ? model.table_complete_at(*point) : model.table_complete_globally();
  if (!ok) r.verdict = Verdict::HypothesesFail;
  else if (complete) r.verdict = Verdict::CriterionHolds;
  else {
    r.verdict = Verdict::Inconclusive;
    r.note("inequalities hold on the table, which is not declared complete");
  }
  return out;
}

std::vector<bool> moving_part_inequality_check(const Rational& rho, const std::vector<MovingPartSample>& samples,
                                               const Rational& slack) {
  if (rho <= 0) throw InputError("rho must be positive");
  if (slack < 0) throw InputError("slack must be non-negative");
  std::vector<bool> out;
  out.reserve(samples.size());
  for (const auto& smp : samples) {
    const Rational k = smp.k;
    out.push_back(smp.mk2 >= rho * k * k - slack * k);
  }
  return out;
}

std::optional<std::int64_t> divisor_production_k(const SurfaceModel& model, const DivisorClass& l, std::int64_t s,
                                                 std::int64_t k_limit) {
  if (s < 0) throw InputError("s must be non-negative");
  if (!l.is_integral()) throw InputError("L must be integral");
  for (std::int64_t k = 1; k <= k_limit; ++k) {
    const Rational chi = euler_characteristic(model, Rational(k) * l);
    const Rational n = (s + 2) * k + 2;
    if (chi - n * (n - 1) / 2 > 0) return k;
  }
  return std::nullopt;
}

}  // namespace surfcalc
