#include "surfcalc/lattice.hpp"

#include "surfcalc/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace surfcalc {

// ---------------------------------------------------------------- lattice

IntersectionLattice::IntersectionLattice(std::vector<std::vector<std::int64_t>> gram)
    : gram_(std::move(gram)) {}

bool IntersectionLattice::is_square() const {
  if (gram_.empty()) return false;
  return std::all_of(gram_.begin(), gram_.end(),
                     [&](const auto& row) { return row.size() == gram_.size(); });
}

bool IntersectionLattice::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < gram_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) return false;
  return true;
}

bool IntersectionLattice::is_even() const {
  for (std::size_t i = 0; i < gram_.size(); ++i)
    if (gram_[i][i] % 2 != 0) return false;
  return true;
}

Rational IntersectionLattice::pair(const DivisorClass& a, const DivisorClass& b) const {
  if (a.rank() != rank() || b.rank() != rank())
    throw InputError("class of dimension " + std::to_string(a.rank() != rank() ? a.rank() : b.rank()) +
                     " does not belong to a rank-" + std::to_string(rank()) + " lattice");
  Rational total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < rank(); ++j)
      if (gram_[i][j] != 0) row += gram_[i][j] * b[j];
    total += a[i] * row;
  }
  return total;
}

linalg::Matrix IntersectionLattice::as_rational() const {
  linalg::Matrix m(rank(), std::vector<Rational>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m[i][j] = gram_[i][j];
  return m;
}

std::int64_t CurveRecord::mult_at(const std::string& point) const {
  const auto it = point_mults.find(point);
  return it == point_mults.end() ? 0 : it->second;
}

const CurveRecord* SurfaceModel::find_curve(const std::string& curve_name) const {
  for (const auto& c : curves)
    if (c.name == curve_name) return &c;
  return nullptr;
}

bool SurfaceModel::table_complete_at(const std::string& point) const {
  return std::any_of(complete_through.begin(), complete_through.end(),
                     [&](const std::string& p) { return p == point || p == kEverywhere; });
}

bool SurfaceModel::table_complete_globally() const {
  return std::find(complete_through.begin(), complete_through.end(), kEverywhere) !=
         complete_through.end();
}

// ---------------------------------------------------------------- validation

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

bool ValidationReport::structurally_ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.passed || !c.structural; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

ValidationCheck structural_check(std::string name, bool passed, std::string detail) {
  ValidationCheck c;
  c.name = std::move(name);
  c.passed = passed;
  c.structural = true;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

ValidationReport validate_surface(const SurfaceModel& model) {
  ValidationReport report;
  const auto& lat = model.lattice;
  const std::size_t n = lat.rank();

  report.checks.push_back(structural_check("square", lat.is_square(),
                                           lat.is_square() ? "" : "gram is empty or not square"));
  if (!lat.is_square()) return report;
  report.checks.push_back(
      structural_check("symmetric", lat.is_symmetric(), lat.is_symmetric() ? "" : "gram is not symmetric"));
  const bool canon_ok = model.canonical.rank() == n && model.canonical.is_integral();
  report.checks.push_back(structural_check(
      "canonical-shape", canon_ok,
      canon_ok ? "" : "canonical class must be an integral vector of length " + std::to_string(n)));

  {
    std::set<std::string> names;
    std::string problem;
    for (const auto& c : model.curves) {
      if (!names.insert(c.name).second) problem = "duplicate curve name '" + c.name + "'";
      else if (c.cls.rank() != n || !c.cls.is_integral())
        problem = "curve '" + c.name + "' class must be integral of length " + std::to_string(n);
      else
        for (const auto& [pt, m] : c.point_mults)
          if (m < 0) problem = "curve '" + c.name + "' has negative multiplicity at " + pt;
      if (!problem.empty()) break;
    }
    report.checks.push_back(structural_check("curve-shape", problem.empty(), problem));
  }
  if (!report.structurally_ok()) return report;

  // Signature (1, n−1), decided by exact congruence diagonalization.
  {
    const auto diag = linalg::diagonalize_symmetric(lat.as_rational());
    ValidationCheck c;
    c.name = "signature";
    const int pos = diag.positives(), neg = diag.negatives(), zero = diag.zeros();
    c.passed = pos == 1 && neg == static_cast<int>(n) - 1;
    std::ostringstream detail;
    detail << "inertia (+" << pos << ", -" << neg << ", 0:" << zero << ")";
    if (!c.passed) {
      std::size_t idx = 0;
      if (zero > 0) {
        while (diag.diagonal[idx] != 0) ++idx;
        detail << "; degenerate direction";
      } else if (pos > 1) {
        // second positive direction: should have been negative
        int seen = 0;
        for (idx = 0; idx < n; ++idx)
          if (diag.diagonal[idx] > 0 && ++seen == 2) break;
        detail << "; second positive direction";
      } else {
        idx = 0;
        detail << "; no positive direction";
      }
      c.witness = diag.basis[idx];
      c.witness_value = lat.pair(diag.basis[idx], diag.basis[idx]);
    }
    c.detail = detail.str();
    report.checks.push_back(std::move(c));
  }

  // Adjunction parity: e_i² ≡ e_i·K (mod 2) for every basis class.
  {
    ValidationCheck c;
    c.name = "parity";
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = DivisorClass::basis(n, i);
      const Rational sum = lat.pair(e, e) + lat.pair(e, model.canonical);
      if (to_int64(sum) % 2 != 0) {
        c.passed = false;
        c.witness = e;
        c.witness_value = sum;
        c.detail = "basis class " + std::to_string(i) + ": e^2 + e.K is odd";
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  // Curve genus data consistent with adjunction.
  {
    ValidationCheck c;
    c.name = "curve-genus";
    for (const auto& curve : model.curves) {
      const Rational pa = Rational(1) + (lat.pair(curve.cls, curve.cls) + lat.pair(curve.cls, model.canonical)) / 2;
      if (curve.genus && (Rational(*curve.genus) != pa || *curve.genus < 0)) {
        c.passed = false;
        c.witness = curve.cls;
        c.witness_value = pa;
        c.detail = "curve '" + curve.name + "' declares genus " + std::to_string(*curve.genus) +
                   " but adjunction gives " + to_string(pa);
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

void require_valid(const SurfaceModel& model) {
  const auto report = validate_surface(model);
  for (const auto& c : report.checks)
    if (!c.passed) throw InputError("surface '" + model.name + "' fails " + c.name + ": " + c.detail);
}

// ---------------------------------------------------------------- arithmetic

Rational intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b) {
  return model.lattice.pair(a, b);
}

Rational self_intersection(const SurfaceModel& model, const DivisorClass& a) {
  return model.lattice.pair(a, a);
}

Rational euler_characteristic(const SurfaceModel& model, const DivisorClass& d) {
  if (!d.is_integral()) throw InputError("euler_characteristic needs an integral class, got " + d.str());
  const Rational chi = Rational(model.chi_O) + model.lattice.pair(d, d - model.canonical) / 2;
  if (!is_integer(chi))
    throw InvariantError("Riemann-Roch produced non-integer " + to_string(chi) +
                         "; canonical class is not characteristic");
  return chi;
}

Rational arithmetic_genus(const SurfaceModel& model, const DivisorClass& c) {
  return Rational(1) + (model.lattice.pair(c, c) + model.lattice.pair(c, model.canonical)) / 2;
}

NefVerdict is_nef_on_table(const SurfaceModel& model, const DivisorClass& d) {
  NefVerdict v;
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    const Rational dc = model.lattice.pair(d, model.curves[i].cls);
    if (dc < 0) {
      v.nef = false;
      v.violated_curve = i;
      v.violation_value = dc;
      break;
    }
  }
  v.certified = v.nef && model.table_complete_globally();
  return v;
}

BigNefVerdict is_big_nef_on_table(const SurfaceModel& model, const DivisorClass& d) {
  return BigNefVerdict{is_nef_on_table(model, d), model.lattice.pair(d, d)};
}

bool is_ample_on_table(const SurfaceModel& model, const DivisorClass& a) {
  if (model.lattice.pair(a, a) <= 0) return false;
  return std::all_of(model.curves.begin(), model.curves.end(),
                     [&](const CurveRecord& c) { return model.lattice.pair(a, c.cls) > 0; });
}

HodgeIndexResult hodge_index_check(const SurfaceModel& model, const DivisorClass& l,
                                   const DivisorClass& d) {
  const Rational l2 = model.lattice.pair(l, l);
  if (l2 <= 0) throw InputError("hodge_index_check requires L^2 > 0, got " + to_string(l2));
  const Rational ld = model.lattice.pair(l, d);
  HodgeIndexResult r;
  r.lhs = l2 * model.lattice.pair(d, d);
  r.rhs = ld * ld;
  r.gap = r.rhs - r.lhs;
  return r;
}

// ---------------------------------------------------------------- enumeration

bool compare(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Equal: return lhs == rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
  }
  return false;
}

std::string relation_symbol(Relation rel) {
  switch (rel) {
    case Relation::Less: return "<";
    case Relation::LessEq: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEq: return ">=";
    case Relation::Greater: return ">";
  }
  return "?";
}

Constraint Constraint::dot(const DivisorClass& x, Relation rel, Rational rhs) {
  Constraint c;
  c.linear.push_back({Rational(1), x});
  c.relation = rel;
  c.rhs = std::move(rhs);
  return c;
}

Constraint Constraint::square(Relation rel, Rational rhs) {
  Constraint c;
  c.square_coefficient = 1;
  c.relation = rel;
  c.rhs = std::move(rhs);
  return c;
}

Rational Constraint::evaluate(const SurfaceModel& model, const DivisorClass& d) const {
  Rational v = 0;
  for (const auto& t : linear) v += t.coefficient * model.lattice.pair(d, t.against);
  if (square_coefficient != 0) v += square_coefficient * model.lattice.pair(d, d);
  return v;
}

bool Constraint::satisfied(const SurfaceModel& model, const DivisorClass& d) const {
  return compare(evaluate(model, d), relation, rhs);
}

std::int64_t EffectiveClass::mult_at(const SurfaceModel& model, const std::string& point) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    total += multiplicities[i] * model.curves[i].mult_at(point);
  return total;
}

std::optional<std::string> EffectiveClass::single_curve(const SurfaceModel& model) const {
  std::optional<std::size_t> only;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    if (only || multiplicities[i] != 1) return std::nullopt;
    only = i;
  }
  if (!only) return std::nullopt;
  return model.curves[*only].name;
}

std::string EffectiveClass::describe(const SurfaceModel& model) const {
  std::string out;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (multiplicities[i] != 1) out += std::to_string(multiplicities[i]) + "*";
    out += model.curves[i].name;
  }
  return out.empty() ? "0" : out;
}

namespace {

struct PreparedConstraint {
  const Constraint* source;
  std::vector<Rational> per_curve;  // linear part evaluated on each table curve
  bool prunable = false;
};

class Enumerator {
 public:
  Enumerator(const SurfaceModel& model, const std::vector<Constraint>& constraints, std::int64_t bound)
      : model_(model), bound_(bound), counts_(model.curves.size(), 0) {
    const std::size_t m = model.curves.size();
    curve_gram_.assign(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        curve_gram_[i][j] = curve_gram_[j][i] = model.lattice.pair(model.curves[i].cls, model.curves[j].cls);
    for (const auto& c : constraints) {
      PreparedConstraint p{&c, std::vector<Rational>(m, Rational(0))};
      for (std::size_t i = 0; i < m; ++i)
        for (const auto& t : c.linear) p.per_curve[i] += t.coefficient * model.lattice.pair(model.curves[i].cls, t.against);
      // Linear part with non-negative increments is monotone along the search.
      p.prunable = c.square_coefficient == 0 &&
                   (c.relation == Relation::Less || c.relation == Relation::LessEq || c.relation == Relation::Equal) &&
                   std::all_of(p.per_curve.begin(), p.per_curve.end(), [](const Rational& v) { return v >= 0; });
      prepared_.push_back(std::move(p));
    }
    partial_.assign(prepared_.size(), Rational(0));
  }

  std::vector<EffectiveClass> run() {
    recurse(0);
    return std::move(out_);
  }

 private:
  bool exceeded(std::size_t k) const {
    const auto& p = prepared_[k];
    if (!p.prunable) return false;
    if (p.source->relation == Relation::Less) return partial_[k] >= p.source->rhs;
    return partial_[k] > p.source->rhs;
  }

  void recurse(std::size_t idx) {
    if (idx == counts_.size()) {
      emit();
      return;
    }
    for (std::int64_t n = 0; n <= bound_; ++n) {
      counts_[idx] = n;
      if (n > 0) {
        bool prune = false;
        for (std::size_t k = 0; k < prepared_.size(); ++k) {
          partial_[k] += prepared_[k].per_curve[idx];
          prune = prune || exceeded(k);
        }
        if (prune) {
          for (std::size_t k = 0; k < prepared_.size(); ++k) partial_[k] -= n * prepared_[k].per_curve[idx];
          break;
        }
      }
      recurse(idx + 1);
      if (n == bound_)
        for (std::size_t k = 0; k < prepared_.size(); ++k) partial_[k] -= n * prepared_[k].per_curve[idx];
    }
    counts_[idx] = 0;
  }

  void emit() {
    if (std::all_of(counts_.begin(), counts_.end(), [](std::int64_t c) { return c == 0; })) return;
    Rational square = 0;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
      if (!counts_[i]) continue;
      for (std::size_t j = 0; j < counts_.size(); ++j)
        if (counts_[j]) square += counts_[i] * counts_[j] * curve_gram_[i][j];
    }
    for (std::size_t k = 0; k < prepared_.size(); ++k) {
      Rational v = partial_[k];
      if (prepared_[k].source->square_coefficient != 0) v += prepared_[k].source->square_coefficient * square;
      if (!compare(v, prepared_[k].source->relation, prepared_[k].source->rhs)) return;
    }
    EffectiveClass e;
    e.multiplicities = counts_;
    e.cls = DivisorClass(model_.rank());
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i]) e.cls += Rational(counts_[i]) * model_.curves[i].cls;
    out_.push_back(std::move(e));
  }

  const SurfaceModel& model_;
  std::int64_t bound_;
  std::vector<std::int64_t> counts_;
  std::vector<std::vector<Rational>> curve_gram_;
  std::vector<PreparedConstraint> prepared_;
  std::vector<Rational> partial_;
  std::vector<EffectiveClass> out_;
};

}  // namespace

EnumerationResult enumerate_effective_classes(const SurfaceModel& model,
                                              const std::vector<Constraint>& constraints,
                                              std::int64_t coeff_bound) {
  if (coeff_bound < 1) throw InputError("coeff_bound must be at least 1");
  for (const auto& c : constraints)
    for (const auto& t : c.linear) require_same_rank(t.against, model.canonical);
  EnumerationResult result;
  if (model.curves.empty()) {
    result.empty_table = true;
    return result;
  }
  result.classes = Enumerator(model, constraints, coeff_bound).run();
  return result;
}

}  // namespace surfcalc
