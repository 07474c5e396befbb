#pragma once

#include "surfcalc/divisor_class.hpp"
#include "surfcalc/linalg.hpp"
#include "surfcalc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace surfcalc {

/// Integral symmetric intersection form on a Néron–Severi lattice.
///
/// Construction only checks shape; the signature (1, rank−1) is a
/// mathematical property reported by validate_surface().
class IntersectionLattice {
 public:
  IntersectionLattice() = default;
  explicit IntersectionLattice(std::vector<std::vector<std::int64_t>> gram);

  std::size_t rank() const { return gram_.size(); }
  const std::vector<std::vector<std::int64_t>>& gram() const { return gram_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return gram_[i][j]; }

  bool is_square() const;
  bool is_symmetric() const;
  // D² even for every integral D.
  bool is_even() const;

  Rational pair(const DivisorClass& a, const DivisorClass& b) const;
  linalg::Matrix as_rational() const;

 private:
  std::vector<std::vector<std::int64_t>> gram_;
};

using PointMults = std::map<std::string, std::int64_t>;

struct CurveRecord {
  std::string name;
  DivisorClass cls;  // integral
  PointMults point_mults;
  std::optional<std::int64_t> genus;
  // Singularities at listed points are ordinary m-fold points unless false.
  bool ordinary = true;

  std::int64_t mult_at(const std::string& point) const;
};

struct SurfaceModel {
  std::string name;
  IntersectionLattice lattice;
  DivisorClass canonical;
  std::int64_t chi_O = 0;
  std::vector<CurveRecord> curves;
  std::vector<std::string> complete_through;

  std::size_t rank() const { return lattice.rank(); }
  const CurveRecord* find_curve(const std::string& curve_name) const;
  // The wildcard label "*" declares the table exhaustive at every point and
  // for the effective cone as a whole.
  bool table_complete_at(const std::string& point) const;
  bool table_complete_globally() const;
};

inline constexpr const char* kEverywhere = "*";

// ---------------------------------------------------------------- validation

struct ValidationCheck {
  std::string name;
  bool passed = true;
  bool structural = false;  // shape/schema failure as opposed to a mathematical one
  std::string detail;
  std::optional<DivisorClass> witness;
  std::optional<Rational> witness_value;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  bool structurally_ok() const;
  const ValidationCheck* find(const std::string& name) const;
};

ValidationReport validate_surface(const SurfaceModel& model);
// Throws InputError listing the first failed check.
void require_valid(const SurfaceModel& model);

// ---------------------------------------------------------------- arithmetic

Rational intersect(const SurfaceModel& model, const DivisorClass& a, const DivisorClass& b);
Rational self_intersection(const SurfaceModel& model, const DivisorClass& a);

// χ(O) + D·(D−K)/2 for integral D.
Rational euler_characteristic(const SurfaceModel& model, const DivisorClass& d);

// 1 + (C² + C·K)/2
Rational arithmetic_genus(const SurfaceModel& model, const DivisorClass& c);

struct NefVerdict {
  bool nef = true;
  std::optional<std::size_t> violated_curve;  // index into model.curves, first by table order
  Rational violation_value = 0;               // D·C of the offending curve
  bool certified = false;                     // table declared complete everywhere
};

NefVerdict is_nef_on_table(const SurfaceModel& model, const DivisorClass& d);

struct BigNefVerdict {
  NefVerdict nef;
  Rational self_intersection = 0;
  bool big_and_nef() const { return nef.nef && self_intersection > 0; }
};

BigNefVerdict is_big_nef_on_table(const SurfaceModel& model, const DivisorClass& d);

// A·C > 0 for every table curve and A² > 0.
bool is_ample_on_table(const SurfaceModel& model, const DivisorClass& a);

struct HodgeIndexResult {
  Rational lhs;  // (L²)(D²)
  Rational rhs;  // (L·D)²
  Rational gap;  // rhs − lhs, never negative on a valid surface
  bool holds() const { return gap >= 0; }
  bool equality() const { return gap == 0; }
};

// Requires L² > 0.
HodgeIndexResult hodge_index_check(const SurfaceModel& model, const DivisorClass& l,
                                   const DivisorClass& d);

// ---------------------------------------------------------------- enumeration

enum class Relation { Less, LessEq, Equal, GreaterEq, Greater };

bool compare(const Rational& lhs, Relation rel, const Rational& rhs);
std::string relation_symbol(Relation rel);

/// Σ coefficient_j·(D·X_j) + square_coefficient·D²  rel  rhs
struct Constraint {
  struct Term {
    Rational coefficient;
    DivisorClass against;
  };
  std::vector<Term> linear;
  Rational square_coefficient = 0;
  Relation relation = Relation::Equal;
  Rational rhs = 0;

  static Constraint dot(const DivisorClass& x, Relation rel, Rational rhs);
  static Constraint square(Relation rel, Rational rhs);

  Rational evaluate(const SurfaceModel& model, const DivisorClass& d) const;
  bool satisfied(const SurfaceModel& model, const DivisorClass& d) const;
};

struct EffectiveClass {
  std::vector<std::int64_t> multiplicities;  // one per table curve
  DivisorClass cls;

  // Weighted point multiplicity inherited from the components.
  std::int64_t mult_at(const SurfaceModel& model, const std::string& point) const;
  // Name of the single table curve when the combination is one curve with coefficient 1.
  std::optional<std::string> single_curve(const SurfaceModel& model) const;
  std::string describe(const SurfaceModel& model) const;
};

struct EnumerationResult {
  std::vector<EffectiveClass> classes;
  bool empty_table = false;
};

/// Non-negative combinations Σ nᵢCᵢ of table curves, 0 ≤ nᵢ ≤ coeff_bound,
/// not all zero, satisfying every constraint. Output is in lexicographic
/// order of the coefficient vector.
EnumerationResult enumerate_effective_classes(const SurfaceModel& model,
                                              const std::vector<Constraint>& constraints,
                                              std::int64_t coeff_bound);

}  // namespace surfcalc
