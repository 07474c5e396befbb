#pragma once

#include "surfcalc/divisor_class.hpp"
#include "surfcalc/lattice.hpp"
#include "surfcalc/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace surfcalc {

struct PrimeComponent {
  std::string name;
  DivisorClass cls;
  PointMults point_mults;

  std::int64_t mult_at(const std::string& point) const;
  static PrimeComponent from_curve(const CurveRecord& curve);
  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
};

struct QTerm {
  Rational coefficient;
  PrimeComponent component;

  friend bool operator==(const QTerm&, const QTerm&) = default;
};

/// Formal Q-linear combination of named prime components.
///
/// Terms are kept sorted by component name with zero coefficients removed.
/// Rounding acts on this formal representation, never on the class: two
/// components with equal classes but different names stay distinct.
class QDivisor {
 public:
  QDivisor() = default;
  // Terms naming the same component are merged; the same name attached to
  // different data is an InputError.
  explicit QDivisor(std::vector<QTerm> terms);

  const std::vector<QTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::optional<Rational> coefficient(const std::string& name) const;

  bool is_integral() const;
  bool is_effective() const;  // every coefficient >= 0

  QDivisor operator+(const QDivisor& other) const;
  QDivisor operator-(const QDivisor& other) const;
  QDivisor operator-() const;
  friend QDivisor operator*(const Rational& s, const QDivisor& m);
  friend bool operator==(const QDivisor&, const QDivisor&) = default;

  std::string str() const;

 private:
  std::vector<QTerm> terms_;
};

QDivisor round_up(const QDivisor& m);
QDivisor round_down(const QDivisor& m);
QDivisor fractional_part(const QDivisor& m);

// Σ aᵢ·mult_point(Dᵢ); missing entries count as 0.
Rational mult_at(const QDivisor& m, const std::string& point);

// Σ aᵢ·class(Dᵢ). Empty divisors map to the zero class of the model.
DivisorClass class_of(const SurfaceModel& model, const QDivisor& m);

using ComponentResolver = std::function<std::optional<PrimeComponent>(const std::string&)>;

// "3/4*C1 + 1/2*C2 - 2*E": signed terms, coefficient integer or p/q, '*' optional.
QDivisor parse_qdivisor(std::string_view text, const ComponentResolver& resolve);
// Resolves names against the surface's curve table.
QDivisor parse_qdivisor(std::string_view text, const SurfaceModel& model);

}  // namespace surfcalc
