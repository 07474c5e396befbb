#pragma once

#include "surfcalc/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace surfcalc {

/// Coordinates of a numerical divisor class in a fixed lattice basis.
///
/// Classes of different lengths never combine: every binary operation
/// checks lengths and throws InputError on mismatch.
class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::size_t rank) : coeffs_(rank, Rational(0)) {}
  explicit DivisorClass(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  DivisorClass(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  static DivisorClass from_integers(std::span<const long long> values);
  static DivisorClass basis(std::size_t rank, std::size_t index);

  std::size_t rank() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Rational& scalar);

  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(DivisorClass a) { return a *= Rational(-1); }
  friend DivisorClass operator*(const Rational& s, DivisorClass a) { return a *= s; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  // Lexicographic on coordinates; ranks compared first.
  friend bool operator<(const DivisorClass& a, const DivisorClass& b);

  // "1,-3/2,0"
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

// Parses a comma-separated list of rationals, e.g. "1,3" or "1/2, -1".
DivisorClass parse_class(std::string_view text);

void require_same_rank(const DivisorClass& a, const DivisorClass& b);

}  // namespace surfcalc
