#include "surfcalc/divisor_class.hpp"

#include "surfcalc/errors.hpp"

#include <algorithm>

namespace surfcalc {

DivisorClass DivisorClass::from_integers(std::span<const long long> values) {
  std::vector<Rational> coeffs;
  coeffs.reserve(values.size());
  for (long long v : values) coeffs.emplace_back(v);
  return DivisorClass(std::move(coeffs));
}

DivisorClass DivisorClass::basis(std::size_t rank, std::size_t index) {
  DivisorClass e(rank);
  e[index] = 1;
  return e;
}

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool DivisorClass::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank())
    throw InputError("class dimension mismatch: " + std::to_string(a.rank()) + " vs " +
                     std::to_string(b.rank()));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  require_same_rank(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator<(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(),
                                      b.coeffs_.end());
}

std::string DivisorClass::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += to_string(coeffs_[i]);
  }
  return out;
}

DivisorClass parse_class(std::string_view text) {
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    coeffs.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DivisorClass(std::move(coeffs));
}

}  // namespace surfcalc
