#include "surfcalc/qdivisor.hpp"

#include "surfcalc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace surfcalc {

std::int64_t PrimeComponent::mult_at(const std::string& point) const {
  const auto it = point_mults.find(point);
  return it == point_mults.end() ? 0 : it->second;
}

PrimeComponent PrimeComponent::from_curve(const CurveRecord& curve) {
  return PrimeComponent{curve.name, curve.cls, curve.point_mults};
}

QDivisor::QDivisor(std::vector<QTerm> terms) {
  std::map<std::string, QTerm> merged;
  for (auto& t : terms) {
    auto it = merged.find(t.component.name);
    if (it == merged.end()) {
      merged.emplace(t.component.name, std::move(t));
      continue;
    }
    if (!(it->second.component == t.component))
      throw InputError("component name '" + t.component.name + "' used for two different components");
    it->second.coefficient += t.coefficient;
  }
  for (auto& [name, t] : merged)
    if (t.coefficient != 0) terms_.push_back(std::move(t));
}

std::optional<Rational> QDivisor::coefficient(const std::string& name) const {
  for (const auto& t : terms_)
    if (t.component.name == name) return t.coefficient;
  return std::nullopt;
}

bool QDivisor::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const QTerm& t) { return is_integer(t.coefficient); });
}

bool QDivisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const QTerm& t) { return t.coefficient >= 0; });
}

QDivisor QDivisor::operator+(const QDivisor& other) const {
  std::vector<QTerm> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return QDivisor(std::move(all));
}

QDivisor QDivisor::operator-() const { return Rational(-1) * *this; }

QDivisor QDivisor::operator-(const QDivisor& other) const { return *this + (-other); }

QDivisor operator*(const Rational& s, const QDivisor& m) {
  std::vector<QTerm> scaled = m.terms_;
  for (auto& t : scaled) t.coefficient *= s;
  return QDivisor(std::move(scaled));
}

std::string QDivisor::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient < 0;
    const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += t.component.name;
  }
  return out;
}

namespace {

template <typename Op>
QDivisor map_coefficients(const QDivisor& m, Op op) {
  std::vector<QTerm> terms = m.terms();
  for (auto& t : terms) t.coefficient = op(t.coefficient);
  return QDivisor(std::move(terms));
}

}  // namespace

QDivisor round_up(const QDivisor& m) {
  return map_coefficients(m, [](const Rational& c) { return Rational(ceil_of(c)); });
}

QDivisor round_down(const QDivisor& m) {
  return map_coefficients(m, [](const Rational& c) { return Rational(floor_of(c)); });
}

QDivisor fractional_part(const QDivisor& m) {
  return map_coefficients(m, [](const Rational& c) { return c - Rational(floor_of(c)); });
}

Rational mult_at(const QDivisor& m, const std::string& point) {
  Rational total = 0;
  for (const auto& t : m.terms()) total += t.coefficient * t.component.mult_at(point);
  return total;
}

DivisorClass class_of(const SurfaceModel& model, const QDivisor& m) {
  DivisorClass total(model.rank());
  for (const auto& t : m.terms()) {
    if (t.component.cls.rank() != model.rank())
      throw InputError("component '" + t.component.name + "' does not live in the lattice of '" + model.name + "'");
    total += t.coefficient * t.component.cls;
  }
  return total;
}

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const ComponentResolver& resolve) : text_(text), resolve_(resolve) {}

  QDivisor parse() {
    std::vector<QTerm> terms;
    skip_space();
    if (at_end()) throw error("empty divisor literal");
    if (peek() == '0' && rest_is_zero()) return QDivisor();
    bool first = true;
    while (!at_end()) {
      Rational sign = 1;
      skip_space();
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      Rational coeff = 1;
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = number();
        skip_space();
        if (!at_end() && peek() == '*') {
          ++pos_;
          skip_space();
        }
      }
      const std::string name = identifier();
      auto component = resolve_(name);
      if (!component) throw InputError("unknown component '" + name + "' in divisor literal");
      terms.push_back({sign * coeff, std::move(*component)});
      skip_space();
    }
    return QDivisor(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool rest_is_zero() const {
    for (std::size_t i = pos_ + 1; i < text_.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
    return true;
  }
  InputError error(const std::string& what) const {
    return InputError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw error("malformed fraction");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end()) {
      const char c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'') ++pos_;
      else break;
    }
    if (start == pos_) throw error("expected a component name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const ComponentResolver& resolve_;
  std::size_t pos_ = 0;
};

}  // namespace

QDivisor parse_qdivisor(std::string_view text, const ComponentResolver& resolve) {
  return LiteralParser(text, resolve).parse();
}

QDivisor parse_qdivisor(std::string_view text, const SurfaceModel& model) {
  const ComponentResolver resolve = [&model](const std::string& name) -> std::optional<PrimeComponent> {
    if (const auto* c = model.find_curve(name)) return PrimeComponent::from_curve(*c);
    return std::nullopt;
  };
  return parse_qdivisor(text, resolve);
}

}  // namespace surfcalc
