#pragma once

#include "surfcalc/divisor_class.hpp"
#include "surfcalc/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace surfcalc {

enum class Verdict { CriterionHolds, ObstructionFound, HypothesesFail, Inconclusive };

std::string verdict_name(Verdict v);
// 0 / 10 / 12 / 11
int exit_code(Verdict v);

struct TraceLine {
  std::string inequality;
  Rational left;
  Rational right;
  bool pass = false;
};

struct Witness {
  DivisorClass cls;
  std::string description;  // table combination, e.g. "2*F1 + F2"
  Rational dot_l;           // D·L
  Rational self;            // D²
};

/// Structured verdict of a criterion, with the inequalities it evaluated.
struct CertificateReport {
  std::string criterion;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<Witness> witnesses;
  std::vector<TraceLine> trace;
  std::vector<std::string> notes;
  std::optional<std::int64_t> coeff_bound;

  // Appends a trace line and returns its pass flag.
  bool check(std::string inequality, const Rational& left, const char* rel, const Rational& right);
  void note(std::string text) { notes.push_back(std::move(text)); }
  bool all_passed() const;
};

}  // namespace surfcalc
