#include "surfcalc/report.hpp"

#include "surfcalc/errors.hpp"

#include <algorithm>
#include <string_view>

namespace surfcalc {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CriterionHolds: return "criterion-holds";
    case Verdict::ObstructionFound: return "obstruction-found";
    case Verdict::HypothesesFail: return "hypotheses-fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::CriterionHolds: return 0;
    case Verdict::ObstructionFound: return 10;
    case Verdict::Inconclusive: return 11;
    case Verdict::HypothesesFail: return 12;
  }
  return 3;
}

bool CertificateReport::check(std::string inequality, const Rational& left, const char* rel, const Rational& right) {
  const std::string_view r(rel);
  bool pass = false;
  if (r == "<") pass = left < right;
  else if (r == "<=") pass = left <= right;
  else if (r == ">") pass = left > right;
  else if (r == ">=") pass = left >= right;
  else if (r == "=") pass = left == right;
  else throw InvariantError("unknown relation " + std::string(r));
  trace.push_back({std::move(inequality), left, right, pass});
  return pass;
}

bool CertificateReport::all_passed() const {
  return std::all_of(trace.begin(), trace.end(), [](const TraceLine& t) { return t.pass; });
}

}  // namespace surfcalc
