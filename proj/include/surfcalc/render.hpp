#pragma once

#include "surfcalc/lattice.hpp"
#include "surfcalc/report.hpp"
#include "surfcalc/seshadri.hpp"

#include "json.hpp"

#include <string>

namespace surfcalc {

using Json = nlohmann::ordered_json;

// Exact rationals travel as "p" or "p/q" strings.
Json rational_json(const Rational& r);

Json to_json(const CertificateReport& report);
Json to_json(const SeshadriBound& bound);
// {"valid": bool, "checks": [...]}
Json to_json(const ValidationReport& report);

/// Plain-text rendering of a JSON document: one "key: value" per line,
/// nested objects indented, trace entries as "[PASS] text : left vs right".
std::string render_text(const Json& doc);

}  // namespace surfcalc
