#include "surfcalc/render.hpp"

#include "surfcalc/surface_io.hpp"

#include <sstream>

namespace surfcalc {

Json rational_json(const Rational& r) { return to_string(r); }

Json to_json(const CertificateReport& report) {
  Json out;
  out["criterion"] = report.criterion;
  out["verdict"] = verdict_name(report.verdict);
  if (report.coeff_bound) out["coeff_bound"] = *report.coeff_bound;
  Json witnesses = Json::array();
  for (const auto& w : report.witnesses) {
    Json j;
    j["class"] = class_to_json(w.cls);
    j["description"] = w.description;
    j["dot_L"] = rational_json(w.dot_l);
    j["self_intersection"] = rational_json(w.self);
    witnesses.push_back(std::move(j));
  }
  out["witnesses"] = std::move(witnesses);
  Json trace = Json::array();
  for (const auto& t : report.trace) {
    Json j;
    j["inequality"] = t.inequality;
    j["left"] = rational_json(t.left);
    j["right"] = rational_json(t.right);
    j["pass"] = t.pass;
    trace.push_back(std::move(j));
  }
  out["trace"] = std::move(trace);
  out["notes"] = report.notes;
  return out;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_trace_entry(const Json& v) {
  return v.is_object() && v.contains("inequality") && v.contains("pass") && v.contains("left") && v.contains("right");
}

bool all_scalars(const Json& arr) {
  for (const auto& v : arr)
    if (v.is_structured()) return false;
  return true;
}

void emit(std::ostringstream& os, const Json& doc, int depth);

void emit_value(std::ostringstream& os, const std::string& key, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    emit(os, v, depth + 1);
  } else if (v.is_array() && all_scalars(v)) {
    os << pad << key << ":";
    if (v.empty()) os << " (none)";
    bool first = true;
    for (const auto& e : v) {
      os << (first ? " " : ", ") << scalar_text(e);
      first = false;
    }
    os << "\n";
  } else if (v.is_array()) {
    os << pad << key << ":\n";
    for (const auto& e : v) {
      if (is_trace_entry(e)) {
        os << pad << "  [" << (e["pass"].get<bool>() ? "PASS" : "FAIL") << "] " << scalar_text(e["inequality"])
           << " : " << scalar_text(e["left"]) << " vs " << scalar_text(e["right"]) << "\n";
      } else if (e.is_object()) {
        os << pad << "  -\n";
        emit(os, e, depth + 2);
      } else if (e.is_array() && all_scalars(e)) {
        os << pad << "  -";
        bool first = true;
        for (const auto& x : e) {
          os << (first ? " " : ", ") << scalar_text(x);
          first = false;
        }
        os << "\n";
      } else {
        os << pad << "  - " << e.dump() << "\n";
      }
    }
  } else {
    os << pad << key << ": " << scalar_text(v) << "\n";
  }
}

void emit(std::ostringstream& os, const Json& doc, int depth) {
  for (auto it = doc.begin(); it != doc.end(); ++it) emit_value(os, it.key(), it.value(), depth);
}

}  // namespace

Json to_json(const SeshadriBound& b) {
  Json j;
  j["kind"] = seshadri_kind_name(b.kind);
  j["value"] = b.value ? rational_json(*b.value) : Json(nullptr);
  if (b.has_data()) {
    j["achieving_curve"] = b.achieving_curve;
    j["achieving_class"] = class_to_json(b.achieving_class);
    j["L_dot_C"] = rational_json(b.achieving_dot);
    j["mult"] = rational_json(b.achieving_mult);
  }
  if (b.reducible_candidate_value) {
    j["reducible_candidate"] = b.reducible_candidate;
    j["reducible_candidate_value"] = rational_json(*b.reducible_candidate_value);
  }
  j["coeff_bound"] = b.coeff_bound;
  j["notes"] = b.notes;
  return j;
}

Json to_json(const ValidationReport& report) {
  Json out;
  out["valid"] = report.ok();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["check"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.witness) j["witness"] = class_to_json(*c.witness);
    if (c.witness_value) j["witness_value"] = rational_json(*c.witness_value);
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  return out;
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  if (doc.is_object()) emit(os, doc, 0);
  else os << scalar_text(doc) << "\n";
  return os.str();
}

}  // namespace surfcalc
