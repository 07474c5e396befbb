#include "surfcalc/surface_io.hpp"

#include "surfcalc/errors.hpp"

#include <fstream>

namespace surfcalc {

using nlohmann::json;

namespace {

std::vector<long long> int_vector(const json& node, const std::string& what) {
  if (!node.is_array()) throw InputError(what + " must be an array of integers");
  std::vector<long long> out;
  for (const auto& v : node) {
    if (!v.is_number_integer()) throw InputError(what + " must contain only integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

const json& require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("surface file is missing '") + key + "'");
  return doc.at(key);
}

}  // namespace

SurfaceModel parse_surface(const json& doc) {
  if (!doc.is_object()) throw InputError("surface file must be a JSON object");
  SurfaceModel model;
  const auto& name = require(doc, "name");
  if (!name.is_string()) throw InputError("'name' must be a string");
  model.name = name.get<std::string>();

  const auto& rank = require(doc, "rank");
  if (!rank.is_number_integer() || rank.get<long long>() < 1) throw InputError("'rank' must be a positive integer");

  const auto& gram = require(doc, "gram");
  if (!gram.is_array()) throw InputError("'gram' must be an array of arrays");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : gram) {
    auto values = int_vector(row, "gram row");
    rows.emplace_back(values.begin(), values.end());
  }
  if (rows.size() != rank.get<std::size_t>())
    throw InputError("'rank' is " + std::to_string(rank.get<long long>()) + " but gram has " +
                     std::to_string(rows.size()) + " rows");
  model.lattice = IntersectionLattice(std::move(rows));

  model.canonical = DivisorClass::from_integers(int_vector(require(doc, "canonical"), "'canonical'"));
  const auto& chi = require(doc, "chi_O");
  if (!chi.is_number_integer()) throw InputError("'chi_O' must be an integer");
  model.chi_O = chi.get<std::int64_t>();

  if (doc.contains("curves")) {
    const auto& curves = doc.at("curves");
    if (!curves.is_array()) throw InputError("'curves' must be an array");
    for (const auto& c : curves) {
      if (!c.is_object() || !c.contains("name") || !c.at("name").is_string() || !c.contains("class"))
        throw InputError("each curve needs a string 'name' and a 'class'");
      CurveRecord rec;
      rec.name = c.at("name").get<std::string>();
      rec.cls = DivisorClass::from_integers(int_vector(c.at("class"), "class of curve '" + rec.name + "'"));
      if (c.contains("genus")) {
        if (!c.at("genus").is_number_integer()) throw InputError("genus of '" + rec.name + "' must be an integer");
        rec.genus = c.at("genus").get<std::int64_t>();
      }
      if (c.contains("mults")) {
        const auto& mults = c.at("mults");
        if (!mults.is_object()) throw InputError("mults of '" + rec.name + "' must be an object");
        for (const auto& [pt, m] : mults.items()) {
          if (!m.is_number_integer()) throw InputError("multiplicity of '" + rec.name + "' at " + pt + " must be an integer");
          rec.point_mults[pt] = m.get<std::int64_t>();
        }
      }
      if (c.contains("ordinary")) {
        if (!c.at("ordinary").is_boolean()) throw InputError("'ordinary' must be a boolean");
        rec.ordinary = c.at("ordinary").get<bool>();
      }
      model.curves.push_back(std::move(rec));
    }
  }
  if (doc.contains("complete_through")) {
    const auto& ct = doc.at("complete_through");
    if (!ct.is_array()) throw InputError("'complete_through' must be an array of strings");
    for (const auto& p : ct) {
      if (!p.is_string()) throw InputError("'complete_through' must be an array of strings");
      model.complete_through.push_back(p.get<std::string>());
    }
  }
  return model;
}

SurfaceModel read_surface(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open surface file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_surface(doc);
}

nlohmann::ordered_json class_to_json(const DivisorClass& cls) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : cls.coeffs()) arr.push_back(to_string(c));
  return arr;
}

nlohmann::ordered_json surface_to_json(const SurfaceModel& model) {
  nlohmann::ordered_json doc;
  doc["name"] = model.name;
  doc["rank"] = model.rank();
  doc["gram"] = model.lattice.gram();
  std::vector<long long> canon;
  for (const auto& c : model.canonical.coeffs()) canon.push_back(to_int64(c));
  doc["canonical"] = canon;
  doc["chi_O"] = model.chi_O;
  auto curves = nlohmann::ordered_json::array();
  for (const auto& c : model.curves) {
    nlohmann::ordered_json rec;
    rec["name"] = c.name;
    std::vector<long long> cls;
    for (const auto& v : c.cls.coeffs()) cls.push_back(to_int64(v));
    rec["class"] = cls;
    if (c.genus) rec["genus"] = *c.genus;
    if (!c.point_mults.empty()) {
      nlohmann::ordered_json mults = nlohmann::ordered_json::object();
      for (const auto& [pt, m] : c.point_mults) mults[pt] = m;
      rec["mults"] = mults;
    }
    if (!c.ordinary) rec["ordinary"] = false;
    curves.push_back(std::move(rec));
  }
  doc["curves"] = curves;
  if (!model.complete_through.empty()) doc["complete_through"] = model.complete_through;
  return doc;
}

void write_surface(const std::filesystem::path& path, const SurfaceModel& model) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << surface_to_json(model).dump(2) << "\n";
}

}  // namespace surfcalc
