// surfcalc command-line front end.
//
// Exit codes: 0 criterion holds / success, 10 obstruction found,
// 11 inconclusive, 12 hypotheses fail, 2 input error, 3 internal error.

#include "surfcalc/blowup.hpp"
#include "surfcalc/bundles.hpp"
#include "surfcalc/criteria.hpp"
#include "surfcalc/errors.hpp"
#include "surfcalc/fixtures.hpp"
#include "surfcalc/positivity.hpp"
#include "surfcalc/qdivisor.hpp"
#include "surfcalc/render.hpp"
#include "surfcalc/seshadri.hpp"
#include "surfcalc/surface_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace surfcalc;

namespace {

constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct Globals {
  std::string format = "text";
  std::int64_t bound = 3;
  std::uint64_t seed = 0;
  std::string output;
};

struct Outcome {
  Json doc;
  int code = 0;
};

SurfaceModel load_valid(const std::string& path) {
  SurfaceModel model = read_surface(path);
  require_valid(model);
  return model;
}

DivisorClass class_arg(const SurfaceModel& model, const std::string& text, const char* what) {
  DivisorClass cls = parse_class(text);
  if (cls.rank() != model.rank())
    throw InputError(std::string(what) + " has " + std::to_string(cls.rank()) + " coordinates, surface rank is " +
                     std::to_string(model.rank()));
  return cls;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty label in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> parse_matrix(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  if (!text.empty() && text.front() == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error&) {
      throw InputError("malformed matrix '" + text + "'");
    }
    if (!doc.is_array()) throw InputError("matrix must be an array of rows");
    for (const auto& row : doc) {
      if (!row.is_array()) throw InputError("matrix must be an array of rows");
      std::vector<std::int64_t> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw InputError("matrix entries must be integers");
        r.push_back(v.get<std::int64_t>());
      }
      rows.push_back(std::move(r));
    }
    return rows;
  }
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<std::int64_t> r;
    const DivisorClass parsed = parse_class(row);
    for (const auto& c : parsed.coeffs()) {
      if (!is_integer(c)) throw InputError("matrix entries must be integers");
      r.push_back(to_int64(c));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

Json chern_json(const ChernData& c) {
  Json j;
  j["rank"] = c.rank;
  j["c1"] = class_to_json(c.c1);
  j["c2"] = c.c2.str();
  return j;
}

// ------------------------------------------------------------------ commands

Outcome cmd_validate(const std::string& path) {
  const SurfaceModel model = read_surface(path);
  const auto report = validate_surface(model);
  Outcome out;
  out.doc["surface"] = model.name;
  out.doc["valid"] = report.ok();
  out.doc["checks"] = to_json(report)["checks"];
  out.code = report.ok() ? 0 : kInputError;
  return out;
}

Outcome cmd_reider(const std::string& path, const std::string& lb, const std::optional<std::string>& point,
                   bool very_ample, std::int64_t bound) {
  const SurfaceModel model = load_valid(path);
  const DivisorClass l = class_arg(model, lb, "--line-bundle");
  const auto report = very_ample ? reider_very_ample(model, l, bound, point) : reider_freeness(model, l, point, bound);
  return {to_json(report), exit_code(report.verdict)};
}

Outcome cmd_seshadri(const std::string& path, const std::string& lb, const std::optional<std::string>& point,
                     const std::optional<std::string>& points, const std::optional<std::int64_t>& jets,
                     std::int64_t bound) {
  const SurfaceModel model = load_valid(path);
  const DivisorClass l = class_arg(model, lb, "--line-bundle");
  std::vector<std::string> labels;
  if (points) labels = split_labels(*points);
  else if (point) labels = {*point};
  else throw InputError("seshadri needs --point or --points");
  const auto b = labels.size() == 1 ? seshadri_at_point(model, l, labels[0], bound)
                                    : multipoint_seshadri(model, l, labels, bound);
  Outcome out;
  out.doc["points"] = labels;
  out.doc["seshadri"] = to_json(b);
  if (jets) {
    Json j;
    j["s"] = *jets;
    if (b.value && b.kind == SeshadriKind::ExactGivenCompleteTable) {
      j["generates_s_jets"] = guarantee_name(jets_from_seshadri(*b.value, model.lattice.pair(l, l), *jets));
    } else {
      j["generates_s_jets"] = "unknown";
      j["note"] = "needs an exact Seshadri value (complete table at the point)";
    }
    j["adjoint_multiplier"] = adjoint_jet_schedule(*jets).multiplier;
    j["side_condition"] = adjoint_jet_schedule(*jets).side_condition;
    out.doc["jets"] = std::move(j);
  }
  out.code = b.has_data() ? 0 : exit_code(Verdict::Inconclusive);
  return out;
}

Outcome cmd_zariski(const std::string& path, const std::string& divisor) {
  const SurfaceModel model = load_valid(path);
  const QDivisor q = parse_qdivisor(divisor, model);
  const DivisorClass d = class_of(model, q);
  Outcome out;
  out.doc["divisor"] = q.str();
  out.doc["class"] = class_to_json(d);
  try {
    const auto z = zariski_decompose(model, d);
    out.doc["positive_part"] = class_to_json(z.positive);
    Json neg = Json::array();
    for (const auto& [name, coeff] : z.negative) {
      Json j;
      j["curve"] = name;
      j["coefficient"] = rational_json(coeff);
      neg.push_back(std::move(j));
    }
    out.doc["negative_part"] = std::move(neg);
    out.doc["P_squared"] = rational_json(model.lattice.pair(z.positive, z.positive));
  } catch (const NotPseudoeffectiveError& e) {
    out.doc["verdict"] = "not-pseudoeffective-relative-to-table";
    out.doc["detail"] = e.what();
    out.code = exit_code(Verdict::HypothesesFail);
  }
  return out;
}

Outcome cmd_mumford(const std::optional<std::string>& surface, const std::vector<std::string>& exceptional,
                    const std::optional<std::string>& gram, const std::vector<std::string>& incidences,
                    const std::vector<std::string>& meet, const std::optional<std::string>& base) {
  ResolutionData res;
  std::optional<SurfaceModel> model;
  if (surface) {
    model = load_valid(*surface);
    std::vector<std::string> names = exceptional;
    if (names.empty()) {
      std::ifstream in(*surface);
      const auto doc = nlohmann::json::parse(in);
      if (doc.contains("resolution") && doc["resolution"].contains("exceptional"))
        names = doc["resolution"]["exceptional"].get<std::vector<std::string>>();
    }
    if (names.empty()) throw InputError("no exceptional curves given (use --exceptional)");
    res = resolution_from_model(*model, names);
  } else {
    if (!gram) throw InputError("mumford needs --gram or --surface");
    res.exceptional_gram = parse_matrix(*gram);
    for (const auto& inc : incidences) {
      const auto eq = inc.find('=');
      if (eq == std::string::npos || eq == 0) throw InputError("incidence must be <name>=<vector>: '" + inc + "'");
      std::vector<std::int64_t> row;
      const DivisorClass parsed = parse_class(inc.substr(eq + 1));
      for (const auto& c : parsed.coeffs()) {
        if (!is_integer(c)) throw InputError("incidence entries must be integers");
        row.push_back(to_int64(c));
      }
      res.incidence[inc.substr(0, eq)] = std::move(row);
    }
    res.validate();
  }
  Outcome out;
  Json pulls;
  for (const auto& [name, row] : res.incidence) {
    Json delta = Json::array();
    for (const auto& v : mumford_pullback(res, name)) delta.push_back(rational_json(v));
    pulls[name] = std::move(delta);
  }
  out.doc["delta"] = std::move(pulls);
  if (!meet.empty()) {
    if (meet.size() != 2) throw InputError("--meet takes exactly two names");
    Rational b;
    if (base) b = parse_rational(*base);
    else if (model) {
      const auto* c1 = model->find_curve(meet[0]);
      const auto* c2 = model->find_curve(meet[1]);
      if (!c1 || !c2) throw InputError("--meet names must be table curves");
      b = model->lattice.pair(c1->cls, c2->cls);
    } else {
      throw InputError("--meet needs --base");
    }
    Json m;
    m["first"] = meet[0];
    m["second"] = meet[1];
    m["base_intersection"] = rational_json(b);
    m["intersection"] = rational_json(mumford_intersect(res, meet[0], meet[1], b));
    out.doc["meet"] = std::move(m);
  }
  return out;
}

Outcome cmd_matsusaka(const std::string& path, const std::string& lb) {
  const SurfaceModel model = load_valid(path);
  const DivisorClass l = class_arg(model, lb, "--line-bundle");
  const auto r = matsusaka_for(model, l);
  Outcome out;
  out.doc["a"] = rational_json(r.a);
  out.doc["b"] = rational_json(r.b);
  out.doc["m_free"] = r.m_free;
  out.doc["m_very_ample"] = r.m_very_ample;
  out.doc["rho_m_free"] = rational_json(r.rho(r.m_free));
  out.doc["rho_m_very_ample"] = rational_json(r.rho(r.m_very_ample));
  out.doc["star_at_m_free"] = r.star_condition(r.m_free);
  out.doc["regime_gap"] = r.regime_gap();
  out.doc["notes"] = r.notes;
  return out;
}

Outcome cmd_blowup(const std::string& path, const std::string& point, const std::string& output) {
  const SurfaceModel model = load_valid(path);
  const auto bm = blow_up(model, point);
  if (output.empty()) throw InputError("blowup needs -o <out-file>");
  write_surface(output, bm.result);
  Outcome out;
  out.doc["surface"] = bm.result.name;
  out.doc["rank"] = bm.result.rank();
  out.doc["exceptional"] = bm.exceptional_name();
  out.doc["written"] = output;
  return out;
}

Outcome cmd_bundle(const std::string& path, const std::string& c1, const std::string& c2,
                   const std::optional<std::string>& twist_by, bool destabilize,
                   const std::optional<std::string>& ample, std::int64_t bound) {
  const SurfaceModel model = load_valid(path);
  const Rational c2v = parse_rational(c2);
  if (!is_integer(c2v)) throw InputError("--c2 must be an integer");
  const ChernData e(2, class_arg(model, c1, "--c1"), numerator_of(c2v));
  Outcome out;
  out.doc["bundle"] = chern_json(e);
  out.doc["discriminant"] = rational_json(discriminant(model, e));
  out.doc["bogomolov_unstable"] = discriminant(model, e) > 0;
  if (twist_by) {
    const auto t = twist(model, e, class_arg(model, *twist_by, "--twist"));
    out.doc["twisted"] = chern_json(t);
    out.doc["twisted_discriminant"] = rational_json(discriminant(model, t));
  }
  if (destabilize) {
    if (!ample) throw InputError("--destabilize needs --ample");
    const auto r = destabilizer_search(model, e, class_arg(model, *ample, "--ample"), bound);
    Json cands = Json::array();
    for (const auto& c : r.candidates) {
      Json j;
      j["A"] = class_to_json(c.a);
      j["length_Z"] = rational_json(c.length_z);
      cands.push_back(std::move(j));
    }
    Json d;
    d["verdict"] = r.verdict == StabilityVerdict::CandidatesFound    ? "candidates-found"
                   : r.verdict == StabilityVerdict::StableConsistent ? "stable-consistent"
                                                                     : "inconclusive";
    d["coeff_bound"] = r.coeff_bound;
    d["candidates"] = std::move(cands);
    out.doc["destabilizers"] = std::move(d);
  }
  return out;
}

Outcome cmd_certify_jets(const std::string& path, const std::string& lb, std::int64_t k, const std::string& divisor,
                         const std::string& point, std::int64_t s, bool ample_asserted) {
  const SurfaceModel model = load_valid(path);
  const DivisorClass l = class_arg(model, lb, "--line-bundle");
  const auto cert = krs_jet_certificate(model, l, k, parse_qdivisor(divisor, model), point, s, ample_asserted);
  Outcome out;
  out.doc = to_json(cert.report);
  out.doc["q"] = rational_json(cert.q);
  if (cert.branch) {
    Json b;
    b["component"] = cert.branch->component;
    b["d0"] = rational_json(cert.branch->d0);
    b["threshold"] = rational_json(cert.branch->threshold);
    b["N"] = cert.branch->rounded_rest.str();
    if (cert.branch->chain_bound) b["chain_bound"] = rational_json(*cert.branch->chain_bound);
    if (cert.branch->restricted_degree) b["restricted_degree"] = rational_json(*cert.branch->restricted_degree);
    out.doc["branch"] = std::move(b);
  }
  out.code = exit_code(cert.report.verdict);
  return out;
}

Outcome cmd_qcheck(const std::string& path, const std::string& divisor, bool very_ample, bool ample_asserted) {
  const SurfaceModel model = load_valid(path);
  const QDivisor m = parse_qdivisor(divisor, model);
  const auto r = very_ample ? qdivisor_very_ample_check(model, m, ample_asserted)
                            : qdivisor_generation_check(model, m, ample_asserted);
  const auto kv = kv_applicability(model, m);
  Outcome out;
  out.doc = to_json(r.report);
  out.doc["divisor"] = m.str();
  out.doc["adjoint_class"] = class_to_json(r.adjoint_class);
  out.doc["vanishing_applies"] = kv.vanishing_applies;
  out.code = exit_code(r.report.verdict);
  return out;
}

Outcome cmd_report(const std::optional<std::string>& path, const std::optional<std::string>& lb) {
  Outcome out;
  if (!path) {
    Json arr = Json::array();
    for (const auto& f : fixture_catalog()) {
      Json j;
      j["file"] = (fixture_dir() / f.file).string();
      j["note"] = f.note;
      arr.push_back(std::move(j));
    }
    out.doc["fixtures"] = std::move(arr);
    return out;
  }
  const SurfaceModel model = load_valid(*path);
  out.doc["surface"] = model.name;
  out.doc["rank"] = model.rank();
  out.doc["K_squared"] = rational_json(model.lattice.pair(model.canonical, model.canonical));
  out.doc["chi_O"] = model.chi_O;
  out.doc["even"] = model.lattice.is_even();
  Json curves = Json::array();
  for (const auto& c : model.curves) {
    Json j;
    j["name"] = c.name;
    j["class"] = class_to_json(c.cls);
    j["self_intersection"] = rational_json(model.lattice.pair(c.cls, c.cls));
    j["arithmetic_genus"] = rational_json(arithmetic_genus(model, c.cls));
    curves.push_back(std::move(j));
  }
  out.doc["curves"] = std::move(curves);
  out.doc["complete_through"] = model.complete_through;
  if (lb) {
    const DivisorClass l = class_arg(model, *lb, "--line-bundle");
    out.doc["L_squared"] = rational_json(model.lattice.pair(l, l));
    out.doc["chi_L"] = l.is_integral() ? rational_json(euler_characteristic(model, l)) : Json(nullptr);
    const auto g = numerical_global_generation(model, l);
    out.doc["global_generation"] = to_json(g.freeness);
    out.doc["very_ampleness"] = to_json(g.very_ample);
    const auto sp = singularity_production_check(model, l, 0, std::nullopt);
    out.doc["singularity_production"] = to_json(sp.report);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"surfcalc: exact numerical linear-series toolkit for surfaces"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--bound", g.bound, "Coefficient bound for enumerations")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", g.seed, "Accepted for harness compatibility; the CLI is deterministic");
  app.add_option("-o,--output", g.output, "Output file (blowup: the new surface file)");

  std::string file, lb, divisor, point_req, c1, c2;
  std::optional<std::string> point, points, twist_by, ample, surface, gram, base, report_file, report_lb;
  std::optional<std::int64_t> jets;
  std::vector<std::string> incidences, meet, exceptional;
  std::int64_t k = 1, s = 0;
  bool very_ample = false, destabilize = false, ample_asserted = false;

  auto* validate = app.add_subcommand("validate", "Check a surface file");
  validate->add_option("file", file)->required();

  auto* reider = app.add_subcommand("reider", "Search adjoint obstructions");
  reider->add_option("file", file)->required();
  reider->add_option("--line-bundle", lb)->required();
  reider->add_option("--point", point);
  reider->add_flag("--very-ample", very_ample);

  auto* seshadri = app.add_subcommand("seshadri", "Seshadri constant bounds");
  seshadri->add_option("file", file)->required();
  seshadri->add_option("--line-bundle", lb)->required();
  seshadri->add_option("--point", point);
  seshadri->add_option("--points", points);
  seshadri->add_option("--jets", jets);

  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition");
  zariski->add_option("file", file)->required();
  zariski->add_option("--divisor", divisor)->required();

  auto* mumford = app.add_subcommand("mumford", "Mumford intersection on a normal surface");
  mumford->add_option("--surface", surface);
  mumford->add_option("--exceptional", exceptional)->delimiter(',');
  mumford->add_option("--gram", gram);
  mumford->add_option("--incidence", incidences);
  mumford->add_option("--meet", meet)->expected(2);
  mumford->add_option("--base", base);

  auto* matsusaka = app.add_subcommand("matsusaka", "Effective Matsusaka thresholds");
  matsusaka->add_option("file", file)->required();
  matsusaka->add_option("--line-bundle", lb)->required();

  auto* blowup = app.add_subcommand("blowup", "Blow up a labelled point");
  blowup->add_option("file", file)->required();
  blowup->add_option("--point", point_req)->required();

  auto* bundle = app.add_subcommand("bundle", "Rank-2 Chern data");
  bundle->add_option("--surface", file)->required();
  bundle->add_option("--c1", c1)->required();
  bundle->add_option("--c2", c2)->required();
  bundle->add_option("--twist", twist_by);
  bundle->add_flag("--destabilize", destabilize);
  bundle->add_option("--ample", ample);

  auto* certify = app.add_subcommand("certify-jets", "Verify a divisor-based jet certificate");
  certify->add_option("file", file)->required();
  certify->add_option("--line-bundle", lb)->required();
  certify->add_option("-k", k)->required();
  certify->add_option("--divisor", divisor)->required();
  certify->add_option("--point", point_req)->required();
  certify->add_option("-s", s)->required();
  certify->add_flag("--ample-asserted", ample_asserted);

  auto* qcheck = app.add_subcommand("qcheck", "Q-divisor adjoint criteria");
  qcheck->add_option("file", file)->required();
  qcheck->add_option("--divisor", divisor)->required();
  qcheck->add_flag("--very-ample", very_ample);
  qcheck->add_flag("--ample-asserted", ample_asserted);

  auto* report = app.add_subcommand("report", "Fixture catalog or surface profile");
  report->add_option("file", report_file);
  report->add_option("--line-bundle", report_lb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  Outcome out;
  try {
    if (*validate) out = cmd_validate(file);
    else if (*reider) out = cmd_reider(file, lb, point, very_ample, g.bound);
    else if (*seshadri) out = cmd_seshadri(file, lb, point, points, jets, g.bound);
    else if (*zariski) out = cmd_zariski(file, divisor);
    else if (*mumford) out = cmd_mumford(surface, exceptional, gram, incidences, meet, base);
    else if (*matsusaka) out = cmd_matsusaka(file, lb);
    else if (*blowup) out = cmd_blowup(file, point_req, g.output);
    else if (*bundle) out = cmd_bundle(file, c1, c2, twist_by, destabilize, ample, g.bound);
    else if (*certify) out = cmd_certify_jets(file, lb, k, divisor, point_req, s, ample_asserted);
    else if (*qcheck) out = cmd_qcheck(file, divisor, very_ample, ample_asserted);
    else if (*report) out = cmd_report(report_file, report_lb);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }

  const std::string text = g.format == "json" ? out.doc.dump(2) + "\n" : render_text(out.doc);
  if (!g.output.empty() && !*blowup) {
    std::ofstream f(g.output);
    if (!f) {
      std::cerr << "input error: cannot write " << g.output << "\n";
      return kInputError;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return out.code;
}
