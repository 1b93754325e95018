#include "gkz/cli.hpp"

#include "gkz/lattice.hpp"
#include "gkz/orbits.hpp"
#include "gkz/parameter.hpp"
#include "gkz/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace gkz::cli {

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "faces",   "normal-check", "homogeneous-check", "supports",     "classify-mgm", "gamma",
      "lambda",  "dual",         "restrict",          "project",      "mgm-restrict", "mgm-project",
      "presentation", "toric-ideal", "verify",        "catalog"};
  return names;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return 1;
    case ErrorKind::ScaleLimit: return 3;
    case ErrorKind::Internal: return 4;
    default: return 2;
  }
}

namespace {

std::string_view hypothesis(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFullRank: return "rank A = d (the cone R>=0 A is full-dimensional)";
    case ErrorKind::LatticeIndex: return "ZA = Z^d";
    case ErrorKind::NotPointed: return "pointed semigroup: R>=0 A contains no line";
    case ErrorKind::NotNormal: return "normality of S_A, required by the fiber/cofiber support criteria and the restriction/projection theorem";
    case ErrorKind::NotHomogeneous: return "homogeneity of A, required by the duality theorem";
    case ErrorKind::NotInCoset: return "beta in CF + Z^d";
    case ErrorKind::NotUpwardClosed: return "U is a torus-stable open set: its face set is upward closed";
    case ErrorKind::EmptyFace: return "nonempty face";
    case ErrorKind::LambdaInfeasible: return "the facet sign conditions on lambda are realisable on the coset";
    case ErrorKind::ScaleLimit: return "desk-scale caps (S-pairs, time, Hilbert basis degree)";
    default: return "";
  }
}

Json int_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return to_string(v);
}

Json vec(std::span<const Integer> v) { return to_json(v); }
Json vec(std::span<const GaussRat> v) { return to_json(v); }

// Face sets leave sorted by (size, lex) of their column lists.
Json face_sets(const Cone& cone, const OrbitSet& faces) {
  std::vector<ColumnSet> sets;
  for (auto f : faces) sets.push_back(cone.faces().at(f).columns);
  std::sort(sets.begin(), sets.end(), [](const ColumnSet& x, const ColumnSet& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(columns_json(s));
  return out;
}

Json degrees_json(const std::vector<std::pair<long, Integer>>& degrees) {
  Json out = Json::array();
  for (const auto& [deg, mult] : degrees) out.push_back(Json::array({deg, int_json(mult)}));
  return out;
}

const Json* find_key(const Json& instance, std::initializer_list<const char*> keys) {
  for (auto k : keys)
    if (instance.contains(k)) return &instance.at(k);
  return nullptr;
}

RestrictionMode parse_mode(const std::string& text) {
  if (text == "default") return RestrictionMode::Default;
  if (text == "as-printed") return RestrictionMode::AsPrinted;
  fail(ErrorKind::InvalidInput, "mode must be \"default\" or \"as-printed\", got \"" + text + "\"");
}

Options merge_options(const Json& instance, Options out) {
  const Json* o = find_key(instance, {"options"});
  if (!o) return out;
  if (!o->is_object()) fail(ErrorKind::InvalidInput, "\"options\" must be an object");
  for (const auto& [key, value] : o->items()) {
    if (key == "mode") {
      if (!value.is_string()) fail(ErrorKind::InvalidInput, "options.mode must be a string");
      out.mode = parse_mode(value.get<std::string>());
    } else if (key == "max_spairs") {
      if (!value.is_number_unsigned()) fail(ErrorKind::InvalidInput, "options.max_spairs must be a nonnegative integer");
      out.caps.max_spairs = value.get<std::size_t>();
    } else if (key == "time_cap") {
      if (!value.is_number() || value.get<double>() <= 0) fail(ErrorKind::InvalidInput, "options.time_cap must be a positive number of seconds");
      out.caps.time_cap = std::chrono::duration<double>(value.get<double>());
    } else if (key == "hilbert_degree_cap") {
      out.hilbert_degree_cap = integer_from_json(value);
    } else {
      fail(ErrorKind::InvalidInput, "unknown option \"" + key + "\"");
    }
  }
  return out;
}

// An instance after validation, with A re-expressed in a Z-basis of ZA when
// the columns do not generate Z^d.
struct Prepared {
  IntMatrix raw;
  IntMatrix a;
  std::optional<Parameter> beta;
  Json coordinates;  // null when no change was needed
  Options options;

  NormalityOptions normality() const { return {options.hilbert_degree_cap, NormalityOptions{}.max_candidates}; }
  const Parameter& need_beta() const {
    if (!beta) fail(ErrorKind::InvalidInput, "this command needs \"beta\"");
    return *beta;
  }
};

Prepared prepare(const Json& instance, const Options& defaults, bool change_coordinates) {
  if (!instance.is_object()) fail(ErrorKind::InvalidInput, "the instance must be a JSON object");
  Prepared p;
  p.options = merge_options(instance, defaults);
  const Json* a = find_key(instance, {"A", "matrix"});
  if (!a) fail(ErrorKind::InvalidInput, "the instance needs \"A\"");
  p.raw = matrix_from_json(*a);
  p.a = p.raw;
  if (const Json* b = find_key(instance, {"beta"})) {
    p.beta = parameter_from_json(*b);
    if (p.beta->size() != p.raw.rows())
      fail(ErrorKind::InvalidInput, "beta has " + std::to_string(p.beta->size()) + " entries but A has " +
                                        std::to_string(p.raw.rows()) + " rows");
  }
  if (!change_coordinates) return p;
  if (rank(p.raw) < p.raw.rows()) fail(ErrorKind::NotFullRank, "rank A < d: the cone is not full-dimensional");
  LatticeCoordinates lc = column_lattice_coordinates(p.raw);
  if (lc.is_identity) return p;
  p.a = lc.coordinates;
  Json basis = Json::array();
  for (std::size_t k = 0; k < lc.basis.cols(); ++k) basis.push_back(vec(lc.basis.column(k)));
  p.coordinates = Json{{"basis", basis}, {"A", to_json(p.a)}};
  if (p.beta) {
    auto moved = solve_gaussian(lc.basis, *p.beta);
    if (!moved) fail(ErrorKind::Internal, "beta has no coordinates in the basis of ZA");
    p.beta = *moved;
    p.coordinates["beta"] = vec(*p.beta);
  }
  return p;
}

std::size_t face_arg(const Json& instance, const Cone& cone) {
  const Json* f = find_key(instance, {"face"});
  if (!f) fail(ErrorKind::InvalidInput, "this command needs \"face\"");
  ColumnSet columns = columns_from_json(*f);
  for (auto c : columns)
    if (c >= cone.columns())
      fail(ErrorKind::InvalidInput, "column index " + std::to_string(c) + " is out of range (0-based)");
  return cone.face_index(columns);
}

OrbitSet open_set_arg(const Json& instance, const Cone& cone) {
  const Json* u = find_key(instance, {"open_set"});
  OrbitSet out;
  if (!u) {
    for (std::size_t f = 0; f < cone.faces().size(); ++f) out.push_back(f);
    return out;
  }
  if (!u->is_array()) fail(ErrorKind::InvalidInput, "\"open_set\" must be a list of faces");
  for (const auto& face : *u) out.push_back(cone.face_index(columns_from_json(face)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json facet_values(const Cone& cone, std::span<const GaussRat> beta) {
  Json out = Json::array();
  for (const auto& g : cone.facets())
    out.push_back(Json{{"facet", columns_json(g.columns)},
                       {"h", vec(g.h.coefficients)},
                       {"value", to_json(g.h(beta))},
                       {"class", std::string(to_string(classify_h(g.h, beta)))}});
  return out;
}

Json descriptor_json(const ModuleDescriptor& m, const Cone& cone, RestrictionMode mode) {
  return Json{{"zero", m.zero},
              {"face", columns_json(cone.faces().at(m.face).columns)},
              {"lambda", m.lambda ? vec(*m.lambda) : Json(nullptr)},
              {"degrees", degrees_json(m.degrees())},
              {"mode", std::string(to_string(mode))}};
}

Json mgm_json(const MgmDescriptor& m, const Cone& cone) {
  Json classes = Json::array();
  for (const auto& c : m.classes) {
    Json modulus = Json::array();
    for (const auto& v : c.modulus.vectors) modulus.push_back(vec(v));
    classes.push_back(Json{{"representative", vec(c.representative)}, {"modulus", modulus}});
  }
  return Json{{"zero", m.zero},
              {"face", columns_json(cone.faces().at(m.face).columns)},
              {"classes", classes},
              {"face_open_set", face_sets(cone, m.face_open_set)},
              {"exterior_rank", m.exterior_rank},
              {"shift", m.shift},
              {"degrees", degrees_json(m.degrees())}};
}

Json binomials_json(const std::vector<BinomialGenerator>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) out.push_back(Json{{"u_plus", vec(g.u_plus)}, {"u_minus", vec(g.u_minus)}});
  return out;
}

Json cmd_faces(const Prepared& p) {
  Cone cone(p.a);
  Json facets = Json::array();
  for (const auto& f : cone.facets())
    facets.push_back(Json{{"columns", columns_json(f.columns)}, {"h", vec(f.h.coefficients)}});
  Json faces = Json::array();
  for (std::size_t i = 0; i < cone.faces().size(); ++i) {
    const Face& f = cone.faces()[i];
    FaceQuantities q = cone.quantities(i);
    faces.push_back(Json{{"columns", columns_json(f.columns)},
                         {"rank", f.rank},
                         {"codimension", q.codimension},
                         {"missing_columns", q.missing_columns},
                         {"containing_facets", f.containing_facets}});
  }
  return Json{{"facets", facets}, {"faces", faces}, {"pointed", cone.pointed()}};
}

Json cmd_normal_check(const Prepared& p) {
  NormalityCertificate cert = is_normal(p.raw, p.normality());
  Json hilbert = Json::array();
  for (const auto& h : cert.hilbert_basis) hilbert.push_back(vec(h));
  return Json{{"normal", cert.normal},
              {"hilbert_basis", hilbert},
              {"witness", cert.witness ? vec(*cert.witness) : Json(nullptr)},
              {"grading", vec(cert.grading)}};
}

Json cmd_homogeneous_check(const Prepared& p) {
  auto c = is_homogeneous(p.raw);
  return Json{{"homogeneous", c.has_value()}, {"c", c ? to_json(std::span<const Rational>(*c)) : Json(nullptr)}};
}

Json run_prepared(const std::string& command, const Json& instance, const Prepared& p) {
  if (command == "faces") return cmd_faces(p);
  if (command == "gamma") {
    Cone cone(p.a);
    IntVector gamma = find_gamma(cone, p.need_beta());
    return Json{{"gamma", vec(gamma)}, {"facet_values", facet_values(cone, p.need_beta())}};
  }
  if (command == "verify") return verify_instance(p.a, p.beta, p.normality());

  NormalCone normal(Cone(p.a), p.normality());
  const Cone& cone = normal.cone();
  const Parameter& beta = p.need_beta();
  if (command == "supports")
    return Json{{"fsupp", face_sets(cone, fsupp(normal, beta))}, {"cofsupp", face_sets(cone, cofsupp(normal, beta))}};
  if (command == "classify-mgm") {
    MgmClassification c = classify_mgm(normal, beta);
    return Json{{"mgm", c.mgm}, {"dual_mgm", c.dual_mgm}, {"common", face_sets(cone, c.common)}};
  }
  if (command == "lambda") {
    std::size_t face = face_arg(instance, cone);
    return Json{{"face", columns_json(cone.faces()[face].columns)}, {"lambda", vec(find_lambda(normal, face, beta))}};
  }
  if (command == "dual") {
    DualSystem ds = dual_system(normal, beta);
    return Json{{"beta_prime", vec(ds.beta_prime)},
                {"homogenizing", to_json(std::span<const Rational>(ds.homogenizing))},
                {"fsupp_dual", face_sets(cone, ds.fsupp_dual)},
                {"cofsupp_dual", face_sets(cone, ds.cofsupp_dual)}};
  }
  if (command == "restrict")
    return descriptor_json(restriction(normal, face_arg(instance, cone), beta, p.options.mode), cone, p.options.mode);
  if (command == "project")
    return descriptor_json(projection(normal, face_arg(instance, cone), beta), cone, p.options.mode);
  if (command == "mgm-restrict" || command == "mgm-project") {
    std::size_t face = face_arg(instance, cone);
    OrbitSet u = open_set_arg(instance, cone);
    auto m = command == "mgm-project" ? mgm_project(cone, face, u, beta) : mgm_restrict_dual(cone, face, u, beta);
    return mgm_json(m, cone);
  }
  fail(ErrorKind::InvalidInput, "unknown command \"" + command + "\"");
}

}  // namespace

Json error_report(const Error& error) {
  std::string_view h = hypothesis(error.kind());
  return Json{{"error", Json{{"kind", std::string(to_string(error.kind()))},
                             {"message", error.what()},
                             {"hypothesis", h.empty() ? Json(nullptr) : Json(std::string(h))}}}};
}

Json run(const std::string& command, const Json& instance, const Options& defaults) {
  if (command == "catalog") fail(ErrorKind::InvalidInput, "catalog takes a JSON-lines file, not an instance");
  if (std::find(commands().begin(), commands().end(), command) == commands().end())
    fail(ErrorKind::InvalidInput, "unknown command \"" + command + "\"");

  if (command == "normal-check") return cmd_normal_check(prepare(instance, defaults, false));
  if (command == "homogeneous-check") return cmd_homogeneous_check(prepare(instance, defaults, false));
  if (command == "presentation" || command == "toric-ideal") {
    Prepared p = prepare(instance, defaults, false);
    if (command == "toric-ideal")
      return Json{{"toric_ideal", binomials_json(toric_ideal_generators(p.raw, p.options.caps))}};
    Parameter beta = p.beta.value_or(Parameter(p.raw.rows(), GaussRat(0)));
    Json euler = Json::array();
    for (const auto& e : euler_operators(p.raw, beta))
      euler.push_back(Json{{"row", e.row}, {"coefficients", vec(e.coefficients)}, {"beta", to_json(e.beta)}});
    return Json{{"euler", euler}, {"lattice_ideal", binomials_json(lattice_ideal_generators(p.raw))}};
  }

  Prepared p = prepare(instance, defaults, true);
  Json out = run_prepared(command, instance, p);
  if (!p.coordinates.is_null()) out["coordinates"] = p.coordinates;
  return out;
}

namespace {

// Report for one catalog line, and its exit code.
std::pair<Json, int> run_line(const std::string& line, std::size_t number, const Options& defaults) {
  Json entry{{"line", number}};
  try {
    Json instance = Json::parse(line);
    if (!instance.is_object() || !instance.contains("command") || !instance["command"].is_string())
      fail(ErrorKind::InvalidInput, "every catalog line needs a string \"command\"");
    std::string command = instance["command"];
    entry["command"] = command;
    Json result = run(command, instance, defaults);
    int code = command == "verify" && !result.value("ok", false) ? 4 : 0;
    entry["result"] = std::move(result);
    return {entry, code};
  } catch (const Json::parse_error& e) {
    entry.update(error_report(Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what())));
    return {entry, 1};
  } catch (const Error& e) {
    entry.update(error_report(e));
    return {entry, exit_code(e.kind())};
  }
}

}  // namespace

int run_catalog(std::istream& in, std::ostream& out, const Options& defaults) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.emplace_back(number, line);

  std::vector<std::optional<std::pair<Json, int>>> results(lines.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < lines.size();) {
      auto r = run_line(lines[i].second, lines[i].first, defaults);
      std::lock_guard lock(mutex);
      results[i] = std::move(r);
      ready.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < std::max<std::size_t>(1, defaults.parallel); ++t) pool.emplace_back(worker);

  int code = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return results[i].has_value(); });
    out << results[i]->first.dump() << '\n' << std::flush;
    code = std::max(code, results[i]->second);
  }
  return code;
}

int main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GKZ face, parameter and restriction/projection computations"};
  std::string command, input = "-", mode = "default";
  std::size_t max_spairs = GroebnerCaps{}.max_spairs, parallel = 1;
  double time_cap = GroebnerCaps{}.time_cap.count();
  std::string degree_cap;
  app.add_option("command", command, "Subcommand")->required()->check(CLI::IsMember(commands()));
  app.add_option("input", input, "Instance file, or - for standard input");
  app.add_option("--mode", mode, "Restriction sign condition")->check(CLI::IsMember({"default", "as-printed"}));
  app.add_option("--max-spairs", max_spairs, "Groebner S-pair cap");
  app.add_option("--time-cap", time_cap, "Groebner time cap in seconds")->check(CLI::PositiveNumber);
  app.add_option("--hilbert-degree-cap", degree_cap, "Degree cap for Hilbert basis candidates");
  app.add_option("--parallel", parallel, "Worker threads for catalog")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    Options options;
    options.mode = parse_mode(mode);
    options.caps.max_spairs = max_spairs;
    options.caps.time_cap = std::chrono::duration<double>(time_cap);
    if (!degree_cap.empty()) options.hilbert_degree_cap = integer_from_json(Json(degree_cap));
    options.parallel = parallel;

    std::ifstream file;
    std::istream* source = &in;
    if (input != "-") {
      file.open(input);
      if (!file) fail(ErrorKind::InvalidInput, "cannot read " + input);
      source = &file;
    }
    if (command == "catalog") return run_catalog(*source, out, options);

    Json instance;
    try {
      instance = Json::parse(*source);
    } catch (const Json::parse_error& e) {
      fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    Json report = run(command, instance, options);
    out << report.dump() << '\n';
    return command == "verify" && !report.value("ok", false) ? 4 : 0;
  } catch (const Error& e) {
    out << error_report(e).dump() << '\n';
    err << "gkz: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  }
}

}  // namespace gkz::cli
