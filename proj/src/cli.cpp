#include "frobnd/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "frobnd/growth.hpp"
#include "frobnd/rigidity.hpp"
#include "json.hpp"

namespace frobnd {
namespace {

using json = nlohmann::json;

constexpr double kNewtonTolerance = 1e-10;
constexpr double kInteriorMargin = 1e-9;
constexpr double kTieTolerance = 1e-9;

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

json vec(const IntVector& v) { return json(v); }

json vecs(const std::vector<IntVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec(v));
  return a;
}

json reals(const std::vector<double>& v) {
  json a = json::array();
  for (double e : v) a.push_back(round12(e));
  return a;
}

json rationals(const RationalVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(format(q));
  return a;
}

std::string big(const BigInt& v) { return v.str(); }

VectorSetFile load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_vector_set(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

struct Settings {
  std::vector<std::string> inputs;
  std::string output;
  int kmax = 200;
  int points = 90;
  double tolerance = 1e-8;
  std::uint64_t iteration_cap = kDefaultIterationCap;
  std::string mode = "auto";
  std::string z;
};

json report(const std::string& command, const Settings& st, const std::vector<VectorSetFile>& files) {
  json r;
  r["command"] = command;
  json digests = json::array();
  for (const auto& f : files) digests.push_back(fnv1a_hex(canonical_json(f)));
  r["input_digests"] = digests;
  r["tolerances"] = {{"tolerance", st.tolerance},       {"newton_tolerance", kNewtonTolerance},
                     {"interior_margin", kInteriorMargin}, {"tie_tolerance", kTieTolerance},
                     {"kmax", st.kmax},                  {"points", st.points},
                     {"iteration_cap", st.iteration_cap}};
  return r;
}

IntVector parse_point(const std::string& text, std::size_t dim) {
  IntVector z;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      z.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad coordinate '" + item + "' in --z");
    }
  }
  if (z.size() != dim) throw Error(ErrorKind::ParseError, "--z needs " + std::to_string(dim) + " coordinates");
  return z;
}

int cmd_analyze(const Settings& st, std::ostream& out) {
  const VectorSetFile f = load(st.inputs.at(0));
  const VectorSet x = validate(f.vectors, f.dim);
  const SaturationContext ctx = saturation_context(x);
  json j;
  j["report"] = report("analyze", st, {f});
  if (f.label) j["label"] = *f.label;
  j["dim"] = x.dim();
  j["vectors"] = vecs(x.vectors());
  j["alpha"] = rationals(x.alpha());
  j["delta"] = round12(x.delta());
  j["lattice_basis"] = vecs(x.lattice().basis);
  j["determinant"] = big(x.lattice().determinant);
  if (x.coplanarity().coplanar())
    j["eta"] = rationals(*x.coplanarity().eta);
  else
    j["eta"] = "not coplanar";
  j["extreme_rays"] = vecs(x.cone().extreme_rays);
  j["facet_normals"] = vecs(x.cone().facet_normals);
  j["faces2"] = x.cone().faces2;
  j["omega_star"] = vecs(ctx.omega_star);
  j["M"] = ctx.M;
  j["g0"] = vec(ctx.g0);
  j["R0"] = round12(ctx.r0);
  j["R0_squared"] = ctx.r0_squared;
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_frobenius(const Settings& st, std::ostream& out) {
  const VectorSetFile f = load(st.inputs.at(0));
  const VectorSet x = validate(f.vectors, f.dim);
  const SaturationContext ctx = saturation_context(x);
  const FrobeniusSet fs = frobenius_set(x, ctx);
  json j;
  j["report"] = report("frobenius", st, {f});
  if (f.label) j["label"] = *f.label;
  j["apexes"] = vecs(fs.apexes);
  j["rounds"] = fs.rounds;
  j["g0"] = vec(ctx.g0);
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_multiplicity(const Settings& st, std::ostream& out) {
  const VectorSetFile f = load(st.inputs.at(0));
  const VectorSet x = validate(f.vectors, f.dim);
  const IntVector z = parse_point(st.z, x.dim());
  std::vector<Rational> upper;
  for (const auto& h : x.cone().halfspaces) upper.emplace_back(std::max<std::int64_t>(0, dot(h, z)));
  MultiplicityTable table = MultiplicityTable::covering(x, upper);
  json j;
  j["report"] = report("multiplicity", st, {f});
  if (f.label) j["label"] = *f.label;
  j["z"] = vec(z);
  j["multiplicity"] = big(table.multiplicity(z));
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_gamma(const Settings& st, std::ostream& out, std::ostream& err) {
  const VectorSetFile f = load(st.inputs.at(0));
  const VectorSet x = validate(f.vectors, f.dim);
  CurveOptions opts;
  opts.k_max = st.kmax;
  if (st.mode == "closed")
    opts.mode = CurveMode::Closed;
  else if (st.mode == "empirical")
    opts.mode = CurveMode::Empirical;
  else if (st.mode == "both")
    opts.mode = CurveMode::Both;
  else
    opts.mode = CurveMode::Auto;
  const auto pts = gamma_curve(x, st.points, opts);

  const bool has_closed = !pts.empty() && pts[0].closed.has_value();
  const bool has_emp = !pts.empty() && pts[0].empirical.has_value();
  std::string header = x.dim() == 2 ? "angle" : "";
  for (std::size_t i = 0; i < x.dim(); ++i) header += (header.empty() ? "" : ",") + ("theta_" + std::to_string(i + 1));
  header += ",gamma";
  if (has_closed && has_emp) header += ",empirical";
  if (has_emp) header += ",residual";
  out << header << '\n';
  for (const auto& p : pts) {
    std::string row;
    if (p.angle) row = fixed12(*p.angle);
    for (double e : p.theta) row += (row.empty() ? "" : ",") + fixed12(e);
    row += "," + fixed12(has_closed ? *p.closed : *p.empirical);
    if (has_closed && has_emp) row += "," + fixed12(*p.empirical);
    if (has_emp) row += "," + fixed12(*p.residual);
    out << row << '\n';
  }
  err << report("gamma", st, {f}).dump() << '\n';
  return 0;
}

int cmd_rigidity(const Settings& st, std::ostream& out) {
  if (st.inputs.size() != 2) throw Error(ErrorKind::ParseError, "rigidity needs exactly two --input files");
  const VectorSetFile fx = load(st.inputs[0]);
  const VectorSetFile fy = load(st.inputs[1]);
  const VectorSet x = validate(fx.vectors, fx.dim);
  const VectorSet y = validate(fy.vectors, fy.dim);
  RigidityOptions opts;
  opts.tolerance = st.tolerance;
  opts.iteration_cap = st.iteration_cap;
  const RigidityVerdict v = same_growth(x, y, opts);
  json j;
  j["report"] = report("rigidity", st, {fx, fy});
  j["equivalent"] = v.equivalent;
  j["witness"] = to_string(v.witness);
  if (v.c) {
    j["c"] = format(*v.c);
    j["q"] = v.q;
    j["p"] = v.p;
  }
  if (v.witness == WitnessKind::Pairing) {
    json pairs = json::array();
    for (const auto& [vv, count] : v.x_iterate->multiset) pairs.push_back({{"vector", vv}, {"count", count}});
    j["pairing"] = pairs;
  }
  if (v.theta) {
    j["theta"] = reals(*v.theta);
    j["gamma_x"] = round12(*v.gamma_x);
    j["gamma_y"] = round12(*v.gamma_y);
  }
  json notes;
  notes["cones_equal"] = v.notes.cones_equal;
  notes["eta_parallel"] = v.notes.eta_parallel;
  if (v.notes.eta_x) notes["eta_x"] = rationals(*v.notes.eta_x);
  if (v.notes.eta_y) notes["eta_y"] = rationals(*v.notes.eta_y);
  notes["probes"] = v.notes.probes;
  if (v.notes.max_gamma_gap) notes["max_gamma_gap"] = round12(*v.notes.max_gamma_gap);
  if (v.notes.max_standard_t_gap) notes["max_standard_t_gap"] = round12(*v.notes.max_standard_t_gap);
  notes["messages"] = v.notes.messages;
  j["notes"] = notes;
  out << j.dump(2) << '\n';
  return v.equivalent ? 0 : 1;
}

}  // namespace

VectorSetFile parse_vector_set(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + e.what());
  }
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::ParseError, msg); };
  if (!j.is_object()) fail("top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "dim" && key != "vectors" && key != "label") fail("unknown key '" + key + "'");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1)
    fail("'dim' must be a positive integer");
  if (!j.contains("vectors") || !j["vectors"].is_array()) fail("'vectors' must be an array");
  VectorSetFile f;
  f.dim = j["dim"].get<std::size_t>();
  for (std::size_t r = 0; r < j["vectors"].size(); ++r) {
    const auto& row = j["vectors"][r];
    if (!row.is_array()) fail("vectors[" + std::to_string(r) + "] must be an array");
    IntVector v;
    for (const auto& e : row) {
      if (!e.is_number_integer()) fail("vectors[" + std::to_string(r) + "] has a non-integer entry");
      v.push_back(e.get<std::int64_t>());
    }
    f.vectors.push_back(std::move(v));
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail("'label' must be a string");
    f.label = j["label"].get<std::string>();
  }
  return f;
}

std::string canonical_json(const VectorSetFile& file) {
  json j;
  j["dim"] = file.dim;
  j["vectors"] = vecs(file.vectors);
  if (file.label) j["label"] = *file.label;
  return j.dump();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::InconclusiveSampling:
      return 3;
    default:
      return 2;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semigroups of integer vectors in a half-space", "frobnd"};
  app.require_subcommand(1);
  Settings st;

  auto single = [&](CLI::App* sub) {
    sub->add_option("-i,--input", st.inputs, "vector-set JSON file")->required()->expected(1);
    sub->add_option("-o,--output", st.output, "output path (default stdout)");
  };
  auto* analyze = app.add_subcommand("analyze", "lattice, cone, eta and saturation data");
  single(analyze);
  auto* frob = app.add_subcommand("frobenius", "apexes of the maximal saturated cones");
  single(frob);
  auto* mult = app.add_subcommand("multiplicity", "exact path count m(z)");
  single(mult);
  mult->add_option("--z", st.z, "target point, comma separated")->required();
  auto* gamma = app.add_subcommand("gamma", "directional growth curve as CSV");
  single(gamma);
  gamma->add_option("--mode", st.mode, "closed|empirical|both|auto")
      ->check(CLI::IsMember({"auto", "closed", "empirical", "both"}));
  gamma->add_option("--kmax", st.kmax, "empirical horizon")->check(CLI::PositiveNumber);
  gamma->add_option("--points", st.points, "number of directions")->check(CLI::PositiveNumber);
  auto* rig = app.add_subcommand("rigidity", "compare growth functions of two coplanar sets");
  rig->add_option("-i,--input", st.inputs, "two vector-set JSON files")->required()->expected(2);
  rig->add_option("-o,--output", st.output, "output path (default stdout)");
  rig->add_option("--tolerance", st.tolerance, "growth gap tolerance");
  rig->add_option("--iteration-cap", st.iteration_cap, "largest admissible m^p");

  std::vector<const char*> argv{"frobnd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const auto started = std::chrono::steady_clock::now();
  std::ostringstream buffer;
  int code = 0;
  try {
    if (analyze->parsed())
      code = cmd_analyze(st, buffer);
    else if (frob->parsed())
      code = cmd_frobenius(st, buffer);
    else if (mult->parsed())
      code = cmd_multiplicity(st, buffer);
    else if (gamma->parsed())
      code = cmd_gamma(st, buffer, err);
    else
      code = cmd_rigidity(st, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  if (st.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(st.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << st.output << '\n';
      return 2;
    }
    file << buffer.str();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "wall_time_s " << seconds << '\n';
  return code;
}

}  // namespace frobnd
