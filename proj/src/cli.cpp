#include "elasto/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "elasto/boundary.hpp"
#include "elasto/verify.hpp"

namespace elasto::cli {

using json = nlohmann::ordered_json;

namespace {

std::string mode_name(Mode m) { return m == Mode::Exact ? "exact" : "exact+viscous"; }

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "exact+viscous") return Mode::ExactViscous;
  throw config_error("mode: expected \"exact\" or \"exact+viscous\", got \"" + s + "\"");
}

void require(bool ok, const std::string& field, const std::string& what, double got) {
  if (ok) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << field << ": " << what << " (got " << got << ")";
  throw config_error(msg.str());
}

}  // namespace

void validate(const ProblemConfig& c) {
  require(std::isfinite(c.k) && c.k > 0.0, "k", "must be finite and > 0", c.k);
  require(std::isfinite(c.u_b), "ub", "must be finite", c.u_b);
  require(std::isfinite(c.sigma_b), "sb", "must be finite", c.sigma_b);
  require(std::isfinite(c.u_0), "u0", "must be finite", c.u_0);
  require(std::isfinite(c.sigma_0), "s0", "must be finite", c.sigma_0);
  require(std::isfinite(c.t) && c.t > 0.0, "t", "must be finite and > 0", c.t);
  require(std::isfinite(c.x_max) && c.x_max > 0.0, "xmax", "must be finite and > 0", c.x_max);
  require(c.nx >= 2, "nx", "must be >= 2", c.nx);
  if (c.mode == Mode::ExactViscous) {
    require(std::isfinite(c.viscous.epsilon) && c.viscous.epsilon > 0.0, "viscous.epsilon",
            "must be finite and > 0", c.viscous.epsilon);
    require(c.viscous.nx >= 16, "viscous.nx", "must be >= 16", c.viscous.nx);
    require(c.viscous.cfl > 0.0 && c.viscous.cfl < 1.0, "viscous.cfl", "must lie in (0, 1)",
            c.viscous.cfl);
  }
}

ProblemConfig load_config(const std::filesystem::path& path, ProblemConfig c) {
  std::ifstream in(path);
  if (!in) throw config_error("config: cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw config_error("config: " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw config_error("config: top level must be an object");

  auto number = [](const json& v, const std::string& key) {
    if (!v.is_number()) throw config_error(key + ": expected a number");
    return v.get<double>();
  };
  auto integer = [](const json& v, const std::string& key) {
    if (!v.is_number_integer()) throw config_error(key + ": expected an integer");
    return v.get<int>();
  };

  for (const auto& [key, v] : j.items()) {
    if (key == "k") c.k = number(v, key);
    else if (key == "ub") c.u_b = number(v, key);
    else if (key == "sb") c.sigma_b = number(v, key);
    else if (key == "u0") c.u_0 = number(v, key);
    else if (key == "s0") c.sigma_0 = number(v, key);
    else if (key == "t") c.t = number(v, key);
    else if (key == "xmax") c.x_max = number(v, key);
    else if (key == "nx") c.nx = integer(v, key);
    else if (key == "out") {
      if (!v.is_string()) throw config_error("out: expected a string");
      c.out = v.get<std::string>();
    } else if (key == "mode") {
      if (!v.is_string()) throw config_error("mode: expected a string");
      c.mode = parse_mode(v.get<std::string>());
    } else if (key == "viscous") {
      if (!v.is_object()) throw config_error("viscous: expected an object");
      for (const auto& [vk, vv] : v.items()) {
        if (vk == "epsilon") c.viscous.epsilon = number(vv, "viscous.epsilon");
        else if (vk == "nx") c.viscous.nx = integer(vv, "viscous.nx");
        else if (vk == "cfl") c.viscous.cfl = number(vv, "viscous.cfl");
        else throw config_error("viscous." + vk + ": unknown key");
      }
    } else {
      throw config_error(key + ": unknown key");
    }
  }
  return c;
}

namespace {

json to_json(const State& s) { return json{{"u", s.u}, {"sigma", s.sigma}}; }

json to_json(const Wave& w) {
  json j;
  j["family"] = family_index(w.family);
  if (const auto* s = std::get_if<Shock>(&w.kind)) {
    j["kind"] = "shock";
    j["speed"] = s->speed;
  } else {
    const auto& r = std::get<Rarefaction>(w.kind);
    j["kind"] = "rarefaction";
    j["xi_lo"] = r.xi_lo;
    j["xi_hi"] = r.xi_hi;
  }
  j["left"] = to_json(w.left);
  j["right"] = to_json(w.right);
  j["strength"] = w.strength();
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << body;
}

}  // namespace

int run(const ProblemConfig& cfg, std::ostream& diag) {
  try {
    validate(cfg);
  } catch (const config_error& e) {
    diag << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  const Params p(cfg.k);
  const State boundary{cfg.u_b, cfg.sigma_b};
  const State initial{cfg.u_0, cfg.sigma_0};

  QuarterPlaneSolution sol;
  try {
    sol = solve_ibvp(boundary, initial, p);
  } catch (const wave_overlap_error& e) {
    diag << "verification error: " << e.what() << '\n';
    return kExitVerification;
  }
  const VerificationSummary check = verify_structure(sol.structure, p);

  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) {
    diag << "config error: out: cannot create " << cfg.out.string() << ": " << ec.message()
         << '\n';
    return kExitConfig;
  }

  json report;
  report["schema"] = kReportSchema;
  report["params"] = {{"k", cfg.k}};
  report["boundary"] = to_json(boundary);
  report["initial"] = to_json(initial);
  report["mode"] = mode_name(cfg.mode);
  report["case"] = to_string(sol.label);
  report["sonic"] = sol.sonic;
  report["region"] = to_string(sol.region.label);
  report["signed_distances"] = {{"d1", sol.region.distances.d1},
                                {"d2", sol.region.distances.d2}};
  report["intermediate_state"] = to_json(sol.structure.middle);
  json waves = json::array();
  if (sol.structure.wave1) waves.push_back(to_json(*sol.structure.wave1));
  if (sol.structure.wave2) waves.push_back(to_json(*sol.structure.wave2));
  report["waves"] = waves;
  json visible = json::array();
  for (const Wave& w : sol.visible_waves) visible.push_back(to_json(w));
  report["visible_waves"] = visible;
  report["trace"] = to_json(sol.trace);
  report["verification"] = {{"max_rh_residual", check.max_rh_residual},
                            {"lax", check.lax_ok},
                            {"fan_continuity_error", check.fan_continuity_error},
                            {"fans_increasing", check.fans_increasing},
                            {"wave_ordering", check.ordered},
                            {"passed", check.passed()}};

  ViscousField samples;
  samples.t = cfg.t;
  for (int i = 1; i <= cfg.nx; ++i) {
    const double x = cfg.x_max * i / cfg.nx;
    const State s = sample(sol, x, cfg.t, p);
    samples.x.push_back(x);
    samples.u.push_back(s.u);
    samples.sigma.push_back(s.sigma);
  }
  report["samples"] = {{"file", "samples.csv"}, {"t", cfg.t}, {"nx", cfg.nx},
                       {"x_max", cfg.x_max}};

  try {
    if (cfg.mode == Mode::ExactViscous) {
      ViscousConfig vc;
      vc.epsilon = cfg.viscous.epsilon;
      vc.x_min = 0.0;
      vc.x_max = cfg.x_max;
      vc.nx = cfg.viscous.nx;
      vc.t_end = cfg.t;
      vc.cfl = cfg.viscous.cfl;
      const ViscousField field = viscous_solve(boundary, initial, p, vc);
      std::ostringstream csv;
      write_csv(csv, field);
      write_file(cfg.out / "viscous.csv", csv.str());
      report["viscous"] = {{"file", "viscous.csv"},
                           {"epsilon", vc.epsilon},
                           {"nx", vc.nx},
                           {"cfl", vc.cfl},
                           {"l1_distance", l1_distance(field, sol, cfg.t, p)}};
    }
    std::ostringstream csv;
    write_csv(csv, samples);
    write_file(cfg.out / "samples.csv", csv.str());
    write_file(cfg.out / "report.json", report.dump(2) + "\n");
  } catch (const std::exception& e) {
    diag << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  if (!check.passed()) {
    diag << "verification error: constructed solution failed its admissibility checks\n";
    return kExitVerification;
  }
  return kExitOk;
}

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the quarter-plane Riemann problem of the elastodynamics system"};
  std::string config_path, mode, out;
  double k = 0, ub = 0, sb = 0, u0 = 0, s0 = 0, t = 0, xmax = 0, eps = 0, cfl = 0;
  int nx = 0, visc_nx = 0;
  app.add_option("--config", config_path, "JSON problem description");
  auto* o_k = app.add_option("--k", k, "elastic wave speed");
  auto* o_ub = app.add_option("--ub", ub, "boundary velocity");
  auto* o_sb = app.add_option("--sb", sb, "boundary stress");
  auto* o_u0 = app.add_option("--u0", u0, "initial velocity");
  auto* o_s0 = app.add_option("--s0", s0, "initial stress");
  auto* o_t = app.add_option("--t", t, "sampling time");
  auto* o_xmax = app.add_option("--xmax", xmax, "right end of the sampled interval");
  auto* o_nx = app.add_option("--nx", nx, "number of sample points in (0, xmax]");
  auto* o_mode = app.add_option("--mode", mode, "exact | exact+viscous");
  auto* o_out = app.add_option("--out", out, "output directory");
  auto* o_eps = app.add_option("--eps", eps, "viscosity of the oracle run");
  auto* o_vnx = app.add_option("--visc-nx", visc_nx, "grid points of the oracle run");
  auto* o_cfl = app.add_option("--cfl", cfl, "CFL number of the oracle run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  ProblemConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config(config_path, cfg);
    if (o_k->count()) cfg.k = k;
    if (o_ub->count()) cfg.u_b = ub;
    if (o_sb->count()) cfg.sigma_b = sb;
    if (o_u0->count()) cfg.u_0 = u0;
    if (o_s0->count()) cfg.sigma_0 = s0;
    if (o_t->count()) cfg.t = t;
    if (o_xmax->count()) cfg.x_max = xmax;
    if (o_nx->count()) cfg.nx = nx;
    if (o_mode->count()) cfg.mode = parse_mode(mode);
    if (o_out->count()) cfg.out = out;
    if (o_eps->count()) cfg.viscous.epsilon = eps;
    if (o_vnx->count()) cfg.viscous.nx = visc_nx;
    if (o_cfl->count()) cfg.viscous.cfl = cfl;
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run(cfg, std::cerr);
}

}  // namespace elasto::cli
