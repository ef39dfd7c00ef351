#include "warpmech/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "warpmech/master.hpp"
#include "warpmech/recursion.hpp"
#include "warpmech/rng.hpp"

namespace warpmech {

using nlohmann::json;

namespace {

double require_positive(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number())
    throw ConfigError(std::string("missing or non-numeric field '") + field + "'");
  double v = j[field].get<double>();
  if (!(v > 0.0)) throw ConfigError(std::string("field '") + field + "' must be positive");
  return v;
}

VsProfile parse_profile(const json& j) {
  std::string kind = j.value("kind", "constant");
  if (kind == "constant") return VsProfile::constant(j.value("v0", 0.0));
  if (kind == "inverse_time") return VsProfile::inverse_time(j.value("c", 1.0));
  if (kind == "tabulated") {
    if (!j.contains("t") || !j.contains("v"))
      throw ConfigError("tabulated profile needs 't' and 'v' arrays");
    return VsProfile::tabulated(j["t"].get<std::vector<double>>(),
                                j["v"].get<std::vector<double>>());
  }
  throw ConfigError("unknown vs profile kind '" + kind + "'");
}

MetricModel parse_model(const json& j) {
  if (!j.contains("model")) throw ConfigError("missing field 'model'");
  const json& m = j["model"];
  std::string kind = m.value("kind", "");
  if (kind == "alcubierre")
    return MetricModel::alcubierre(m.contains("vs") ? parse_profile(m["vs"])
                                                    : VsProfile::constant(0.0));
  if (kind == "godel_exact") return MetricModel::godel_exact(require_positive(m, "a"));
  if (kind == "godel_approx") {
    if (!m.contains("omega_g")) throw ConfigError("godel_approx needs field 'omega_g'");
    return MetricModel::godel_approx(m["omega_g"].get<double>());
  }
  throw ConfigError("model.kind must be alcubierre, godel_exact or godel_approx");
}

BranchSpec parse_branch(const json& b, const MetricModel& model) {
  std::string kind = b.value("kind", "");
  double x0 = b.value("ship_x0", 0.0);
  if (kind == "wa") return BranchSpec::alcubierre_wa(model.profile, x0);
  if (kind == "wb") return BranchSpec::alcubierre_wb(model.profile, x0);
  if (kind == "degenerate") return BranchSpec::alcubierre_degenerate(model.profile, x0);
  if (kind == "godel")
    return BranchSpec::godel(b.contains("omega_g") ? b["omega_g"].get<double>()
                                                   : model.omega_g);
  throw ConfigError("branch.kind must be wa, wb, degenerate or godel");
}

}  // namespace

ScenarioConfig load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }

  ScenarioConfig cfg;
  cfg.model = parse_model(j);

  if (j.contains("initial_state")) {
    const json& s = j["initial_state"];
    auto q = s.value("q", std::vector<double>{0, 0, 0, 0});
    auto p = s.value("p", std::vector<double>{0, 0, 0, 0});
    if (q.size() != 4 || p.size() != 4)
      throw ConfigError("initial_state.q and .p must have four components");
    for (int i = 0; i < 4; ++i) {
      cfg.initial_state[slot_q(i)] = q[i];
      cfg.initial_state[slot_p(i)] = p[i];
    }
  }

  if (j.contains("integrator")) {
    const json& g = j["integrator"];
    std::string method = g.value("method", "implicit_midpoint");
    if (method == "implicit_midpoint")
      cfg.integrator.method = Method::ImplicitMidpoint;
    else if (method == "rk4")
      cfg.integrator.method = Method::RK4;
    else
      throw ConfigError("integrator.method must be implicit_midpoint or rk4");
    cfg.integrator.dt = require_positive(g, "dt");
    if (g.contains("fp_tol")) cfg.integrator.fp_tol = require_positive(g, "fp_tol");
    if (g.contains("fp_max_iter")) {
      cfg.integrator.fp_max_iter = g["fp_max_iter"].get<int>();
      if (cfg.integrator.fp_max_iter < 1)
        throw ConfigError("integrator.fp_max_iter must be at least 1");
    }
  }

  if (j.contains("t_span")) {
    auto span = j["t_span"].get<std::vector<double>>();
    if (span.size() != 2 || !(span[1] > span[0]))
      throw ConfigError("t_span must be [t0, t1] with t1 > t0");
    cfg.t0 = span[0];
    cfg.t1 = span[1];
  }

  if (j.contains("branch")) cfg.branch = parse_branch(j["branch"], cfg.model);

  if (j.contains("checks")) {
    for (const auto& c : j["checks"]) {
      CheckRequest req;
      req.name = c.value("name", "");
      if (req.name.empty()) throw ConfigError("each check entry needs a 'name'");
      if (c.contains("tolerance")) {
        double tol = c["tolerance"].get<double>();
        if (!(tol > 0.0)) throw ConfigError("check tolerance must be positive");
        req.tolerance = tol;
      }
      cfg.checks.push_back(req);
    }
  }

  cfg.seed = j.value("seed", 1ULL);
  if (j.contains("tol_scale")) cfg.tol_scale = require_positive(j, "tol_scale");

  if (j.contains("sample_box")) {
    const json& b = j["sample_box"];
    cfg.box.q_lo = b.value("q_lo", cfg.box.q_lo);
    cfg.box.q_hi = b.value("q_hi", cfg.box.q_hi);
    cfg.box.p_lo = b.value("p_lo", cfg.box.p_lo);
    cfg.box.p_hi = b.value("p_hi", cfg.box.p_hi);
    if (!(cfg.box.q_hi > cfg.box.q_lo) || !(cfg.box.p_hi > cfg.box.p_lo))
      throw ConfigError("sample_box bounds are inverted");
  }

  if (j.contains("output")) {
    cfg.trajectory_path = j["output"].value("trajectory", cfg.trajectory_path);
    cfg.report_path = j["output"].value("report", cfg.report_path);
  }

  if (j.contains("transform")) {
    const json& t = j["transform"];
    TransformSpec ts;
    ts.direction = t.value("direction", "to_action");
    if (ts.direction != "to_action" && ts.direction != "from_action")
      throw ConfigError("transform.direction must be to_action or from_action");
    if (t.contains("point")) {
      auto v = t["point"].get<std::vector<double>>();
      if (v.size() != 8) throw ConfigError("transform.point must have eight components");
      Vec8d p;
      std::copy(v.begin(), v.end(), p.begin());
      ts.point = p;
    }
    ts.csv_in = t.value("csv_in", "");
    ts.csv_out = t.value("csv_out", "");
    ts.degenerate_q1 = t.value("degenerate_q1", 0.0);
    if (!ts.point && ts.csv_in.empty())
      throw ConfigError("transform needs either 'point' or 'csv_in'");
    cfg.transform = ts;
  }

  return cfg;
}

// ---------------------------------------------------------------------------
// Trajectory driver and exports
// ---------------------------------------------------------------------------

namespace {

std::vector<Monitor> standard_monitors(const ScenarioConfig& cfg) {
  std::vector<Monitor> mons;
  MetricModel model = cfg.model;
  mons.push_back({"H", [model](const Vec8d& x) { return hamiltonian_value(model, x); }});
  if (cfg.branch && cfg.branch->kind != BranchKind::AlcubierreDegenerate) {
    BranchSpec br = *cfg.branch;
    for (int h = 1; h <= 4; ++h)
      mons.push_back({"TrT" + std::to_string(h), [br, h](const Vec8d& x) {
                        Vec8d X = to_action(br, x);
                        return action_trace_closed_form(X, h);
                      }});
  }
  return mons;
}

}  // namespace

Trajectory run_integration(const ScenarioConfig& cfg) {
  return integrate(cfg.model, cfg.initial_state, cfg.t0, cfg.t1, cfg.integrator,
                   standard_monitors(cfg));
}

void emit_plotdata(const Trajectory& traj, const std::string& path) {
  if (traj.times.empty()) throw ConfigError("cannot export an empty trajectory");
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw Error("cannot open '" + path + "' for writing");
  std::fputs("t,q1,q2,q3,q4,p1,p2,p3,p4", f);
  for (const auto& name : traj.monitor_names) std::fprintf(f, ",%s", name.c_str());
  std::fputc('\n', f);
  for (std::size_t n = 0; n < traj.times.size(); ++n) {
    std::fprintf(f, "%.17g", traj.times[n]);
    for (int i = 0; i < kDim; ++i) std::fprintf(f, ",%.17g", traj.states[n][i]);
    for (std::size_t k = 0; k < traj.monitors.size(); ++k)
      std::fprintf(f, ",%.17g", traj.monitors[k][n]);
    std::fputc('\n', f);
  }
  std::fclose(f);
}

int run_transform(const ScenarioConfig& cfg, std::string& out_text) {
  if (!cfg.transform) throw ConfigError("no 'transform' section in config");
  if (!cfg.branch) throw ConfigError("transform needs a 'branch' section");
  const TransformSpec& ts = *cfg.transform;
  const BranchSpec& br = *cfg.branch;

  auto map_point = [&](const Vec8d& x) -> std::vector<double> {
    if (br.kind == BranchKind::AlcubierreDegenerate) {
      if (ts.direction == "to_action") {
        DegeneratePoint d = degenerate_to_action(br, x);
        // Q1 and P1 are absent on this branch; emit the six mapped slots.
        return {d.Q[0], d.Q[1], d.Q[2], d.P[0], d.P[1], d.P[2]};
      }
      DegeneratePoint d;
      d.Q = {x[1], x[2], x[3]};
      d.P = {x[slot_p(1)], x[slot_p(2)], x[slot_p(3)]};
      Vec8d y = degenerate_from_action(br, d, ts.degenerate_q1);
      return std::vector<double>(y.begin(), y.end());
    }
    Vec8d y = ts.direction == "to_action" ? to_action(br, x) : from_action(br, x);
    return std::vector<double>(y.begin(), y.end());
  };

  auto format_row = [](const std::vector<double>& v) {
    std::string line;
    char buf[32];
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", v[i]);
      if (i) line += ',';
      line += buf;
    }
    return line;
  };

  if (ts.point) {
    out_text = format_row(map_point(*ts.point)) + "\n";
    return 0;
  }

  std::ifstream in(ts.csv_in);
  if (!in) throw ConfigError("cannot read transform input '" + ts.csv_in + "'");
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != 8) throw ConfigError("transform CSV rows need eight columns");
    Vec8d x;
    std::copy(row.begin(), row.end(), x.begin());
    out << format_row(map_point(x)) << "\n";
  }
  if (!ts.csv_out.empty()) {
    std::ofstream o(ts.csv_out, std::ios::binary);
    o << out.str();
    out_text.clear();
  } else {
    out_text = out.str();
  }
  return 0;
}

}  // namespace warpmech
