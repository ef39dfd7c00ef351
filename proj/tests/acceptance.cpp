// Acceptance suite: exercises every top-level contract of the library at its
// stated tolerance and prints one PASS/FAIL line per criterion. Exit code is
// the number of failed criteria.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "warpmech/canonical.hpp"
#include "warpmech/flow.hpp"
#include "warpmech/master.hpp"
#include "warpmech/recursion.hpp"
#include "warpmech/rng.hpp"
#include "warpmech/scenario.hpp"

#ifndef WARPMECH_DATA
#define WARPMECH_DATA "."
#endif

using namespace warpmech;

namespace {

int g_failures = 0;

void line(int idx, const char* name, bool pass, double value, const char* detail) {
  std::printf("%-4s %2d  %-28s %-10s %.3e\n", pass ? "PASS" : "FAIL", idx, name, detail,
              value);
  if (!pass) ++g_failures;
}

Vec8d sample_box(SplitMix64& rng, double qlo, double qhi, double plo, double phi) {
  Vec8d x;
  for (int i = 0; i < 4; ++i) x[slot_q(i)] = rng.uniform(qlo, qhi);
  for (int i = 0; i < 4; ++i) x[slot_p(i)] = rng.uniform(plo, phi);
  return x;
}

Vec8d branch_point(SplitMix64& rng, const VsProfile& vs, double sign) {
  for (;;) {
    Vec8d x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    x[0] = rng.uniform(0.5, 3.0);
    if (sign * (x[slot_p(0)] + vs.value(x[0]) * x[slot_p(1)]) > 0.3) return x;
  }
}

// 1. Metric correctness.
void criterion_metrics() {
  SplitMix64 rng(101);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    MetricModel m = MetricModel::alcubierre(VsProfile::constant(rng.uniform(-0.9, 0.9)));
    Vec4d q{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    worst = std::max(worst,
                     max_abs(inverse_metric(m, q) - mat_inverse(metric_components(m, q))));
  }
  bool pass = worst < 1e-12;
  double a = 1.3;
  MetricModel g = MetricModel::godel_exact(a);
  double worst_g = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec4d q{0.0, rng.uniform(0.1 * a, 1.9 * a), 0.0, 0.0};
    worst_g = std::max(
        worst_g, max_abs(metric_components(g, q) * inverse_metric(g, q) - Mat4d::identity()));
  }
  pass = pass && worst_g < 1e-10;
  line(1, "metric-correctness", pass, std::max(worst, worst_g), "tol 1e-12/1e-10");
}

// 2. Hamiltonian-system contract.
void criterion_structure() {
  SplitMix64 rng(202);
  MetricModel alc = MetricModel::alcubierre(VsProfile::constant(0.5));
  MetricModel god = MetricModel::godel_approx(0.08);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec8d xa;
    for (auto& c : xa) c = rng.uniform(-2.0, 2.0);
    worst = std::max(worst, hamiltonian_structure_residual(alc, xa));
    Vec8d xg = xa;
    xg[1] = rng.uniform(0.4, 2.5);
    worst = std::max(worst, hamiltonian_structure_residual(god, xg));
  }
  line(2, "hamiltonian-structure", worst < 1e-10, worst, "tol 1e-10");
}

// 3. Warp shape limits.
void criterion_warp_shape() {
  WarpShapeParams p{50.0, 1.0};
  double f05 = warp_shape(0.5, p), f1 = warp_shape(1.0, p), f2 = warp_shape(2.0, p);
  bool pass = f05 >= 1.0 - 1e-6 && f05 <= 1.0 && std::abs(f1 - 0.5) <= 1e-3 && f2 < 1e-6;
  line(3, "warp-shape", pass, std::max({1.0 - f05, std::abs(f1 - 0.5), f2}),
       "tol 1e-6/1e-3");
}

// 4. Energy conservation with the RK4 oracle.
void criterion_energy() {
  struct Case {
    MetricModel model;
    Vec8d x0;
  };
  Case alc{MetricModel::alcubierre(VsProfile::constant(0.5)),
           {0.0, 0.0, 0.0, 0.0, -1.2, 0.8, 0.3, -0.4}};
  Case god{MetricModel::godel_approx(0.05), {0.0, 1.0, 0.0, 0.0, 0.2, 0.1, 0.3, 0.05}};
  double worst_drift = 0.0, worst_gap = 0.0;
  for (const Case& c : {alc, god}) {
    std::vector<Monitor> mons{
        {"H", [&c](const Vec8d& x) { return hamiltonian_value(c.model, x); }}};
    IntegratorSpec spec;
    spec.dt = 1e-3;
    Trajectory traj = integrate(c.model, c.x0, 0.0, 10.0, spec, mons);
    worst_drift = std::max(worst_drift, drift_report(traj, "H").relative);
    IntegratorSpec ref;
    ref.method = Method::RK4;
    ref.dt = 1e-5;
    Trajectory rt = integrate(c.model, c.x0, 0.0, 10.0, ref);
    worst_gap = std::max(worst_gap, max_abs(rt.states.back() - traj.states.back()));
  }
  bool pass = worst_drift < 1e-8 && worst_gap < 1e-6;
  line(4, "energy-conservation", pass, std::max(worst_drift, worst_gap),
       "tol 1e-8/1e-6");
}

// 5. Canonical maps.
void criterion_canonical() {
  SplitMix64 rng(505);
  VsProfile vs = VsProfile::constant(0.45);
  BranchSpec wa = BranchSpec::alcubierre_wa(vs, 0.3);
  BranchSpec wb = BranchSpec::alcubierre_wb(vs, 0.3);
  BranchSpec god = BranchSpec::godel(0.9);
  MetricModel alc = MetricModel::alcubierre(vs);
  Vec8d expect{};
  expect[slot_p(0)] = -1.0;

  double roundtrip = 0.0, sympl = 0.0, push = 0.0, energy = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec8d xa = branch_point(rng, vs, -1.0);
    roundtrip = std::max(roundtrip, max_abs(from_action(wa, to_action(wa, xa)) - xa));
    Vec8d xb = branch_point(rng, vs, 1.0);
    roundtrip = std::max(roundtrip, max_abs(from_action(wb, to_action(wb, xb)) - xb));
    Vec8d xg;
    for (auto& c : xg) c = rng.uniform(-2.0, 2.0);
    xg[1] = rng.uniform(0.4, 2.5);
    xg[slot_p(1)] = rng.uniform(0.5, 2.5);
    roundtrip = std::max(roundtrip, max_abs(from_action(god, to_action(god, xg)) - xg));
    if (i < 50) {
      sympl = std::max({sympl, symplectomorphism_residual(wa, xa),
                        symplectomorphism_residual(wb, xb),
                        symplectomorphism_residual(god, xg)});
      push = std::max({push, max_abs(pushforward_hamiltonian_field(wa, xa) - expect),
                       max_abs(pushforward_hamiltonian_field(wb, xb) - expect)});
      energy = std::max(energy, std::abs(to_action(wa, xa)[0] - hamiltonian_value(alc, xa)));
      energy = std::max(energy, std::abs(to_action(wb, xb)[0] - hamiltonian_value(alc, xb)));
    }
  }
  bool pass = roundtrip < 1e-12 && sympl < 1e-8 && push < 1e-8 && energy < 1e-10;
  line(5, "canonical-maps", pass, std::max({roundtrip, sympl, push, energy}),
       "tol 1e-12..1e-8");
}

// 6. Recursion-operator criteria in action coordinates.
void criterion_recursion_action() {
  SplitMix64 rng(606);
  TensorField t = recursion_action();
  VectorField x0 = hierarchy_field(0);
  double torsion = 0.0, lie = 0.0, pairing = 0.0, closed = 0.0;
  for (int i = 0; i < 100; ++i) {
    Vec8d x = sample_box(rng, 0.5, 3.0, -2.0, 2.0);
    torsion = std::max(torsion, nijenhuis_max(t, x));
    lie = std::max(lie, max_abs(lie_derivative_tensor(x0, t, x)));
    auto ev = eigenvalues(recursion_action_value<double>(x));
    std::array<double, 8> re;
    for (int k = 0; k < 8; ++k) re[k] = ev[k].real();
    std::sort(re.begin(), re.end());
    for (int k = 0; k < 8; k += 2) pairing = std::max(pairing, std::abs(re[k] - re[k + 1]));
    auto tp = trace_powers(recursion_action_value<double>(x), 4);
    for (int h = 1; h <= 4; ++h)
      closed = std::max(closed, std::abs(tp[h - 1] - action_trace_closed_form(x, h)));
  }

  // exact trace constancy along the flow of X0
  Rhs f = [](const Vec8d&) {
    Vec8d v{};
    v[slot_p(0)] = -1.0;
    return v;
  };
  std::vector<Monitor> mons;
  for (int h = 1; h <= 4; ++h)
    mons.push_back({"TrT" + std::to_string(h), [h](const Vec8d& x) {
                      return trace_powers(recursion_action_value<double>(x), h).back();
                    }});
  IntegratorSpec spec;
  spec.dt = 1e-2;
  Trajectory traj =
      integrate_field(f, sample_box(rng, 0.5, 3.0, -2.0, 2.0), 0.0, 10.0, spec, mons);
  double flow_drift = 0.0;
  for (int h = 1; h <= 4; ++h)
    flow_drift = std::max(flow_drift, drift_report(traj, "TrT" + std::to_string(h)).max_abs);

  bool pass = torsion < 1e-9 && lie < 1e-10 && pairing < 1e-7 && flow_drift == 0.0 &&
              closed < 1e-12;
  line(6, "recursion-action", pass, std::max({torsion, lie, pairing, flow_drift, closed}),
       "tol 1e-9..1e-12");
}

// 7. Recursion operators in original coordinates.
void criterion_recursion_original() {
  SplitMix64 rng(707);
  VsProfile vs = VsProfile::constant(0.5);
  BranchSpec wb = BranchSpec::alcubierre_wb(vs, 0.1);
  double pullback = 0.0;
  for (int i = 0; i < 25; ++i) {
    Vec8d x = branch_point(rng, vs, 1.0);
    Mat8d j = jacobian_impl([&wb](const auto& y) { return to_action_value(wb, y); }, x);
    Mat8d pulled = mat_inverse(j) * recursion_action_value<double>(to_action(wb, x)) * j;
    pullback =
        std::max(pullback, max_abs(recursion_alcubierre_value<double>(vs, x) - pulled));
  }

  double deg = 0.0;
  for (int i = 0; i < 50; ++i) {
    Vec8d x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    auto tp = trace_powers(recursion_alcubierre_degenerate_value<double>(vs, x), 4);
    for (int h = 1; h <= 4; ++h)
      deg = std::max(deg, std::abs(tp[h - 1] - degenerate_trace_closed_form(x, h)));
  }

  double godel = 0.0;
  double omega = 0.7;
  for (int i = 0; i < 50; ++i) {
    Vec8d x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    x[1] = rng.uniform(0.4, 2.0);
    x[slot_p(1)] = rng.uniform(0.5, 2.0);
    double tr = trace_powers(recursion_godel_value<double>(omega, x), 1)[0];
    godel = std::max(godel, std::abs(tr - godel_trace_closed_form(omega, x, 1)));
  }

  bool pass = pullback < 1e-6 && deg < 1e-12 && godel < 1e-10;
  line(7, "recursion-original", pass, std::max({pullback, deg, godel}),
       "tol 1e-6/1e-12/1e-10");
}

// 8. Master-symmetry suite.
void criterion_master() {
  SplitMix64 rng(808);
  double bracket = 0.0, ham = 0.0, schouten = 0.0, conf = 0.0, scaling = 0.0, bih = 0.0;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int rep = 0; rep < 2; ++rep)
        bracket = std::max(
            bracket, hierarchy_bracket_residual(i, j, sample_box(rng, 0.5, 3.0, -2.0, 2.0)));
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      Vec8d x = sample_box(rng, 0.5, 3.0, -2.0, 2.0);
      double br = poisson_bracket(hierarchy_hamiltonian_field(i), master_integral(j), x, 0);
      ham = std::max(ham, std::abs(br - double(i + 1) * ipow(x[0], i + j + 1)));
    }
  for (int rep = 0; rep < 25; ++rep) {
    Vec8d x = sample_box(rng, 0.5, 3.0, -2.0, 2.0);
    schouten = std::max(schouten,
                        schouten_residual(bivector_family(0), bivector_family(1), x));
    ConformalCoefficients c = conformal_check(x);
    conf = std::max(
        {conf, std::abs(c.alpha), std::abs(c.beta + 1.0), std::abs(c.gamma + 1.0)});
  }
  for (int h = 0; h <= 3; ++h)
    for (int l = 0; l <= 3; ++l) {
      ScalingRelationReport rep =
          scaling_relations_check(h, l, sample_box(rng, 0.5, 3.0, -2.0, 2.0));
      scaling = std::max({scaling, rep.max_residual(), rep.coefficient_gap});
    }
  for (int i = 0; i <= 3; ++i)
    for (int rep = 0; rep < 10; ++rep) {
      Vec8d x = sample_box(rng, 0.5, 3.0, -2.0, 2.0);
      if (x[0] <= 0.2) x[0] = 0.7;
      bih = std::max(bih, bihamiltonian_residual(i, x));
    }
  bool pass = bracket < 1e-8 && ham < 1e-10 && schouten < 1e-9 && conf < 1e-9 &&
              scaling < 1e-7 && bih < 1e-9;
  line(8, "master-symmetries", pass,
       std::max({bracket, ham, schouten, conf, scaling, bih}), "tol 1e-7..1e-10");
}

// 9. Detector validity.
void criterion_detectors() {
  TensorField bad_t([](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    Mat8<S> t;
    t[0][1] = x[0];
    t[1][2] = x[1];
    t[2][0] = x[0] * x[1];
    return t;
  });
  Vec8d x{1.2, 0.8, 0.5, 1.0, 0.1, 0.2, 0.3, 0.4};
  double torsion = nijenhuis_max(bad_t, x);

  BivectorField bad_b([](const auto& v) {
    using S = std::decay_t<decltype(v[0])>;
    Mat8<S> b = bivector_matrix<S>(1, v);
    S extra = v[0] * v[slot_p(0)];
    b[slot_p(0)][slot_q(1)] += extra;
    b[slot_q(1)][slot_p(0)] -= extra;
    return b;
  });
  Vec8d y{1.0, 2.0, 1.5, 0.5, 0.3, -0.2, 0.4, 0.1};
  double schouten = schouten_residual(bivector_family(0), bad_b, y);
  bool pass = torsion > 0.01 && schouten > 0.01;
  line(9, "detector-validity", pass, std::min(torsion, schouten), "floor 1e-2");
}

// 10. Determinism of the full check pipeline.
void criterion_determinism() {
  ScenarioConfig cfg =
      load_scenario(std::string(WARPMECH_DATA) + "/alcubierre-constant-vs.json");
  cfg.report_path = "acc-report-1.json";
  Report r1 = run_checks(cfg, "all");
  write_report(r1, cfg.report_path);
  Report r2 = run_checks(cfg, "all");
  write_report(r2, "acc-report-2.json");
  auto slurp = [](const char* p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string a = slurp("acc-report-1.json"), b = slurp("acc-report-2.json");
  bool pass = !a.empty() && a == b && r1.all_passed();
  line(10, "determinism", pass, a == b ? 0.0 : 1.0, "byte-equal");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_metrics();
  criterion_structure();
  criterion_warp_shape();
  criterion_energy();
  criterion_canonical();
  criterion_recursion_action();
  criterion_recursion_original();
  criterion_master();
  criterion_detectors();
  criterion_determinism();
  std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES",
              g_failures, g_failures == 1 ? "" : "s");
  return g_failures;
}
