#include "warpmech/flow.hpp"

#include <cmath>

namespace warpmech {

namespace {

Vec8d rk4_step(const Rhs& f, const Vec8d& x, double dt) {
  Vec8d k1 = f(x);
  Vec8d k2 = f(x + (dt / 2.0) * k1);
  Vec8d k3 = f(x + (dt / 2.0) * k2);
  Vec8d k4 = f(x + dt * k3);
  Vec8d out = x;
  for (int i = 0; i < kDim; ++i)
    out[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

Vec8d midpoint_step(const Rhs& f, const Vec8d& x, const IntegratorSpec& spec) {
  const double dt = spec.dt;
  Vec8d z = x + dt * f(x);
  for (int it = 0; it < spec.fp_max_iter; ++it) {
    Vec8d mid = 0.5 * (x + z);
    Vec8d znew = x + dt * f(mid);
    double diff = max_abs(znew - z);
    z = znew;
    if (diff <= spec.fp_tol) return z;
  }
  throw FixedPointDivergence("implicit midpoint stage did not converge");
}

void check_domain(const MetricModel& model, const Vec8d& x) {
  if (model.kind == MetricKind::GodelExact && x[1] <= 0.0)
    throw DomainExit("trajectory left the Goedel domain (q2 <= 0)");
}

Trajectory run(const Rhs& f, const Vec8d& x0, double t0, double t1,
               const IntegratorSpec& spec, const std::vector<Monitor>& monitors,
               const MetricModel* domain_model) {
  if (!(spec.dt > 0.0)) throw ConfigError("integrator dt must be positive");
  if (!(t1 > t0)) throw ConfigError("t_span must be nondegenerate");
  if (domain_model) check_domain(*domain_model, x0);

  Trajectory traj;
  traj.monitor_names.reserve(monitors.size());
  traj.monitors.resize(monitors.size());
  for (const auto& m : monitors) traj.monitor_names.push_back(m.name);

  auto record = [&](double t, const Vec8d& x) {
    traj.times.push_back(t);
    traj.states.push_back(x);
    for (std::size_t k = 0; k < monitors.size(); ++k)
      traj.monitors[k].push_back(monitors[k].fn(x));
  };

  Vec8d x = x0;
  record(t0, x);
  const long nsteps = static_cast<long>(std::ceil((t1 - t0) / spec.dt - 1e-12));
  for (long n = 1; n <= nsteps; ++n) {
    double target = (n == nsteps) ? t1 : t0 + static_cast<double>(n) * spec.dt;
    IntegratorSpec local = spec;
    local.dt = target - traj.times.back();
    try {
      x = step(f, x, local);
    } catch (const DomainError& e) {
      // A stage evaluation wandered outside the model's chart.
      throw DomainExit(e.what());
    } catch (const SingularMetricError& e) {
      throw DomainExit(e.what());
    }
    if (domain_model) check_domain(*domain_model, x);
    if (!all_finite(x)) throw NumericalDomainError("trajectory state is not finite");
    record(target, x);
  }
  return traj;
}

}  // namespace

Vec8d step(const Rhs& f, const Vec8d& x, const IntegratorSpec& spec) {
  switch (spec.method) {
    case Method::ImplicitMidpoint:
      return midpoint_step(f, x, spec);
    case Method::RK4:
      return rk4_step(f, x, spec.dt);
  }
  throw ConfigError("unknown integrator method");
}

Trajectory integrate(const MetricModel& model, const Vec8d& x0, double t0, double t1,
                     const IntegratorSpec& spec, const std::vector<Monitor>& monitors) {
  Rhs f = [model](const Vec8d& x) { return hamiltonian_field_value(model, x); };
  return run(f, x0, t0, t1, spec, monitors, &model);
}

Trajectory integrate_field(const Rhs& f, const Vec8d& x0, double t0, double t1,
                           const IntegratorSpec& spec, const std::vector<Monitor>& monitors) {
  return run(f, x0, t0, t1, spec, monitors, nullptr);
}

Drift drift_report(const Trajectory& traj, const std::string& monitor) {
  for (std::size_t k = 0; k < traj.monitor_names.size(); ++k) {
    if (traj.monitor_names[k] != monitor) continue;
    const auto& series = traj.monitors[k];
    if (series.empty()) return {};
    Drift d;
    double base = series.front();
    for (double v : series) d.max_abs = std::max(d.max_abs, std::abs(v - base));
    d.relative = d.max_abs / std::max(1.0, std::abs(base));
    return d;
  }
  throw UnknownMonitor("no monitor named '" + monitor + "'");
}

}  // namespace warpmech
