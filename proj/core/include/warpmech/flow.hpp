#pragma once

#include <functional>
#include <string>
#include <vector>

#include "warpmech/errors.hpp"
#include "warpmech/phase.hpp"

namespace warpmech {

enum class Method { ImplicitMidpoint, RK4 };

struct IntegratorSpec {
  Method method = Method::ImplicitMidpoint;
  double dt = 1e-3;
  double fp_tol = 1e-12;  // implicit stage tolerance
  int fp_max_iter = 50;
};

// Named scalar sampled along a trajectory.
struct Monitor {
  std::string name;
  std::function<double(const Vec8d&)> fn;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Vec8d> states;
  std::vector<std::string> monitor_names;
  std::vector<std::vector<double>> monitors;  // one series per name
};

struct Drift {
  double max_abs = 0.0;
  double relative = 0.0;  // max_abs / max(1, |initial|)
};

using Rhs = std::function<Vec8d(const Vec8d&)>;

// One step of the chosen method on the autonomous system xdot = f(x). The
// phase-space formulation is autonomous: coordinate time is the dynamical
// variable q1, the integration parameter is the curve parameter.
Vec8d step(const Rhs& f, const Vec8d& x, const IntegratorSpec& spec);

// Integrate a metric model's Hamiltonian flow over the parameter interval
// [t0, t1], sampling every dt. Throws DomainExit when a state leaves the
// model's coordinate domain (exact Goedel: q2 <= 0).
Trajectory integrate(const MetricModel& model, const Vec8d& x0, double t0, double t1,
                     const IntegratorSpec& spec, const std::vector<Monitor>& monitors = {});

// Same driver for an arbitrary vector field (used for action-space flows
// and reversibility checks).
Trajectory integrate_field(const Rhs& f, const Vec8d& x0, double t0, double t1,
                           const IntegratorSpec& spec,
                           const std::vector<Monitor>& monitors = {});

// Drift of a monitor against its value at t0.
Drift drift_report(const Trajectory& traj, const std::string& monitor);

}  // namespace warpmech
