#pragma once

#include <cmath>
#include <memory>

#include "warpmech/dual.hpp"
#include "warpmech/errors.hpp"
#include "warpmech/linalg.hpp"
#include "warpmech/spline.hpp"

namespace warpmech {

// Ship velocity profile v_s(t) with its first two derivatives and the ship
// worldline x_s(t) = x_s(0-ref) + integral of v_s. The inverse-time profile
// v_s = C/t satisfies vdot/v = -1/t away from t = 0.
enum class VsKind { Constant, InverseTime, Tabulated };

struct VsDerivs {
  double v = 0.0;
  double vdot = 0.0;
  double vddot = 0.0;
};

struct VsProfile {
  VsKind kind = VsKind::Constant;
  double v0 = 0.0;  // Constant
  double c = 0.0;   // InverseTime: v_s(t) = c / t
  std::shared_ptr<CubicSpline> table;

  static VsProfile constant(double v) {
    VsProfile p;
    p.kind = VsKind::Constant;
    p.v0 = v;
    return p;
  }
  static VsProfile inverse_time(double c) {
    VsProfile p;
    p.kind = VsKind::InverseTime;
    p.c = c;
    return p;
  }
  static VsProfile tabulated(std::vector<double> t, std::vector<double> v) {
    VsProfile p;
    p.kind = VsKind::Tabulated;
    p.table = std::make_shared<CubicSpline>(std::move(t), std::move(v));
    return p;
  }

  VsDerivs eval(double t) const {
    switch (kind) {
      case VsKind::Constant:
        return {v0, 0.0, 0.0};
      case VsKind::InverseTime: {
        if (std::abs(t) <= 1e-9)
          throw SingularProfileError("inverse-time profile is singular at t = 0");
        return {c / t, -c / (t * t), 2.0 * c / (t * t * t)};
      }
      case VsKind::Tabulated:
        return {table->value(t), table->deriv1(t), table->deriv2(t)};
    }
    return {};
  }

  double value(double t) const { return eval(t).v; }
  double deriv1(double t) const { return eval(t).vdot; }
  double deriv2(double t) const { return eval(t).vddot; }
  double deriv3(double t) const {
    switch (kind) {
      case VsKind::Constant:
        return 0.0;
      case VsKind::InverseTime:
        eval(t);  // domain check
        return -6.0 * c / (t * t * t * t);
      case VsKind::Tabulated:
        return 0.0;  // piecewise-cubic third derivative is discontinuous; unused
    }
    return 0.0;
  }

  template <class T>
  Dual<T> value(const Dual<T>& t) const {
    return Dual<T>(value(t.val), t.der * deriv1(t.val));
  }
  template <class T>
  Dual<T> deriv1(const Dual<T>& t) const {
    return Dual<T>(deriv1(t.val), t.der * deriv2(t.val));
  }
  template <class T>
  Dual<T> deriv2(const Dual<T>& t) const {
    return Dual<T>(deriv2(t.val), t.der * deriv3(t.val));
  }

  // Ship position x_s(t) anchored so the integration constant is supplied by
  // the caller. InverseTime integrates to c*ln|t| (single-sign-of-t branch).
  double ship_position(double t, double x0) const {
    switch (kind) {
      case VsKind::Constant:
        return x0 + v0 * t;
      case VsKind::InverseTime:
        eval(t);  // domain check
        return x0 + c * std::log(std::abs(t));
      case VsKind::Tabulated:
        return x0 + table->integral(t);
    }
    return x0;
  }
  template <class T>
  Dual<T> ship_position(const Dual<T>& t, double x0) const {
    return Dual<T>(ship_position(t.val, x0), t.der * value(t.val));
  }
};

struct WarpShapeParams {
  double sigma = 1.0;  // steepness > 0
  double radius = 1.0;  // bubble radius R > 0
};

// Top-hat-like bubble profile f(r_s) in (0, 1], equal to 1 at r_s = 0 and
// decaying to 0 outside the bubble radius.
template <class S>
S warp_shape(const S& rs, const WarpShapeParams& p) {
  using warpmech::tanh;
  using std::tanh;
  return (tanh(p.sigma * (rs + p.radius)) - tanh(p.sigma * (rs - p.radius))) /
         (2.0 * std::tanh(p.sigma * p.radius));
}

enum class MetricKind { AlcubierreLimit, GodelExact, GodelApprox };

// Spacetime model; c = 1 throughout. Coordinates q = (q1..q4) are
// (t, x, y, z) for the Alcubierre limit and (t, r, phi, z) for Goedel.
struct MetricModel {
  MetricKind kind = MetricKind::AlcubierreLimit;
  VsProfile profile;    // AlcubierreLimit
  double a = 1.0;       // GodelExact characteristic length
  double omega_g = 0.0;  // GodelApprox rotation parameter

  static MetricModel alcubierre(VsProfile p) {
    MetricModel m;
    m.kind = MetricKind::AlcubierreLimit;
    m.profile = std::move(p);
    return m;
  }
  static MetricModel godel_exact(double a) {
    MetricModel m;
    m.kind = MetricKind::GodelExact;
    m.a = a;
    return m;
  }
  static MetricModel godel_approx(double omega) {
    MetricModel m;
    m.kind = MetricKind::GodelApprox;
    m.omega_g = omega;
    return m;
  }
};

// (q2 * Omega_G)^2; the Goedel expansion is trustworthy only when this is
// small. Callers surface a warning above 0.1 rather than failing.
inline double godel_regime_factor(const MetricModel& m, double q2) {
  return (q2 * m.omega_g) * (q2 * m.omega_g);
}

// Covariant metric components g_{nu mu}(q). Symmetric by construction.
template <class S>
Mat4<S> metric_components(const MetricModel& model, const Vec4<S>& q) {
  Mat4<S> g;
  switch (model.kind) {
    case MetricKind::AlcubierreLimit: {
      S vs = model.profile.value(q[0]);
      g[0][0] = -(1.0 - vs * vs);
      g[0][1] = g[1][0] = -vs;
      g[1][1] = S(1.0);
      g[2][2] = S(1.0);
      g[3][3] = S(1.0);
      break;
    }
    case MetricKind::GodelExact: {
      if (value_of(q[1]) <= 0.0) throw DomainError("Goedel radius must be positive");
      S r = q[1];
      S w = r / (2.0 * model.a);
      g[0][0] = S(1.0);
      g[1][1] = -1.0 / (1.0 + w * w);
      g[2][2] = -(r * r) * (1.0 - w * w);
      g[3][3] = S(-1.0);
      g[0][2] = g[2][0] = (r * r) / (model.a * std::sqrt(2.0));
      break;
    }
    case MetricKind::GodelApprox: {
      S u = q[1];
      g[0][0] = S(1.0);
      g[1][1] = S(-1.0);
      g[2][2] = -(u * u);
      g[3][3] = S(-1.0);
      // Cross term sits on (dq1, dq3) with the sign fixed by the exact
      // metric's (t, phi) coupling; see inverse_metric.
      g[0][2] = g[2][0] = (u * u) * model.omega_g;
      break;
    }
  }
  return g;
}

// Contravariant components g^{nu mu}(q). Closed forms for the Alcubierre
// limit and the approximated Goedel model (their Hamiltonians follow these
// coefficients exactly); numeric inversion for the exact Goedel metric.
template <class S>
Mat4<S> inverse_metric(const MetricModel& model, const Vec4<S>& q) {
  Mat4<S> gi;
  switch (model.kind) {
    case MetricKind::AlcubierreLimit: {
      S vs = model.profile.value(q[0]);
      gi[0][0] = S(-1.0);
      gi[0][1] = gi[1][0] = -vs;
      gi[1][1] = 1.0 - vs * vs;
      gi[2][2] = S(1.0);
      gi[3][3] = S(1.0);
      break;
    }
    case MetricKind::GodelExact:
      gi = mat_inverse(metric_components(model, q));
      break;
    case MetricKind::GodelApprox: {
      S u = q[1];
      if (value_of(u) == 0.0) throw DomainError("approximated Goedel needs q2 != 0");
      S d = (u * u) * (model.omega_g * model.omega_g) + 1.0;
      gi[0][0] = 1.0 / d;
      gi[1][1] = S(-1.0);
      gi[2][2] = -1.0 / ((u * u) * d);
      gi[3][3] = S(-1.0);
      gi[0][2] = gi[2][0] = model.omega_g / d;
      break;
    }
  }
  return gi;
}

}  // namespace warpmech
