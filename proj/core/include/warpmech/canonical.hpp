#pragma once

#include <cmath>
#include <optional>

#include "warpmech/errors.hpp"
#include "warpmech/numdiff.hpp"
#include "warpmech/phase.hpp"

namespace warpmech {

// Closed-form canonical maps between original coordinates (q, p) and action
// coordinates (Q, P). The two Alcubierre branches share the same forward
// map; they differ in the sign of the square root the inverse map restores
// (Wa lands on p1 + v_s p2 < 0, Wb on > 0). The degenerate branch covers the
// measure-zero set p1 + v_s p2 = 0 and maps only six components.
//
// The ship position enters as the worldline x_s(q1) = ship_x0 + int v_s dt;
// a frozen x_s would break canonicity of the maps.
enum class BranchKind { AlcubierreWa, AlcubierreWb, AlcubierreDegenerate, GodelWPrime };

struct BranchSpec {
  BranchKind kind = BranchKind::AlcubierreWa;
  VsProfile profile;     // Alcubierre branches
  double ship_x0 = 0.0;  // x_s reference position
  double omega_g = 0.0;  // Goedel branch

  static BranchSpec alcubierre_wa(VsProfile p, double x0 = 0.0) {
    return {BranchKind::AlcubierreWa, std::move(p), x0, 0.0};
  }
  static BranchSpec alcubierre_wb(VsProfile p, double x0 = 0.0) {
    return {BranchKind::AlcubierreWb, std::move(p), x0, 0.0};
  }
  static BranchSpec alcubierre_degenerate(VsProfile p, double x0 = 0.0) {
    return {BranchKind::AlcubierreDegenerate, std::move(p), x0, 0.0};
  }
  static BranchSpec godel(double omega) {
    return {BranchKind::GodelWPrime, VsProfile{}, 0.0, omega};
  }

  MetricModel metric_model() const {
    if (kind == BranchKind::GodelWPrime) return MetricModel::godel_approx(omega_g);
    return MetricModel::alcubierre(profile);
  }
};

template <class S>
Vec8<S> to_action_value(const BranchSpec& spec, const Vec8<S>& x) {
  Vec8<S> out{};
  switch (spec.kind) {
    case BranchKind::AlcubierreWa:
    case BranchKind::AlcubierreWb: {
      S vs = spec.profile.value(x[0]);
      S xs = spec.profile.ship_position(x[0], spec.ship_x0);
      S r = x[slot_p(0)] + vs * x[slot_p(1)];
      if (value_of(r) == 0.0)
        throw BranchDomainError("p1 + v_s p2 vanishes; use the degenerate branch");
      out[0] = hamiltonian_value(MetricModel::alcubierre(spec.profile), x);  // Q1 = H
      out[1] = x[slot_p(1)];
      out[2] = x[slot_p(2)];
      out[3] = x[slot_p(3)];
      out[slot_p(0)] = x[0] / r;
      out[slot_p(1)] = -x[slot_p(1)] * x[0] / r + xs - x[1];
      out[slot_p(2)] = -x[slot_p(2)] * x[0] / r - x[2];
      out[slot_p(3)] = -x[slot_p(3)] * x[0] / r - x[3];
      break;
    }
    case BranchKind::GodelWPrime: {
      if (spec.omega_g == 0.0) throw BranchDomainError("Goedel branch needs Omega_G != 0");
      S p2 = x[slot_p(1)];
      if (value_of(p2) == 0.0) throw BranchDomainError("Goedel branch needs p2 != 0");
      double w2 = spec.omega_g * spec.omega_g;
      out[0] = 0.5 * (w2 * p2 * p2 - x[slot_p(3)] * x[slot_p(3)]);
      out[1] = x[slot_p(0)];
      out[2] = x[slot_p(2)];
      out[3] = x[slot_p(3)];
      out[slot_p(0)] = -x[1] / (w2 * p2);
      out[slot_p(1)] = -x[0];
      out[slot_p(2)] = -x[2];
      out[slot_p(3)] = -x[slot_p(3)] * x[1] / (w2 * p2) - x[3];
      break;
    }
    case BranchKind::AlcubierreDegenerate:
      throw BranchDomainError("degenerate branch maps six components; use degenerate_to_action");
  }
  return out;
}

template <class S>
Vec8<S> from_action_value(const BranchSpec& spec, const Vec8<S>& X) {
  Vec8<S> out{};
  switch (spec.kind) {
    case BranchKind::AlcubierreWa:
    case BranchKind::AlcubierreWb: {
      S disc = X[1] * X[1] + X[2] * X[2] + X[3] * X[3] - 2.0 * X[0];
      if (value_of(disc) <= 0.0)
        throw BranchDomainError("branch discriminant must be positive");
      using warpmech::sqrt;
      using std::sqrt;
      S root = sqrt(disc);
      double sign = spec.kind == BranchKind::AlcubierreWa ? -1.0 : 1.0;
      S q1 = sign * X[slot_p(0)] * root;
      S vs = spec.profile.value(q1);
      S xs = spec.profile.ship_position(q1, spec.ship_x0);
      out[0] = q1;
      out[slot_p(0)] = sign * root - vs * X[1];
      out[slot_p(1)] = X[1];
      out[slot_p(2)] = X[2];
      out[slot_p(3)] = X[3];
      out[1] = xs - X[slot_p(1)] - X[1] * X[slot_p(0)];
      out[2] = -X[slot_p(2)] - X[2] * X[slot_p(0)];
      out[3] = -X[slot_p(3)] - X[3] * X[slot_p(0)];
      break;
    }
    case BranchKind::GodelWPrime: {
      if (spec.omega_g == 0.0) throw BranchDomainError("Goedel branch needs Omega_G != 0");
      S rho2 = 2.0 * X[0] + X[3] * X[3];
      if (value_of(rho2) <= 0.0)
        throw BranchDomainError("branch requires 2 Q1 + (Q4)^2 > 0");
      using warpmech::sqrt;
      using std::sqrt;
      S rho = sqrt(rho2);
      out[slot_p(0)] = X[1];
      out[slot_p(1)] = rho / spec.omega_g;
      out[slot_p(2)] = X[2];
      out[slot_p(3)] = X[3];
      out[0] = -X[slot_p(1)];
      out[1] = -X[slot_p(0)] * spec.omega_g * rho;
      out[2] = -X[slot_p(2)];
      out[3] = -X[slot_p(3)] + X[3] * X[slot_p(0)];
      break;
    }
    case BranchKind::AlcubierreDegenerate:
      throw BranchDomainError("degenerate branch maps six components; use degenerate_from_action");
  }
  return out;
}

inline Vec8d to_action(const BranchSpec& spec, const Vec8d& x) {
  return to_action_value(spec, x);
}
inline Vec8d from_action(const BranchSpec& spec, const Vec8d& X) {
  return from_action_value(spec, X);
}

// Six-component image of the degenerate branch: cyclic momenta Q^2..Q^4 and
// their conjugates. Q1/P1 are genuinely absent, not zero.
struct DegeneratePoint {
  std::array<double, 3> Q{};  // Q^2, Q^3, Q^4
  std::array<double, 3> P{};  // P_2, P_3, P_4
};

inline DegeneratePoint degenerate_to_action(const BranchSpec& spec, const Vec8d& x,
                                            double tol = 1e-9) {
  double vs = spec.profile.value(x[0]);
  double xs = spec.profile.ship_position(x[0], spec.ship_x0);
  if (std::abs(x[slot_p(0)] + vs * x[slot_p(1)]) > tol)
    throw BranchDomainError("degenerate branch requires p1 + v_s p2 = 0");
  DegeneratePoint d;
  d.Q = {x[slot_p(1)], x[slot_p(2)], x[slot_p(3)]};
  d.P = {xs - x[1], -x[2], -x[3]};
  return d;
}

// The degenerate leaf does not constrain q1; the caller supplies it.
inline Vec8d degenerate_from_action(const BranchSpec& spec, const DegeneratePoint& d,
                                    double q1) {
  double vs = spec.profile.value(q1);
  double xs = spec.profile.ship_position(q1, spec.ship_x0);
  Vec8d x{};
  x[0] = q1;
  x[1] = xs - d.P[0];
  x[2] = -d.P[1];
  x[3] = -d.P[2];
  x[slot_p(0)] = -vs * d.Q[0];
  x[slot_p(1)] = d.Q[0];
  x[slot_p(2)] = d.Q[1];
  x[slot_p(3)] = d.Q[2];
  return x;
}

// || J^T W J - W ||_max with J the Jacobian of to_action at x; zero for an
// exact symplectomorphism.
inline double symplectomorphism_residual(const BranchSpec& spec, const Vec8d& x) {
  Mat8d j = jacobian_impl(
      [&spec](const auto& y) { return to_action_value(spec, y); }, x);
  if (!all_finite(j)) throw NumericalDomainError("canonical-map jacobian is not finite");
  Mat8d w = canonical_omega();
  return max_abs(j.transpose() * w * j - w);
}

// Pushforward of X_H through to_action; equals -d/dP1 on branch-valid points
// when the profile is constant.
inline Vec8d pushforward_hamiltonian_field(const BranchSpec& spec, const Vec8d& x) {
  Mat8d j = jacobian_impl(
      [&spec](const auto& y) { return to_action_value(spec, y); }, x);
  Vec8d xh = hamiltonian_field_value(spec.metric_model(), x);
  return j * xh;
}

}  // namespace warpmech
