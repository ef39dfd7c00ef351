#pragma once

#include <vector>

#include "warpmech/canonical.hpp"
#include "warpmech/fields.hpp"
#include "warpmech/numdiff.hpp"
#include "warpmech/phase.hpp"

namespace warpmech {

// ---------------------------------------------------------------------------
// Recursion operators
// ---------------------------------------------------------------------------

// Action-coordinate operator: diag(Q1..Q4, Q1..Q4). Equals the weight-1
// bivector composed with the inverse canonical form.
template <class S>
Mat8<S> recursion_action_value(const Vec8<S>& X) {
  Mat8<S> t;
  for (int nu = 0; nu < 4; ++nu) {
    t[slot_q(nu)][slot_q(nu)] = X[slot_q(nu)];
    t[slot_p(nu)][slot_p(nu)] = X[slot_q(nu)];
  }
  return t;
}

inline TensorField recursion_action() {
  return TensorField([](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return recursion_action_value<S>(x);
  });
}

// Alcubierre operator in original coordinates, obtained by pulling the
// action-coordinate operator back through the canonical map. Writing
// r = p1 + v_s p2, J = 1/r, d = vdot_s p2 and G = J - q1 J^2 d, the blocks
// close to
//
//   M (q<-q):  diag(H, p2, p3, p4),
//              M[k][0] = p_k (p_k - H) G        (k = 2,3,4 rows)
//              M[1][0] = (H - p2)(v_s - p2 G)
//   N (p<-p):  M^T
//   L (q<-p):  q1 J^2 * K with K antisymmetric,
//              K[0][k] = p_k (p_k - H),  K[1][k] = v_s p_k (p_k - H), k >= 2
//   R (p<-q):  0
//
// The q1-dependent L entries drop out of every trace, so Tr(T^h) reduces to
// 2 H^h + 2 (p2^h + p3^h + p4^h), the similarity image of the action form.
template <class S>
Mat8<S> recursion_alcubierre_value(const VsProfile& profile, const Vec8<S>& x) {
  S vs = profile.value(x[0]);
  S vdot = profile.deriv1(x[0]);
  S r = x[slot_p(0)] + vs * x[slot_p(1)];
  if (value_of(r) <= 0.0)
    throw BlockDomainError("block assembly requires p1 + v_s p2 > 0");
  S J = 1.0 / r;
  S H = hamiltonian_value(MetricModel::alcubierre(profile), x);
  S q1 = x[0];
  S d = vdot * x[slot_p(1)];
  S G = J - q1 * J * J * d;

  Mat8<S> t;
  const S p[4] = {x[slot_p(0)], x[slot_p(1)], x[slot_p(2)], x[slot_p(3)]};

  // M block (rows/cols 0..3)
  t[0][0] = H;
  t[1][1] = p[1];
  t[2][2] = p[2];
  t[3][3] = p[3];
  t[1][0] = (H - p[1]) * (vs - p[1] * G);
  t[2][0] = p[2] * (p[2] - H) * G;
  t[3][0] = p[3] * (p[3] - H) * G;

  // N block = M^T (rows/cols 4..7)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t[slot_p(i)][slot_p(j)] = t[slot_q(j)][slot_q(i)];

  // L block (q rows, p cols)
  S f2 = q1 * J * J;
  S k2 = p[1] * (p[1] - H), k3 = p[2] * (p[2] - H), k4 = p[3] * (p[3] - H);
  t[0][slot_p(1)] = f2 * k2;
  t[0][slot_p(2)] = f2 * k3;
  t[0][slot_p(3)] = f2 * k4;
  t[1][slot_p(0)] = -f2 * k2;
  t[2][slot_p(0)] = -f2 * k3;
  t[3][slot_p(0)] = -f2 * k4;
  t[1][slot_p(2)] = f2 * vs * k3;
  t[1][slot_p(3)] = f2 * vs * k4;
  t[2][slot_p(1)] = -f2 * vs * k3;
  t[3][slot_p(1)] = -f2 * vs * k4;

  // R block vanishes identically.
  return t;
}

inline TensorField recursion_alcubierre(const VsProfile& profile) {
  return TensorField([profile](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return recursion_alcubierre_value<S>(profile, x);
  });
}

// Degenerate-branch operator (p1 + v_s p2 = 0): block diagonal with the
// q-block carrying v_s p2 at (2,1) and the p-block -v_s p2 at (1,2),
// both one-based. Eigenvalues are {0, p2, p3, p4}, each twice.
template <class S>
Mat8<S> recursion_alcubierre_degenerate_value(const VsProfile& profile, const Vec8<S>& x) {
  S vs = profile.value(x[0]);
  Mat8<S> t;
  const S p2 = x[slot_p(1)], p3 = x[slot_p(2)], p4 = x[slot_p(3)];
  t[1][1] = p2;
  t[2][2] = p3;
  t[3][3] = p4;
  t[1][0] = vs * p2;
  t[slot_p(1)][slot_p(1)] = p2;
  t[slot_p(2)][slot_p(2)] = p3;
  t[slot_p(3)][slot_p(3)] = p4;
  t[slot_p(0)][slot_p(1)] = -vs * p2;
  return t;
}

inline TensorField recursion_alcubierre_degenerate(const VsProfile& profile) {
  return TensorField([profile](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return recursion_alcubierre_degenerate_value<S>(profile, x);
  });
}

// Goedel operator in original coordinates, assembled from its closed-form
// block list with S = 1/(Omega^2 p2^2) and the U/V coefficients of X_{H_G}:
// U_mu = dH/dp_mu, V_mu = dH/dq_mu (only V_2 is nonzero).
template <class S>
Mat8<S> recursion_godel_value(double omega, const Vec8<S>& x) {
  if (omega == 0.0) throw BlockDomainError("Goedel operator needs Omega_G != 0");
  if (value_of(x[slot_p(1)]) == 0.0)
    throw BlockDomainError("Goedel operator needs p2 != 0");
  if (value_of(x[1]) == 0.0) throw BlockDomainError("Goedel operator needs q2 != 0");

  MetricModel model = MetricModel::godel_approx(omega);
  S H = hamiltonian_value(model, x);
  Vec8<S> xh = hamiltonian_field_value(model, x);
  const S U[4] = {xh[0], xh[1], xh[2], xh[3]};
  S V2 = -xh[slot_p(1)];  // X_p = -dH/dq
  const S p[4] = {x[slot_p(0)], x[slot_p(1)], x[slot_p(2)], x[slot_p(3)]};
  S q2 = x[1];
  S s = 1.0 / (omega * omega * p[1] * p[1]);
  S huk = H + U[3];  // H - p4

  Mat8<S> t;
  // A block (q<-q)
  t[0][0] = p[0];
  t[2][2] = p[2];
  t[3][3] = p[3];
  t[1][1] = H * (1.0 + q2 * V2 * s);
  t[3][1] = -p[3] * p[1] * s * huk;
  // B block (p<-p)
  t[slot_p(0)][slot_p(0)] = p[0];
  t[slot_p(2)][slot_p(2)] = p[2];
  t[slot_p(3)][slot_p(3)] = p[3];
  t[slot_p(1)][slot_p(0)] = H * U[0] * p[1] * s;
  t[slot_p(1)][slot_p(1)] = H * U[1] * p[1] * s;
  t[slot_p(1)][slot_p(2)] = H * U[2] * p[1] * s;
  t[slot_p(1)][slot_p(3)] = -p[3] * p[1] * s * huk;
  // C block (q<-p)
  t[1][slot_p(0)] = H * U[0] * q2 * s;
  t[1][slot_p(2)] = H * U[2] * q2 * s;
  t[1][slot_p(1)] = H * q2 * (omega * omega) * s * (-p[1] + U[1] * U[1] * U[1] * s);
  t[1][slot_p(3)] = -p[3] * s * huk;
  t[3][slot_p(1)] = p[3] * s * huk;
  // D block (p<-q)
  t[slot_p(1)][1] = H * V2 * p[1] * s;
  return t;
}

inline TensorField recursion_godel(double omega) {
  return TensorField([omega](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return recursion_godel_value<S>(omega, x);
  });
}

// ---------------------------------------------------------------------------
// Tensor calculus on (1,1)-tensor fields
// ---------------------------------------------------------------------------

// Nijenhuis torsion N^h_{ij}; stored as one 8x8 matrix (i,j) per output
// slot h. Antisymmetric in (i,j) by construction.
inline std::array<Mat8d, 8> nijenhuis_torsion(const TensorField& T, const Vec8d& x) {
  Mat8d t0 = T(x);
  std::array<Mat8d, 8> dt;  // dt[k][i][j] = d T^i_j / d x^k
  for (int k = 0; k < kDim; ++k) {
    Mat8<dual> td = T(lift(x, k));
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) dt[k][i][j] = td[i][j].der;
  }
  std::array<Mat8d, 8> n{};
  for (int h = 0; h < kDim; ++h)
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j) {
        double acc = 0.0;
        for (int k = 0; k < kDim; ++k)
          acc += t0[k][i] * dt[k][h][j] - t0[k][j] * dt[k][h][i] +
                 t0[h][k] * (dt[j][k][i] - dt[i][k][j]);
        n[h][i][j] = acc;
        n[h][j][i] = -acc;
      }
  return n;
}

inline double nijenhuis_max(const TensorField& T, const Vec8d& x) {
  auto n = nijenhuis_torsion(T, x);
  double r = 0.0;
  for (const auto& slab : n) r = std::max(r, max_abs(slab));
  return r;
}

// Finite-difference variant used as the independent oracle for the dual
// path (step kFdStep2 by default).
inline double nijenhuis_max_fd(const TensorField& T, const Vec8d& x, double h = kFdStep2) {
  Mat8d t0 = T(x);
  std::array<Mat8d, 8> dt;
  for (int k = 0; k < kDim; ++k) {
    Vec8d xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    Mat8d tp = T(xp), tm = T(xm);
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) dt[k][i][j] = (tp[i][j] - tm[i][j]) / (2.0 * h);
  }
  double r = 0.0;
  for (int hh = 0; hh < kDim; ++hh)
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j) {
        double acc = 0.0;
        for (int k = 0; k < kDim; ++k)
          acc += t0[k][i] * dt[k][hh][j] - t0[k][j] * dt[k][hh][i] +
                 t0[hh][k] * (dt[j][k][i] - dt[i][k][j]);
        r = std::max(r, std::abs(acc));
      }
  return r;
}

// (L_X T)^i_j = X^k dT^i_j/dx^k - T^k_j dX^i/dx^k + T^i_k dX^k/dx^j.
inline Mat8d lie_derivative_tensor(const VectorField& X, const TensorField& T,
                                   const Vec8d& x) {
  Vec8d x0 = X(x);
  Mat8d jx = jacobian_impl([&X](const auto& y) { return X(y); }, x);
  Mat8d t0 = T(x);
  Mat8d out;
  std::array<Mat8d, 8> dt;
  for (int k = 0; k < kDim; ++k) {
    Mat8<dual> td = T(lift(x, k));
    for (int i = 0; i < kDim; ++i)
      for (int j = 0; j < kDim; ++j) dt[k][i][j] = td[i][j].der;
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      double acc = 0.0;
      for (int k = 0; k < kDim; ++k)
        acc += x0[k] * dt[k][i][j] - t0[k][j] * jx[i][k] + t0[i][k] * jx[k][j];
      out[i][j] = acc;
    }
  return out;
}

// [Tr(T^1), ..., Tr(T^hmax)] by repeated multiplication.
inline std::vector<double> trace_powers(const Mat8d& t, int hmax) {
  if (hmax < 1) throw ConfigError("trace powers need hmax >= 1");
  std::vector<double> out;
  out.reserve(hmax);
  Mat8d acc = t;
  out.push_back(trace(acc));
  for (int h = 2; h <= hmax; ++h) {
    acc = acc * t;
    out.push_back(trace(acc));
  }
  return out;
}

// Action-coordinate closed form 2 sum_nu (Q^nu)^h.
inline double action_trace_closed_form(const Vec8d& X, int h) {
  double s = 0.0;
  for (int nu = 0; nu < 4; ++nu) s += ipow(X[slot_q(nu)], h);
  return 2.0 * s;
}

// Degenerate-branch closed form 2 (p2^h + p3^h + p4^h).
inline double degenerate_trace_closed_form(const Vec8d& x, int h) {
  return 2.0 * (ipow(x[slot_p(1)], h) + ipow(x[slot_p(2)], h) + ipow(x[slot_p(3)], h));
}

// Trace of the assembled Goedel operator as a closed form: the cyclic
// momenta appear twice and the two invariant (2,2) entries add on top.
inline double godel_trace_closed_form(double omega, const Vec8d& x, int h) {
  MetricModel model = MetricModel::godel_approx(omega);
  double H = hamiltonian_value(model, x);
  Vec8d xh = hamiltonian_field_value(model, x);
  double p2 = x[slot_p(1)];
  double s = 1.0 / (omega * omega * p2 * p2);
  double a22 = H * (1.0 + x[1] * (-xh[slot_p(1)]) * s);
  double b22 = H * xh[1] * p2 * s;
  return 2.0 * (ipow(x[slot_p(0)], h) + ipow(x[slot_p(2)], h) + ipow(x[slot_p(3)], h)) +
         ipow(a22, h) + ipow(b22, h);
}

// Published five-term invariant sums, reported alongside the matrix traces
// (they count off-diagonal block entries as if they were diagonal, so they
// are not the trace of anything; kept for reference output only).
double alcubierre_invariant_sum_reported(const VsProfile& profile, const Vec8d& x, int h);
double godel_invariant_sum_reported(double omega, const Vec8d& x, int h);

// ---------------------------------------------------------------------------
// Profile conditions gating the original-coordinate conservation claims
// ---------------------------------------------------------------------------

struct ProfileConditionReport {
  bool applicable = false;   // vdot != 0 and the residuals are meaningful
  double c1_residual = 0.0;  // |vdot/v + 1/q1|
  double c2_residual = 0.0;  // h-dependent coupling of profile to trajectory
};

// Condition (1): vdot/v = -1/q1. Condition (2) couples vddot/vdot to the
// momenta and must hold pointwise along a trajectory for each power h.
inline ProfileConditionReport profile_conditions(const VsProfile& profile, const Vec8d& x,
                                                 int h) {
  ProfileConditionReport rep;
  double t = x[0];
  VsDerivs v = profile.eval(t);
  if (v.vdot == 0.0 || v.v == 0.0 || t == 0.0) return rep;
  rep.applicable = true;
  rep.c1_residual = std::abs(v.vdot / v.v + 1.0 / t);
  double lhs = (v.vddot / v.vdot) * ipow(v.v, h - 1);
  double p1 = x[slot_p(0)], p2 = x[slot_p(1)];
  double rhs = ipow(p1 / p2, h - 1) * ipow(p1 + v.v * p2, h - 1);
  rep.c2_residual = std::abs(lhs - rhs);
  return rep;
}

}  // namespace warpmech
