#pragma once

#include "warpmech/errors.hpp"
#include "warpmech/fields.hpp"
#include "warpmech/metrics.hpp"
#include "warpmech/numdiff.hpp"

namespace warpmech {

// H(q, p) = (1/2) sum g^{nu mu}(q) p_nu p_mu. Built generically from the
// inverse metric so the Hamiltonian, its differential and its vector field
// stay mutually consistent for every model.
template <class S>
S hamiltonian_value(const MetricModel& model, const Vec8<S>& x) {
  Vec4<S> q{x[0], x[1], x[2], x[3]};
  Mat4<S> gi = inverse_metric(model, q);
  S h{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h += gi[i][j] * x[slot_p(i)] * x[slot_p(j)];
  return 0.5 * h;
}

inline ScalarField hamiltonian(const MetricModel& model) {
  return ScalarField([model](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return hamiltonian_value<S>(model, x);
  });
}

// X_H = (dH/dp, -dH/dq), differentiated with one nested dual sweep per slot.
template <class S>
Vec8<S> hamiltonian_field_value(const MetricModel& model, const Vec8<S>& x) {
  Vec8<S> out{};
  for (int nu = 0; nu < 4; ++nu) {
    out[slot_q(nu)] = hamiltonian_value(model, lift(x, slot_p(nu))).der;
    out[slot_p(nu)] = -hamiltonian_value(model, lift(x, slot_q(nu))).der;
  }
  return out;
}

inline VectorField hamiltonian_vector_field(const MetricModel& model) {
  return VectorField([model](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return hamiltonian_field_value<S>(model, x);
  });
}

// Weighted Poisson bracket on action coordinates,
//   {f,g}_j = sum_nu (Q^nu)^j (df/dP_nu dg/dQ^nu - df/dQ^nu dg/dP_nu);
// j = 0 is the canonical bracket (valid in any chart).
inline double poisson_bracket(const ScalarField& f, const ScalarField& g, const Vec8d& x,
                              int weight = 0) {
  if (weight < 0) throw ConfigError("bracket weight must be >= 0");
  Vec8d gf = grad(f, x);
  Vec8d gg = grad(g, x);
  double acc = 0.0;
  for (int nu = 0; nu < 4; ++nu) {
    double w = ipow(x[slot_q(nu)], weight);
    acc += w * (gf[slot_p(nu)] * gg[slot_q(nu)] - gf[slot_q(nu)] * gg[slot_p(nu)]);
  }
  return acc;
}

// Component matrices. Conventions, used consistently everywhere:
//  - two-form W:  (iota_X omega)_b = sum_a X^a W[a][b]; canonical omega has
//    W[p_nu][q_nu] = +1, so iota_{X_H} omega = -dH holds with X_H above.
//  - bivector B:  X_f = B * grad(f); canonical P has B[q_nu][p_nu] = +1.
// Composing the weight-(-h) form with the weight-h bivector returns minus
// the identity, matching iota_{X_f} omega = -df.

template <class S>
Mat8<S> bivector_matrix(int h, const Vec8<S>& x) {
  Mat8<S> b;
  for (int nu = 0; nu < 4; ++nu) {
    S w = ipow(x[slot_q(nu)], h);
    b[slot_q(nu)][slot_p(nu)] = w;
    b[slot_p(nu)][slot_q(nu)] = -w;
  }
  return b;
}

template <class S>
Mat8<S> twoform_matrix(int h, const Vec8<S>& x) {
  Mat8<S> w;
  for (int nu = 0; nu < 4; ++nu) {
    if (h < 0 && value_of(x[slot_q(nu)]) == 0.0)
      throw ZeroCoordinateError("inverse coordinate power at Q = 0");
    S c = ipow(x[slot_q(nu)], h);
    w[slot_p(nu)][slot_q(nu)] = c;
    w[slot_q(nu)][slot_p(nu)] = -c;
  }
  return w;
}

// P'_h = sum (Q^nu)^h d/dP ^ d/dQ; h = 0 canonical, h = 1 the second
// structure of the pencil.
inline BivectorField bivector_family(int h) {
  if (h < 0) throw ConfigError("bivector family index must be >= 0");
  return BivectorField([h](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return bivector_matrix<S>(h, x);
  });
}

// omega'_h = sum (Q^nu)^h dP ^ dQ; h may be negative (all Q^nu != 0 then),
// h = -1 being the form paired with the weight-1 bivector.
inline TwoFormField twoform_family(int h) {
  return TwoFormField([h](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    return twoform_matrix<S>(h, x);
  });
}

inline Mat8d canonical_omega() { return twoform_matrix<double>(0, Vec8d{}); }

// Componentwise residual of iota_{X_H} omega + dH at x.
inline double hamiltonian_structure_residual(const MetricModel& model, const Vec8d& x) {
  Vec8d xh = hamiltonian_field_value(model, x);
  Vec8d dh = grad(hamiltonian(model), x);
  Mat8d w = canonical_omega();
  double r = 0.0;
  for (int b = 0; b < kDim; ++b) {
    double c = dh[b];
    for (int a = 0; a < kDim; ++a) c += xh[a] * w[a][b];
    r = std::max(r, std::abs(c));
  }
  return r;
}

}  // namespace warpmech
