#pragma once

#include <functional>

#include "warpmech/errors.hpp"
#include "warpmech/fields.hpp"
#include "warpmech/linalg.hpp"

namespace warpmech {

// Default steps for finite-difference oracles: first derivatives use 1e-6,
// second-derivative cross-checks 1e-4 (truncation vs rounding trade-off).
constexpr double kFdStep1 = 1e-6;
constexpr double kFdStep2 = 1e-4;

// Lift a point into duals seeded along direction k.
template <class S>
Vec8<Dual<S>> lift(const Vec8<S>& x, int k) {
  Vec8<Dual<S>> d{};
  for (int i = 0; i < kDim; ++i) d[i] = Dual<S>(x[i], S(i == k ? 1.0 : 0.0));
  return d;
}

// Gradient of a scalar field by one dual sweep per direction.
template <class S, class F>
Vec8<S> grad_impl(const F& f, const Vec8<S>& x) {
  Vec8<S> g{};
  for (int k = 0; k < kDim; ++k) g[k] = f(lift(x, k)).der;
  return g;
}

inline Vec8d grad(const ScalarField& f, const Vec8d& x) {
  Vec8d g = grad_impl(f, x);
  if (!all_finite(g)) throw NumericalDomainError("gradient is not finite");
  return g;
}

// Jacobian of a map by dual sweeps: J[i][j] = dF_i/dx_j.
template <class S, class F>
Mat8<S> jacobian_impl(const F& f, const Vec8<S>& x) {
  Mat8<S> j;
  for (int col = 0; col < kDim; ++col) {
    auto w = f(lift(x, col));
    for (int row = 0; row < kDim; ++row) j[row][col] = w[row].der;
  }
  return j;
}

inline Mat8d jacobian(const VectorField& f, const Vec8d& x) {
  Mat8d j = jacobian_impl(f, x);
  if (!all_finite(j)) throw NumericalDomainError("jacobian is not finite");
  return j;
}

// Central-difference Jacobian; the independent oracle for the dual path.
template <class F>
Mat8d fd_jacobian(const F& f, const Vec8d& x, double h = 1e-5) {
  if (!(h > 0.0)) throw NumericalDomainError("fd_jacobian needs h > 0");
  Mat8d j;
  for (int col = 0; col < kDim; ++col) {
    Vec8d xp = x, xm = x;
    xp[col] += h;
    xm[col] -= h;
    Vec8d fp = f(xp), fm = f(xm);
    if (!all_finite(fp) || !all_finite(fm))
      throw NumericalDomainError("fd_jacobian stencil value is not finite");
    for (int row = 0; row < kDim; ++row) j[row][col] = (fp[row] - fm[row]) / (2.0 * h);
  }
  return j;
}

template <class F>
Vec8d fd_grad(const F& f, const Vec8d& x, double h = kFdStep1) {
  Vec8d g{};
  for (int k = 0; k < kDim; ++k) {
    Vec8d xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    double fp = f(xp), fm = f(xm);
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw NumericalDomainError("fd_grad stencil value is not finite");
    g[k] = (fp - fm) / (2.0 * h);
  }
  return g;
}

}  // namespace warpmech
