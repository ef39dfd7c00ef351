#include "warpmech/spline.hpp"

#include <algorithm>
#include <cmath>

namespace warpmech {

CubicSpline::CubicSpline(std::vector<double> t, std::vector<double> v, double slope_lo,
                         double slope_hi) {
  const int n = static_cast<int>(t.size());
  if (n < 2 || v.size() != t.size()) throw ConfigError("spline needs at least two knots");
  for (int i = 1; i < n; ++i)
    if (!(t[i] > t[i - 1])) throw ConfigError("spline knots must be strictly increasing");

  std::vector<double> h(n - 1);
  for (int i = 0; i < n - 1; ++i) h[i] = t[i + 1] - t[i];

  // Knot slopes of the clamped spline. Velocity tables are short, so a dense
  // solve keeps the irregular end rows simple.
  std::vector<double> m(n);
  {
    std::vector<std::vector<double>> A(n, std::vector<double>(n + 1, 0.0));
    A[0][0] = 1.0;
    A[0][n] = slope_lo;
    A[n - 1][n - 1] = 1.0;
    A[n - 1][n] = slope_hi;
    for (int i = 1; i < n - 1; ++i) {
      A[i][i - 1] = h[i];
      A[i][i] = 2.0 * (h[i - 1] + h[i]);
      A[i][i + 1] = h[i - 1];
      A[i][n] =
          3.0 * (h[i] * (v[i] - v[i - 1]) / h[i - 1] + h[i - 1] * (v[i + 1] - v[i]) / h[i]);
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r)
        if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
      std::swap(A[piv], A[col]);
      for (int r = 0; r < n; ++r) {
        if (r == col || A[r][col] == 0.0) continue;
        double f = A[r][col] / A[col][col];
        for (int j = col; j <= n; ++j) A[r][j] -= f * A[col][j];
      }
    }
    for (int i = 0; i < n; ++i) m[i] = A[i][n] / A[i][i];
  }

  t_ = std::move(t);
  a_.resize(n - 1);
  b_.resize(n - 1);
  c_.resize(n - 1);
  d_.resize(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    double dv = (v[i + 1] - v[i]) / h[i];
    a_[i] = v[i];
    b_[i] = m[i];
    c_[i] = (3.0 * dv - 2.0 * m[i] - m[i + 1]) / h[i];
    d_[i] = (m[i] + m[i + 1] - 2.0 * dv) / (h[i] * h[i]);
  }
  vlast_ = v.back();
  cum_.assign(n, 0.0);
  for (int i = 0; i < n - 1; ++i) {
    double s = h[i];
    cum_[i + 1] = cum_[i] + a_[i] * s + b_[i] * s * s / 2.0 + c_[i] * s * s * s / 3.0 +
                  d_[i] * s * s * s * s / 4.0;
  }
}

int CubicSpline::segment(double t) const {
  int n = static_cast<int>(t_.size());
  if (t < t_.front()) return -1;
  if (t >= t_.back()) return n - 1;
  int i = static_cast<int>(std::upper_bound(t_.begin(), t_.end(), t) - t_.begin()) - 1;
  return std::min(i, n - 2);
}

double CubicSpline::value(double t) const {
  int i = segment(t);
  if (i < 0) return a_.front();
  if (i >= static_cast<int>(a_.size())) return vlast_;
  double s = t - t_[i];
  return a_[i] + s * (b_[i] + s * (c_[i] + s * d_[i]));
}

double CubicSpline::deriv1(double t) const {
  int i = segment(t);
  if (i < 0 || i >= static_cast<int>(a_.size())) return 0.0;
  double s = t - t_[i];
  return b_[i] + s * (2.0 * c_[i] + 3.0 * s * d_[i]);
}

double CubicSpline::deriv2(double t) const {
  int i = segment(t);
  if (i < 0 || i >= static_cast<int>(a_.size())) return 0.0;
  double s = t - t_[i];
  return 2.0 * c_[i] + 6.0 * s * d_[i];
}

double CubicSpline::integral(double t) const {
  int n = static_cast<int>(t_.size());
  int i = segment(t);
  if (i < 0) return (t - t_.front()) * a_.front();
  if (i >= n - 1) return cum_.back() + (t - t_.back()) * vlast_;
  double s = t - t_[i];
  return cum_[i] + a_[i] * s + b_[i] * s * s / 2.0 + c_[i] * s * s * s / 3.0 +
         d_[i] * s * s * s * s / 4.0;
}

}  // namespace warpmech
