#pragma once

#include <vector>

#include "warpmech/errors.hpp"

namespace warpmech {

// Clamped cubic spline through (t_i, v_i) knots. End slopes default to zero;
// evaluation outside the knot range clamps to the end values.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> t, std::vector<double> v, double slope_lo = 0.0,
              double slope_hi = 0.0);

  double value(double t) const;
  double deriv1(double t) const;
  double deriv2(double t) const;
  // Antiderivative of the spline measured from the first knot.
  double integral(double t) const;

  bool empty() const { return t_.empty(); }

 private:
  int segment(double t) const;

  std::vector<double> t_, a_, b_, c_, d_;  // per-segment cubic coefficients
  std::vector<double> cum_;                // integral up to each knot
  double vlast_ = 0.0;
};

}  // namespace warpmech
