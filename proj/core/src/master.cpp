#include "warpmech/master.hpp"

namespace warpmech {

namespace {

double frobenius_dot(const Mat8d& a, const Mat8d& b) {
  double acc = 0.0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) acc += a[i][j] * b[i][j];
  return acc;
}

Mat8d matrix_power(const Mat8d& t, int n) {
  Mat8d acc = t;
  for (int i = 1; i < n; ++i) acc = acc * t;
  return acc;
}

}  // namespace

ConformalCoefficients conformal_check(const Vec8d& x, double fit_tol) {
  VectorField y0 = master_symmetry(0);
  ConformalCoefficients c;

  // L_{Y_0} P against P: the canonical bivector is constant, so the fit
  // target is its own matrix.
  Mat8d lp = lie_derivative_bivector(y0, bivector_family(0), x);
  Mat8d p0 = bivector_matrix<double>(0, x);
  c.alpha = frobenius_dot(lp, p0) / frobenius_dot(p0, p0);
  Mat8d res0 = lp - c.alpha * p0;
  if (max_abs(res0) > fit_tol)
    throw FitResidualError("L_{Y0} P is not proportional to P");

  Mat8d lp1 = lie_derivative_bivector(y0, bivector_family(1), x);
  Mat8d p1 = bivector_matrix<double>(1, x);
  c.beta = frobenius_dot(lp1, p1) / frobenius_dot(p1, p1);
  if (max_abs(lp1 - c.beta * p1) > fit_tol)
    throw FitResidualError("L_{Y0} P_1 is not proportional to P_1");

  // L_{Y_0} H = Y_0(H) with H = Q1.
  double h = x[0];
  if (h == 0.0) throw FitResidualError("conformal fit needs Q1 != 0");
  double lh = master_symmetry_value<double>(0, x)[0];  // Y_0 applied to Q1
  c.gamma = lh / h;
  return c;
}

ScalingRelationReport scaling_relations_check(int h, int l, const Vec8d& x) {
  ScalingRelationReport rep;
  VectorField yh = scaled_symmetry(h);

  // [Y'_h, Y'_l] = (h - l) Y'_{h+l}
  Vec8d b1 = lie_bracket_vf(yh, scaled_symmetry(l), x);
  rep.residual[0] = max_abs(b1 - double(h - l) * scaled_symmetry_value<double>(h + l, x));

  // [Y'_h, X'_l] = -(l + 1) X'_{h+l}
  VectorField xl([l](const auto& v) {
    using S = std::decay_t<decltype(v[0])>;
    return translated_field_value<S>(l, v);
  });
  Vec8d b2 = lie_bracket_vf(yh, xl, x);
  rep.residual[1] =
      max_abs(b2 - double(-(l + 1)) * translated_field_value<double>(h + l, x));

  // L_{Y'_h} P'_l = (h - l) P'_{h+l}
  Mat8d lb = lie_derivative_bivector(yh, bivector_family(l), x);
  rep.residual[2] = max_abs(lb - double(h - l) * bivector_matrix<double>(h + l, x));

  // L_{Y'_h} w'_l = -(l + h) w'_{h+l}
  Mat8d lw = lie_derivative_twoform(yh, twoform_family(l), x);
  rep.residual[3] = max_abs(lw - double(-(l + h)) * twoform_matrix<double>(h + l, x));

  // L_{Y'_h} T = -T^{1+h}
  Mat8d lt = lie_derivative_tensor(yh, recursion_action(), x);
  rep.residual[4] = max_abs(lt + matrix_power(recursion_action_value<double>(x), 1 + h));

  // <dH'_l, Y'_h> = -(h + l + 1) H'_{h+l}
  Vec8d y0 = scaled_symmetry_value<double>(h, x);
  Vec8<dual> xd;
  for (int i = 0; i < kDim; ++i) xd[i] = dual(x[i], y0[i]);
  double pairing = ladder_hamiltonian_value<dual>(l, xd).der;
  rep.residual[5] = std::abs(pairing + double(h + l + 1) *
                                           ladder_hamiltonian_value<double>(h + l, x));

  // Specific coefficients against the general conformal-coefficient forms
  // evaluated at (alpha, beta, gamma) = (0, -1, -1).
  const double alpha = 0.0, beta = -1.0, gamma = -1.0;
  double spec[6] = {double(h - l), double(-(l + 1)),  double(h - l),
                    double(-(l + h)), -1.0, double(-(h + l + 1))};
  double gen[6] = {(beta - alpha) * double(l - h),
                   beta + gamma + double(l - 1) * (gamma - alpha),
                   beta + double(l - h - 1) * (beta - alpha),
                   beta + double(l + h - 1) * (beta - alpha),
                   beta - alpha,
                   gamma + double(l + h) * (beta - alpha)};
  for (int i = 0; i < 6; ++i)
    rep.coefficient_gap = std::max(rep.coefficient_gap, std::abs(spec[i] - gen[i]));
  return rep;
}

double bihamiltonian_residual(int i, const Vec8d& x) {
  if (x[0] == 0.0) throw ZeroCoordinateError("pencil Hamiltonians need Q1 != 0");
  Vec8d xi{};
  xi[slot_p(0)] = i == 0 ? -1.0 : -ipow(x[0], -i);

  auto gradient = [&x](int j) {
    Vec8d g{};
    for (int k = 0; k < kDim; ++k) g[k] = pencil_hamiltonian_value<dual>(j, lift(x, k)).der;
    return g;
  };
  Vec8d rep0 = bivector_matrix<double>(0, x) * gradient(i);
  Vec8d rep1 = bivector_matrix<double>(1, x) * gradient(i + 1);
  return std::max(max_abs(rep0 - xi), max_abs(rep1 - xi));
}

}  // namespace warpmech
