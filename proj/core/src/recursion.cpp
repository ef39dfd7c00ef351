#include "warpmech/recursion.hpp"

namespace warpmech {

double alcubierre_invariant_sum_reported(const VsProfile& profile, const Vec8d& x, int h) {
  VsDerivs v = profile.eval(x[0]);
  double p1 = x[slot_p(0)], p2 = x[slot_p(1)], p3 = x[slot_p(2)], p4 = x[slot_p(3)];
  double r = p1 + v.v * p2;
  double J = 1.0 / r;
  double H = hamiltonian_value(MetricModel::alcubierre(profile), x);
  return ipow(H, h) + 2.0 * (ipow(p2, h) + ipow(p3, h) + ipow(p4, h)) +
         ipow(H * p1 * J, h) + ipow(v.v * p2 * x[0] * (H - p2) * J * J, h) +
         ipow(v.vdot * p2 * H, h);
}

double godel_invariant_sum_reported(double omega, const Vec8d& x, int h) {
  MetricModel model = MetricModel::godel_approx(omega);
  double H = hamiltonian_value(model, x);
  Vec8d xh = hamiltonian_field_value(model, x);
  double v2 = -xh[slot_p(1)];
  double p2 = x[slot_p(1)], p3 = x[slot_p(2)], p4 = x[slot_p(3)];
  double q2 = x[1];
  double s = 1.0 / (omega * omega * p2 * p2);
  return 2.0 * (ipow(p2, h) + ipow(p3, h) + ipow(p4, h)) +
         ipow(H * (1.0 + q2 * v2 * s), h) + ipow(-H / (omega * omega), h) +
         ipow(-H * q2 / p2, h) * ipow(1.0 + 1.0 / (omega * omega), h) +
         ipow(H * v2 * s * p2, h);
}

}  // namespace warpmech
