#include <doctest.h>

#include "warpmech/phase.hpp"
#include "warpmech/rng.hpp"

using namespace warpmech;

namespace {

Vec8d sample_point(SplitMix64& rng, double lo = -2.0, double hi = 2.0) {
  Vec8d x;
  for (auto& c : x) c = rng.uniform(lo, hi);
  return x;
}

Vec8d sample_godel_point(SplitMix64& rng) {
  Vec8d x = sample_point(rng);
  x[1] = rng.uniform(0.4, 2.5);  // keep q2 away from 0
  return x;
}

}  // namespace

TEST_CASE("Hamiltonian values for both models") {
  MetricModel mink = MetricModel::alcubierre(VsProfile::constant(0.0));
  Vec8d x{};
  x[slot_p(0)] = 1.0;
  CHECK(hamiltonian_value(mink, x) == doctest::Approx(-0.5));

  MetricModel alc = MetricModel::alcubierre(VsProfile::constant(0.5));
  Vec8d y{};
  y[slot_p(0)] = -1.5;
  y[slot_p(1)] = 1.0;
  CHECK(hamiltonian_value(alc, y) == doctest::Approx(0.0));

  MetricModel god = MetricModel::godel_approx(0.0);
  Vec8d z{};
  z[1] = 1.0;
  z[slot_p(0)] = 1.0;
  z[slot_p(2)] = 1.0;
  CHECK(hamiltonian_value(god, z) == doctest::Approx(0.0));
}

TEST_CASE("Goedel Hamiltonian expands to its explicit coefficient form") {
  double omega = 0.17;
  MetricModel god = MetricModel::godel_approx(omega);
  SplitMix64 rng(101);
  for (int rep = 0; rep < 50; ++rep) {
    Vec8d x = sample_godel_point(rng);
    double u = x[1];
    double d = u * u * omega * omega + 1.0;
    double p1 = x[slot_p(0)], p2 = x[slot_p(1)], p3 = x[slot_p(2)], p4 = x[slot_p(3)];
    double expect = p1 * p1 / (2.0 * d) - 0.5 * p2 * p2 - p3 * p3 / (2.0 * u * u * d) +
                    omega * p1 * p3 / d - 0.5 * p4 * p4;
    CHECK(hamiltonian_value(god, x) == doctest::Approx(expect).epsilon(1e-13));
  }
}

TEST_CASE("Hamiltonian vector field components") {
  // constant v_s conserves every momentum
  MetricModel alc = MetricModel::alcubierre(VsProfile::constant(0.5));
  SplitMix64 rng(7);
  Vec8d x = sample_point(rng);
  Vec8d f = hamiltonian_field_value(alc, x);
  for (int nu = 0; nu < 4; ++nu) CHECK(f[slot_p(nu)] == 0.0);

  // inverse-time profile: pdot_1 = vdot_s (p1 + v_s p2) p2 at q1 = 1
  MetricModel it = MetricModel::alcubierre(VsProfile::inverse_time(2.0));
  Vec8d y{};
  y[0] = 1.0;
  y[slot_p(0)] = 1.0;
  y[slot_p(1)] = 1.0;
  Vec8d g = hamiltonian_field_value(it, y);
  CHECK(g[slot_p(0)] == doctest::Approx(-6.0));
  CHECK(g[slot_p(1)] == doctest::Approx(0.0));

  // Goedel: qdot_2 = -p2 and only pdot_2 is forced
  MetricModel god = MetricModel::godel_approx(0.05);
  Vec8d z = sample_godel_point(rng);
  Vec8d h = hamiltonian_field_value(god, z);
  CHECK(h[1] == doctest::Approx(-z[slot_p(1)]));
  CHECK(h[slot_p(0)] == 0.0);
  CHECK(h[slot_p(2)] == 0.0);
  CHECK(h[slot_p(3)] == 0.0);
}

TEST_CASE("closed-form Goedel force component matches autodiff to leading order") {
  // The V_2 closed form drops an O(Omega^3) cross term; compare against the
  // exact derivative with an Omega^3-scaled allowance and exactly at 0.
  SplitMix64 rng(311);
  for (double omega : {0.0, 0.02, 0.05}) {
    MetricModel god = MetricModel::godel_approx(omega);
    for (int rep = 0; rep < 25; ++rep) {
      Vec8d x = sample_godel_point(rng);
      double u = x[1];
      double p1 = x[slot_p(0)], p3 = x[slot_p(2)];
      double d = u * u * omega * omega + 1.0;
      double closed = (u * u * omega * omega * (2.0 * p3 * p3 - u * u * p1 * p1) +
                       p3 * (p3 - omega * omega * omega * u * u * p1)) /
                      (u * u * u * d * d);
      double v2 = -hamiltonian_field_value(god, x)[slot_p(1)];
      double slack = 40.0 * omega * omega * omega + 1e-13;
      CHECK(std::abs(v2 - closed) <= slack);
    }
  }
}

TEST_CASE("weighted Poisson brackets") {
  ScalarField P1([](const auto& x) { return x[slot_p(0)]; });
  ScalarField Q1([](const auto& x) { return x[0]; });
  Vec8d x{3.0, 1.0, 1.0, 1.0, 0.2, 0.4, 0.6, 0.8};
  CHECK(poisson_bracket(P1, Q1, x, 0) == doctest::Approx(1.0));
  CHECK(poisson_bracket(P1, Q1, x, 1) == doctest::Approx(3.0));

  ScalarField H0([](const auto& x) { return x[0]; });
  ScalarField Ht([](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    S acc{};
    for (int nu = 0; nu < 4; ++nu) acc += x[slot_q(nu)] * x[slot_p(nu)];
    return S(-1.0) * acc;
  });
  CHECK(poisson_bracket(H0, Ht, x, 0) == doctest::Approx(x[0]));
}

namespace {

// Generic quadratic form; stays differentiable at any dual nesting depth.
struct Quad {
  std::array<double, 36> c{};
  template <class S>
  S operator()(const Vec8<S>& x) const {
    S acc{};
    int k = 0;
    for (int i = 0; i < 8; ++i)
      for (int j = i; j < 8; ++j) acc += c[k++] * x[i] * x[j];
    return acc;
  }
};

template <class F, class G>
auto canonical_bracket_fn(F a, G b) {
  return [a, b](const auto& x) {
    using S = std::decay_t<decltype(x[0])>;
    S acc{};
    for (int nu = 0; nu < 4; ++nu) {
      auto xa = lift(x, slot_p(nu));
      auto xq = lift(x, slot_q(nu));
      acc += a(xa).der * b(xq).der - a(xq).der * b(xa).der;
    }
    return acc;
  };
}

}  // namespace

TEST_CASE("bracket antisymmetry and Jacobi identity on random quadratics") {
  SplitMix64 rng(67);
  auto random_quadratic = [&rng]() {
    Quad q;
    for (auto& v : q.c) v = rng.uniform(-1.0, 1.0);
    return q;
  };
  Quad f = random_quadratic(), g = random_quadratic(), h = random_quadratic();
  ScalarField sf(f), sg(g);
  for (int rep = 0; rep < 100; ++rep) {
    Vec8d x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    for (int j = 0; j <= 2; ++j)
      CHECK(std::abs(poisson_bracket(sf, sg, x, j) + poisson_bracket(sg, sf, x, j)) < 1e-12);
  }

  // Jacobi identity: cyclic sum of nested canonical brackets vanishes.
  auto gh = canonical_bracket_fn(g, h);
  auto hf = canonical_bracket_fn(h, f);
  auto fg = canonical_bracket_fn(f, g);
  auto f_gh = canonical_bracket_fn(f, gh);
  auto g_hf = canonical_bracket_fn(g, hf);
  auto h_fg = canonical_bracket_fn(h, fg);
  SplitMix64 rng2(68);
  for (int rep = 0; rep < 20; ++rep) {
    Vec8d x;
    for (auto& c : x) c = rng2.uniform(-1.5, 1.5);
    double cyc = f_gh(x) + g_hf(x) + h_fg(x);
    CHECK(std::abs(cyc) < 1e-9);
  }
}

TEST_CASE("structure equation iota_X omega = -dH and energy self-derivative") {
  SplitMix64 rng(91);
  MetricModel alc = MetricModel::alcubierre(VsProfile::constant(0.7));
  MetricModel god = MetricModel::godel_approx(0.08);
  for (int rep = 0; rep < 100; ++rep) {
    Vec8d xa = sample_point(rng);
    CHECK(hamiltonian_structure_residual(alc, xa) < 1e-10);
    Vec8d xg = sample_godel_point(rng);
    CHECK(hamiltonian_structure_residual(god, xg) < 1e-10);

    // X_H(H) = {H, H} = 0
    ScalarField ha = hamiltonian(alc);
    CHECK(std::abs(poisson_bracket(ha, ha, xa, 0)) < 1e-10);
    Vec8d f = hamiltonian_field_value(alc, xa);
    Vec8d dh = grad(ha, xa);
    double along = 0.0;
    for (int i = 0; i < 8; ++i) along += f[i] * dh[i];
    CHECK(std::abs(along) < 1e-10);
  }
}

TEST_CASE("bivector and two-form families") {
  Vec8d x{1.0, 2.0, 3.0, 4.0, -1.0, -2.0, -3.0, -4.0};
  Mat8d b1 = bivector_matrix<double>(1, x);
  for (int nu = 0; nu < 4; ++nu) {
    CHECK(b1[slot_q(nu)][slot_p(nu)] == doctest::Approx(x[nu]));
    CHECK(b1[slot_p(nu)][slot_q(nu)] == doctest::Approx(-x[nu]));
  }

  Vec8d two{2.0, 2.0, 2.0, 2.0, 1.0, 1.0, 1.0, 1.0};
  Mat8d wneg = twoform_matrix<double>(-1, two);
  CHECK(wneg[slot_p(0)][slot_q(0)] == doctest::Approx(0.5));

  // antisymmetry is structural
  SplitMix64 rng(115);
  for (int h = 0; h <= 3; ++h) {
    Vec8d y;
    for (auto& c : y) c = rng.uniform(0.5, 4.0);
    Mat8d b = bivector_matrix<double>(h, y);
    Mat8d w = twoform_matrix<double>(h, y);
    CHECK(max_abs(b + b.transpose()) == 0.0);
    CHECK(max_abs(w + w.transpose()) == 0.0);
    // nondegeneracy on the sampled box
    CHECK(std::abs(determinant(w)) > 0.0);
    // opposite-weight pairing inverts up to the structure sign
    Mat8d composite = twoform_matrix<double>(-h, y).transpose() * b;
    CHECK(max_abs(composite + Mat8d::identity()) < 1e-12);
  }

  CHECK_THROWS_AS((void)twoform_matrix<double>(-1, Vec8d{}), ZeroCoordinateError);
}

TEST_CASE("structure equation also holds for time-dependent profiles") {
  MetricModel it = MetricModel::alcubierre(VsProfile::inverse_time(1.7));
  SplitMix64 rng(417);
  for (int rep = 0; rep < 50; ++rep) {
    Vec8d x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    x[0] = rng.uniform(0.5, 4.0);
    CHECK(hamiltonian_structure_residual(it, x) < 1e-10);
  }
}
