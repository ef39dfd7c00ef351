#include <doctest.h>

#include "warpmech/linalg.hpp"
#include "warpmech/numdiff.hpp"
#include "warpmech/phase.hpp"
#include "warpmech/rng.hpp"

using namespace warpmech;

TEST_CASE("dual arithmetic follows the product rule") {
  dual a(2.0, 1.0);
  dual b(3.0, 0.0);
  dual c = a * b;
  CHECK(c.val == doctest::Approx(6.0));
  CHECK(c.der == doctest::Approx(3.0));

  dual q = (a * a + b) / a;  // f = (x^2+3)/x, f' = 1 - 3/x^2 at x=2
  CHECK(q.der == doctest::Approx(1.0 - 3.0 / 4.0));

  // derivative of a constant is zero
  dual k(5.0);
  CHECK((k * k).der == 0.0);
}

TEST_CASE("nested duals give second derivatives") {
  // f(x) = x^3, f''(2) = 12
  dual2 x(dual(2.0, 1.0), dual(1.0, 0.0));
  dual2 f = x * x * x;
  CHECK(f.der.der == doctest::Approx(12.0));
}

TEST_CASE("gradient of coordinate and quadratic fields") {
  ScalarField q1([](const auto& x) { return x[0]; });
  Vec8d x{0.3, -1.2, 0.7, 2.0, 1.0, 2.0, 0.0, 0.0};
  Vec8d g = grad(q1, x);
  CHECK(g[0] == 1.0);
  for (int i = 1; i < 8; ++i) CHECK(g[i] == 0.0);

  ScalarField psq([](const auto& x) {
    return x[4] * x[4] + x[5] * x[5] + x[6] * x[6] + x[7] * x[7];
  });
  Vec8d gp = grad(psq, x);
  CHECK(gp[4] == doctest::Approx(2.0));
  CHECK(gp[5] == doctest::Approx(4.0));
  CHECK(gp[6] == 0.0);
}

TEST_CASE("dual gradient of the Alcubierre Hamiltonian matches central differences") {
  MetricModel model = MetricModel::alcubierre(VsProfile::constant(0.6));
  ScalarField h = hamiltonian(model);
  SplitMix64 rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    Vec8d x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    Vec8d gd = grad(h, x);
    Vec8d gf = fd_grad([&h](const Vec8d& y) { return h(y); }, x, 1e-6);
    for (int i = 0; i < 8; ++i) {
      double scale = std::max({1.0, std::abs(gd[i]), std::abs(gf[i])});
      CHECK(std::abs(gd[i] - gf[i]) / scale < 1e-5);
    }
  }
}

TEST_CASE("fd_jacobian is exact for identity and linear maps") {
  // No truncation error on linear maps; only stencil rounding survives,
  // which scales like ulp(|x|)/h.
  Vec8d x{0.1, 0.2, -0.3, 0.4, -0.5, 0.6, 0.7, -0.8};
  Mat8d ji = fd_jacobian([](const Vec8d& y) { return y; }, x, 1e-3);
  CHECK(max_abs(ji - Mat8d::identity()) < 1e-12);
  Mat8d ji5 = fd_jacobian([](const Vec8d& y) { return y; }, x, 1e-5);
  CHECK(max_abs(ji5 - Mat8d::identity()) < 1e-10);

  Mat8d a;
  SplitMix64 rng(7);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a[i][j] = rng.uniform(-1.0, 1.0);
  Mat8d jl = fd_jacobian([&a](const Vec8d& y) { return a * y; }, x, 1e-5);
  CHECK(max_abs(jl - a) < 1e-10);
}

TEST_CASE("mat_inverse round trips and rejects singular input") {
  Mat4d diag{};
  diag[0][0] = -1.0;
  diag[1][1] = 1.0;
  diag[2][2] = 1.0;
  diag[3][3] = 1.0;
  Mat4d inv = mat_inverse(diag);
  CHECK(max_abs(inv - diag) == 0.0);

  SplitMix64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    Mat4d m;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j <= i; ++j) {
        m[i][j] = m[j][i] = rng.uniform(-1.0, 1.0);
      }
      m[i][i] += 4.0;  // keep it comfortably nonsingular
    }
    Mat4d mi = mat_inverse(m);
    CHECK(max_abs(m * mi - Mat4d::identity()) < 1e-10);
    Mat4d mii = mat_inverse(mi);
    CHECK(max_abs(mii - m) < 1e-9);
  }

  Mat4d sing{};  // rank 1
  sing[0][0] = 1.0;
  sing[0][1] = 2.0;
  sing[1][0] = 0.5;
  sing[1][1] = 1.0;
  CHECK_THROWS_AS((void)mat_inverse(sing), SingularMetricError);
}

TEST_CASE("eigenvalues of diagonal, rotation and similarity-transformed matrices") {
  Mat8d d{};
  for (int i = 0; i < 8; ++i) d[i][i] = i - 3.5;
  auto ev = eigenvalues(d);
  std::array<double, 8> re;
  for (int i = 0; i < 8; ++i) re[i] = ev[i].real();
  std::sort(re.begin(), re.end());
  for (int i = 0; i < 8; ++i) {
    CHECK(re[i] == doctest::Approx(i - 3.5).epsilon(1e-12));
    CHECK(std::abs(ev[i].imag()) < 1e-12);
  }

  // 2x2 rotation block embedded in identity: eigenvalues cos t +- i sin t
  Mat8d r = Mat8d::identity();
  double th = 0.3;
  r[0][0] = std::cos(th);
  r[0][1] = -std::sin(th);
  r[1][0] = std::sin(th);
  r[1][1] = std::cos(th);
  auto evr = eigenvalues(r);
  double found = 0;
  for (auto z : evr)
    if (std::abs(z.imag()) > 1e-8) {
      CHECK(std::abs(z.real() - std::cos(th)) < 1e-10);
      CHECK(std::abs(std::abs(z.imag()) - std::sin(th)) < 1e-10);
      found += 1;
    }
  CHECK(found == 2);

  // doubly degenerate spectrum survives a random similarity transform
  SplitMix64 rng(23);
  Mat8d dd{};
  double lams[4] = {0.4, -1.3, 2.2, 0.9};
  for (int i = 0; i < 4; ++i) {
    dd[i][i] = lams[i];
    dd[i + 4][i + 4] = lams[i];
  }
  Mat8d s;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) s[i][j] = rng.uniform(-0.3, 0.3);
  for (int i = 0; i < 8; ++i) s[i][i] += 1.0;
  Mat8d m = s * dd * mat_inverse(s);
  auto evm = eigenvalues(m);
  std::array<double, 8> rem;
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(evm[i].imag()) < 1e-7);
    rem[i] = evm[i].real();
  }
  std::sort(rem.begin(), rem.end());
  for (int i = 0; i < 8; i += 2) CHECK(std::abs(rem[i] - rem[i + 1]) < 1e-7);
}

TEST_CASE("dual gradient matches central differences for the Goedel Hamiltonian") {
  MetricModel model = MetricModel::godel_approx(0.12);
  ScalarField h = hamiltonian(model);
  SplitMix64 rng(13);
  for (int rep = 0; rep < 100; ++rep) {
    Vec8d x;
    for (auto& c : x) c = rng.uniform(-2.0, 2.0);
    x[1] = rng.uniform(0.4, 2.5);
    Vec8d gd = grad(h, x);
    Vec8d gf = fd_grad([&h](const Vec8d& y) { return h(y); }, x, 1e-6);
    for (int i = 0; i < 8; ++i) {
      double scale = std::max({1.0, std::abs(gd[i]), std::abs(gf[i])});
      CHECK(std::abs(gd[i] - gf[i]) / scale < 1e-5);
    }
  }
}

TEST_CASE("non-finite evaluations are rejected") {
  ScalarField div0([](const auto& x) { return 1.0 / x[0]; });
  Vec8d x{};
  CHECK_THROWS_AS((void)grad(div0, x), NumericalDomainError);

  CHECK_THROWS_AS(
      (void)fd_jacobian([](const Vec8d& y) {
        Vec8d out = y;
        out[0] = 1.0 / (y[0] - 1e300 * 1e300 * 0.0);
        out[0] = std::numeric_limits<double>::quiet_NaN();
        return out;
      }, x, 1e-5),
      NumericalDomainError);
  CHECK_THROWS_AS((void)fd_jacobian([](const Vec8d& y) { return y; }, x, 0.0),
                  NumericalDomainError);
}
