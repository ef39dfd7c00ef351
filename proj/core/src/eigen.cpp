#include <algorithm>
#include <complex>

#include "warpmech/linalg.hpp"

namespace warpmech {
namespace {

using cdouble = std::complex<double>;

constexpr int N = 8;
using CMat = std::array<std::array<cdouble, N>, N>;

// Reduce to upper Hessenberg form by stabilized elementary eliminations.
void hessenberg(CMat& a) {
  for (int col = 0; col < N - 2; ++col) {
    int piv = col + 1;
    double best = std::abs(a[piv][col]);
    for (int r = col + 2; r < N; ++r) {
      if (std::abs(a[r][col]) > best) {
        best = std::abs(a[r][col]);
        piv = r;
      }
    }
    if (best == 0.0) continue;
    if (piv != col + 1) {
      std::swap(a[piv], a[col + 1]);
      for (int r = 0; r < N; ++r) std::swap(a[r][piv], a[r][col + 1]);
    }
    for (int r = col + 2; r < N; ++r) {
      cdouble f = a[r][col] / a[col + 1][col];
      if (f == 0.0) continue;
      for (int j = col; j < N; ++j) a[r][j] -= f * a[col + 1][j];
      for (int j = 0; j < N; ++j) a[j][col + 1] += f * a[j][r];
    }
  }
}

// Explicit shifted QR step on the active block [lo, hi]: factor A - sI by
// Givens rotations, form RQ + sI. Rotations touch full rows/columns so the
// similarity stays global.
void qr_step(CMat& a, int lo, int hi, cdouble shift) {
  std::array<std::pair<cdouble, cdouble>, N> rot;
  for (int k = lo; k <= hi; ++k) a[k][k] -= shift;
  for (int k = lo; k < hi; ++k) {
    cdouble x = a[k][k], y = a[k + 1][k];
    double n = std::sqrt(std::norm(x) + std::norm(y));
    cdouble c = 1.0, s = 0.0;
    if (n > 0.0) {
      c = x / n;
      s = y / n;
    }
    rot[k] = {c, s};
    for (int j = k; j < N; ++j) {
      cdouble t1 = a[k][j], t2 = a[k + 1][j];
      a[k][j] = std::conj(c) * t1 + std::conj(s) * t2;
      a[k + 1][j] = -s * t1 + c * t2;
    }
  }
  for (int k = lo; k < hi; ++k) {
    auto [c, s] = rot[k];
    int top = std::min(k + 2, N - 1);
    for (int i = 0; i <= top; ++i) {
      cdouble t1 = a[i][k], t2 = a[i][k + 1];
      a[i][k] = t1 * c + t2 * s;
      a[i][k + 1] = -t1 * std::conj(s) + t2 * std::conj(c);
    }
  }
  for (int k = lo; k <= hi; ++k) a[k][k] += shift;
}

cdouble wilkinson_shift(const CMat& a, int hi) {
  cdouble h00 = a[hi - 1][hi - 1], h01 = a[hi - 1][hi];
  cdouble h10 = a[hi][hi - 1], h11 = a[hi][hi];
  cdouble tr = h00 + h11;
  cdouble det = h00 * h11 - h01 * h10;
  cdouble disc = std::sqrt(tr * tr - 4.0 * det);
  cdouble l1 = (tr + disc) / 2.0, l2 = (tr - disc) / 2.0;
  return std::abs(l1 - h11) < std::abs(l2 - h11) ? l1 : l2;
}

}  // namespace

std::array<cdouble, 8> eigenvalues(const Mat8d& m) {
  CMat a;
  double scale = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      a[i][j] = m[i][j];
      scale = std::max(scale, std::abs(m[i][j]));
    }
  std::array<cdouble, 8> ev{};
  if (scale == 0.0) return ev;

  hessenberg(a);
  const double eps = 1e-16 * std::max(scale, 1.0);
  int hi = N - 1;
  int iter = 0;
  while (hi >= 0) {
    if (hi == 0) {
      ev[0] = a[0][0];
      break;
    }
    // deflate negligible subdiagonals
    int lo = hi;
    while (lo > 0 &&
           std::abs(a[lo][lo - 1]) >
               1e-16 * (std::abs(a[lo][lo]) + std::abs(a[lo - 1][lo - 1])) + eps)
      --lo;
    if (lo == hi) {
      ev[hi] = a[hi][hi];
      --hi;
      iter = 0;
      continue;
    }
    cdouble shift = wilkinson_shift(a, hi);
    if (++iter % 16 == 0)
      shift += cdouble(0.75 * std::abs(a[hi][hi - 1]), 0.0);  // exceptional nudge
    qr_step(a, lo, hi, shift);
    if (iter > 500) {
      for (int i = lo; i <= hi; ++i) ev[i] = a[i][i];
      hi = lo - 1;
      iter = 0;
    }
  }
  return ev;
}

}  // namespace warpmech
