#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "warpmech/dual.hpp"
#include "warpmech/errors.hpp"

namespace warpmech {

template <class S, std::size_t N>
using Vec = std::array<S, N>;

template <class S>
using Vec4 = Vec<S, 4>;
template <class S>
using Vec8 = Vec<S, 8>;

using Vec4d = Vec4<double>;
using Vec8d = Vec8<double>;

// Phase-space slot layout: q^1..q^4 in 0..3, p_1..p_4 in 4..7. The same
// layout is reused for action coordinates (Q^1..Q^4, P_1..P_4).
constexpr int kDim = 8;
constexpr int slot_q(int nu) { return nu; }      // nu in 0..3
constexpr int slot_p(int nu) { return nu + 4; }  // nu in 0..3

template <class S, int N>
struct Mat {
  std::array<std::array<S, N>, N> m{};

  std::array<S, N>& operator[](int i) { return m[i]; }
  const std::array<S, N>& operator[](int i) const { return m[i]; }

  static Mat identity() {
    Mat r;
    for (int i = 0; i < N; ++i) r[i][i] = S(1.0);
    return r;
  }

  Mat transpose() const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r[j][i] = m[i][j];
    return r;
  }
};

template <class S>
using Mat4 = Mat<S, 4>;
template <class S>
using Mat8 = Mat<S, 8>;
using Mat4d = Mat4<double>;
using Mat8d = Mat8<double>;

template <class S, int N>
Mat<S, N> operator+(const Mat<S, N>& a, const Mat<S, N>& b) {
  Mat<S, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

template <class S, int N>
Mat<S, N> operator-(const Mat<S, N>& a, const Mat<S, N>& b) {
  Mat<S, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

template <class S, int N>
Mat<S, N> operator*(const Mat<S, N>& a, const Mat<S, N>& b) {
  Mat<S, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      S acc{};
      for (int k = 0; k < N; ++k) acc += a[i][k] * b[k][j];
      r[i][j] = acc;
    }
  return r;
}

template <class S, int N>
Mat<S, N> operator*(double c, const Mat<S, N>& a) {
  Mat<S, N> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r[i][j] = c * a[i][j];
  return r;
}

template <class S, int N>
Vec<S, std::size_t(N)> operator*(const Mat<S, N>& a, const Vec<S, std::size_t(N)>& x) {
  Vec<S, std::size_t(N)> r{};
  for (int i = 0; i < N; ++i) {
    S acc{};
    for (int k = 0; k < N; ++k) acc += a[i][k] * x[k];
    r[i] = acc;
  }
  return r;
}

template <class S, std::size_t N>
Vec<S, N> operator+(const Vec<S, N>& a, const Vec<S, N>& b) {
  Vec<S, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class S, std::size_t N>
Vec<S, N> operator-(const Vec<S, N>& a, const Vec<S, N>& b) {
  Vec<S, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <class S, std::size_t N>
Vec<S, N> operator*(double c, const Vec<S, N>& a) {
  Vec<S, N> r{};
  for (std::size_t i = 0; i < N; ++i) r[i] = c * a[i];
  return r;
}

template <std::size_t N>
double max_abs(const Vec<double, N>& v) {
  double r = 0.0;
  for (std::size_t i = 0; i < N; ++i) r = std::max(r, std::abs(v[i]));
  return r;
}

template <int N>
double max_abs(const Mat<double, N>& a) {
  double r = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r = std::max(r, std::abs(a[i][j]));
  return r;
}

template <class S, int N>
S trace(const Mat<S, N>& a) {
  S t{};
  for (int i = 0; i < N; ++i) t += a[i][i];
  return t;
}

template <class S, int N>
bool all_finite(const Mat<S, N>& a) {
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (!all_finite(a[i][j])) return false;
  return true;
}

template <class S, std::size_t N>
bool all_finite(const Vec<S, N>& v) {
  for (std::size_t i = 0; i < N; ++i)
    if (!all_finite(v[i])) return false;
  return true;
}

// Gauss-Jordan inverse with partial pivoting; generic over the scalar so
// dual numbers can flow through. Pivot selection compares innermost values.
// Throws SingularMetricError when |det| falls below det_floor.
template <class S, int N>
Mat<S, N> mat_inverse(const Mat<S, N>& a, double det_floor = 1e-14) {
  Mat<S, N> w = a;
  Mat<S, N> inv = Mat<S, N>::identity();
  double det = 1.0;
  for (int col = 0; col < N; ++col) {
    int piv = col;
    double best = std::abs(value_of(w[col][col]));
    for (int r = col + 1; r < N; ++r) {
      double cand = std::abs(value_of(w[r][col]));
      if (cand > best) {
        best = cand;
        piv = r;
      }
    }
    if (best == 0.0) throw SingularMetricError("matrix is singular");
    if (piv != col) {
      std::swap(w.m[piv], w.m[col]);
      std::swap(inv.m[piv], inv.m[col]);
      det = -det;
    }
    det *= value_of(w[col][col]);
    S d = w[col][col];
    for (int j = 0; j < N; ++j) {
      w[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col) continue;
      S f = w[r][col];
      if (value_of(f) == 0.0) continue;
      for (int j = 0; j < N; ++j) {
        w[r][j] -= f * w[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  if (std::abs(det) < det_floor) throw SingularMetricError("matrix is numerically singular");
  return inv;
}

template <class S, int N>
S determinant(const Mat<S, N>& a) {
  Mat<S, N> w = a;
  S det = S(1.0);
  for (int col = 0; col < N; ++col) {
    int piv = col;
    double best = std::abs(value_of(w[col][col]));
    for (int r = col + 1; r < N; ++r) {
      double cand = std::abs(value_of(w[r][col]));
      if (cand > best) {
        best = cand;
        piv = r;
      }
    }
    if (best == 0.0) return S(0.0);
    if (piv != col) {
      std::swap(w.m[piv], w.m[col]);
      det = -det;
    }
    det *= w[col][col];
    for (int r = col + 1; r < N; ++r) {
      S f = w[r][col] / w[col][col];
      for (int j = col; j < N; ++j) w[r][j] -= f * w[col][j];
    }
  }
  return det;
}

// Eigenvalues of a general real 8x8 matrix (complex Hessenberg QR with
// Wilkinson shifts). Returned in no particular order.
std::array<std::complex<double>, 8> eigenvalues(const Mat8d& a);

}  // namespace warpmech
