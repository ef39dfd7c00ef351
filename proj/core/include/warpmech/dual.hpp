#pragma once

#include <cmath>
#include <type_traits>

namespace warpmech {

// Forward-mode dual number with one derivative channel. A directional
// derivative is obtained by seeding `der` and reading it back after the
// evaluation. Nesting (Dual<Dual<double>>) yields second derivatives.
template <class T>
struct Dual {
  T val{};
  T der{};

  constexpr Dual() = default;
  constexpr Dual(const T& v) : val(v), der(T{}) {}
  constexpr Dual(const T& v, const T& d) : val(v), der(d) {}

  // Allows double literals to seed arbitrarily nested duals.
  template <class U, class = std::enable_if_t<std::is_arithmetic_v<U> && !std::is_same_v<T, U>>>
  constexpr Dual(U v) : val(T(v)), der(T{}) {}

  Dual& operator+=(const Dual& o) {
    val += o.val;
    der += o.der;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    val -= o.val;
    der -= o.der;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    der = der * o.val + val * o.der;
    val = val * o.val;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    der = (der * o.val - val * o.der) / (o.val * o.val);
    val = val / o.val;
    return *this;
  }
};

using dual = Dual<double>;
using dual2 = Dual<Dual<double>>;

// Innermost value of an arbitrarily nested dual.
inline constexpr double value_of(double x) { return x; }
template <class T>
constexpr double value_of(const Dual<T>& x) {
  return value_of(x.val);
}

inline bool all_finite(double x) { return std::isfinite(x); }
template <class T>
bool all_finite(const Dual<T>& x) {
  return all_finite(x.val) && all_finite(x.der);
}

template <class T>
Dual<T> operator+(Dual<T> a, const Dual<T>& b) {
  return a += b;
}
template <class T>
Dual<T> operator-(Dual<T> a, const Dual<T>& b) {
  return a -= b;
}
template <class T>
Dual<T> operator*(Dual<T> a, const Dual<T>& b) {
  return a *= b;
}
template <class T>
Dual<T> operator/(Dual<T> a, const Dual<T>& b) {
  return a /= b;
}
template <class T>
Dual<T> operator-(const Dual<T>& a) {
  return Dual<T>(-a.val, -a.der);
}
template <class T>
Dual<T> operator+(const Dual<T>& a) {
  return a;
}

// Mixed scalar/dual arithmetic.
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator+(const Dual<T>& a, U b) {
  return Dual<T>(a.val + T(b), a.der);
}
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator+(U a, const Dual<T>& b) {
  return b + a;
}
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator-(const Dual<T>& a, U b) {
  return Dual<T>(a.val - T(b), a.der);
}
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator-(U a, const Dual<T>& b) {
  return Dual<T>(T(a) - b.val, -b.der);
}
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator*(const Dual<T>& a, U b) {
  return Dual<T>(a.val * T(b), a.der * T(b));
}
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator*(U a, const Dual<T>& b) {
  return b * a;
}
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator/(const Dual<T>& a, U b) {
  return Dual<T>(a.val / T(b), a.der / T(b));
}
template <class T, class U, class = std::enable_if_t<std::is_arithmetic_v<U>>>
Dual<T> operator/(U a, const Dual<T>& b) {
  return Dual<T>(T(a)) / b;
}

using std::log;
using std::sqrt;
using std::tanh;

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  using warpmech::sqrt;
  T r = sqrt(x.val);
  return Dual<T>(r, x.der / (2.0 * r));
}

template <class T>
Dual<T> tanh(const Dual<T>& x) {
  using warpmech::tanh;
  T t = tanh(x.val);
  return Dual<T>(t, x.der * (1.0 - t * t));
}

template <class T>
Dual<T> log(const Dual<T>& x) {
  using warpmech::log;
  return Dual<T>(log(x.val), x.der / x.val);
}

// x^n for integer n (n may be negative; x != 0 then).
inline double ipow(double x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}
template <class T>
Dual<T> ipow(const Dual<T>& x, int n) {
  if (n == 0) return Dual<T>(T(1.0));
  if (n < 0) return Dual<T>(T(1.0)) / ipow(x, -n);
  Dual<T> r = x;
  for (int i = 1; i < n; ++i) r *= x;
  return r;
}

}  // namespace warpmech
