#pragma once

// Truncated univariate Taylor series with normalized coefficients
// c[k] = f^(k)(x0) / k!. The coefficient type may itself be a Taylor series,
// which gives mixed partials and composition along curves without symbolic
// differentiation.

#include <array>
#include <cmath>
#include <type_traits>

namespace gali {

template <typename T, int N>
struct Taylor;

inline double primal(double v) noexcept { return v; }

template <typename X>
struct is_taylor : std::false_type {};
template <typename T, int N>
struct is_taylor<Taylor<T, N>> : std::true_type {};
template <typename X>
inline constexpr bool is_taylor_v = is_taylor<X>::value;

template <typename T, int N>
struct Taylor {
  static_assert(N >= 0);
  using value_type = T;
  static constexpr int order = N;

  std::array<T, N + 1> c{};

  constexpr Taylor() = default;
  constexpr Taylor(double v) { c[0] = T(v); }  // NOLINT: implicit broadcast of constants
  template <typename U>
    requires(std::is_same_v<U, T> && !std::is_same_v<T, double>)
  constexpr Taylor(const U& v) {  // NOLINT
    c[0] = v;
  }

  /// The independent variable x0 + h.
  static Taylor variable(const T& x0) {
    Taylor r;
    r.c[0] = x0;
    if constexpr (N >= 1) r.c[1] = T(1.0);
    return r;
  }

  const T& operator[](int k) const { return c[k]; }
  T& operator[](int k) { return c[k]; }

  /// k-th derivative at the expansion point.
  T derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return c[k] * f;
  }

  Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c[k] = c[k] + o.c[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c[k] = c[k] - o.c[k];
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator-(const Taylor& a) {
    Taylor r;
    for (int k = 0; k <= N; ++k) r.c[k] = -a.c[k];
    return r;
  }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      T acc = a.c[0] * b.c[k];
      for (int j = 1; j <= k; ++j) acc = acc + a.c[j] * b.c[k - j];
      r.c[k] = acc;
    }
    return r;
  }
  friend Taylor operator*(const Taylor& a, double k) {
    Taylor r;
    for (int i = 0; i <= N; ++i) r.c[i] = a.c[i] * k;
    return r;
  }
  friend Taylor operator*(double k, const Taylor& a) { return a * k; }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (int k = 0; k <= N; ++k) {
      T acc = a.c[k];
      for (int j = 1; j <= k; ++j) acc = acc - b.c[j] * q.c[k - j];
      q.c[k] = acc / b.c[0];
    }
    return q;
  }
  friend Taylor operator/(const Taylor& a, double k) { return a * (1.0 / k); }
};

template <typename T, int N>
double primal(const Taylor<T, N>& x) {
  return primal(x.c[0]);
}

namespace detail {
inline double scalar_exp(double v) { return std::exp(v); }
inline double scalar_log(double v) { return std::log(v); }
inline double scalar_sqrt(double v) { return std::sqrt(v); }
inline double scalar_sin(double v) { return std::sin(v); }
inline double scalar_cos(double v) { return std::cos(v); }
inline double scalar_sinh(double v) { return std::sinh(v); }
inline double scalar_cosh(double v) { return std::cosh(v); }
template <typename T, int N>
Taylor<T, N> scalar_exp(const Taylor<T, N>& v);
template <typename T, int N>
Taylor<T, N> scalar_log(const Taylor<T, N>& v);
template <typename T, int N>
Taylor<T, N> scalar_sqrt(const Taylor<T, N>& v);
template <typename T, int N>
Taylor<T, N> scalar_sin(const Taylor<T, N>& v);
template <typename T, int N>
Taylor<T, N> scalar_cos(const Taylor<T, N>& v);
template <typename T, int N>
Taylor<T, N> scalar_sinh(const Taylor<T, N>& v);
template <typename T, int N>
Taylor<T, N> scalar_cosh(const Taylor<T, N>& v);
}  // namespace detail

template <typename T, int N>
Taylor<T, N> exp(const Taylor<T, N>& a) {
  Taylor<T, N> e;
  e.c[0] = detail::scalar_exp(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    T acc = a.c[1] * e.c[k - 1];
    for (int j = 2; j <= k; ++j) acc = acc + (a.c[j] * e.c[k - j]) * double(j);
    e.c[k] = acc * (1.0 / k);
  }
  return e;
}

template <typename T, int N>
Taylor<T, N> log(const Taylor<T, N>& a) {
  Taylor<T, N> l;
  l.c[0] = detail::scalar_log(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    T acc = a.c[k];
    for (int j = 1; j < k; ++j) acc = acc - (l.c[j] * a.c[k - j]) * (double(j) / k);
    l.c[k] = acc / a.c[0];
  }
  return l;
}

template <typename T, int N>
Taylor<T, N> sqrt(const Taylor<T, N>& a) {
  Taylor<T, N> r;
  r.c[0] = detail::scalar_sqrt(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    T acc = a.c[k];
    for (int j = 1; j < k; ++j) acc = acc - r.c[j] * r.c[k - j];
    r.c[k] = acc / (r.c[0] * 2.0);
  }
  return r;
}

template <typename T, int N>
void sincos(const Taylor<T, N>& a, Taylor<T, N>& s, Taylor<T, N>& co) {
  s.c[0] = detail::scalar_sin(a.c[0]);
  co.c[0] = detail::scalar_cos(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    T sa = a.c[1] * co.c[k - 1];
    T ca = a.c[1] * s.c[k - 1];
    for (int j = 2; j <= k; ++j) {
      sa = sa + (a.c[j] * co.c[k - j]) * double(j);
      ca = ca + (a.c[j] * s.c[k - j]) * double(j);
    }
    s.c[k] = sa * (1.0 / k);
    co.c[k] = ca * (-1.0 / k);
  }
}

template <typename T, int N>
void sinhcosh(const Taylor<T, N>& a, Taylor<T, N>& sh, Taylor<T, N>& ch) {
  sh.c[0] = detail::scalar_sinh(a.c[0]);
  ch.c[0] = detail::scalar_cosh(a.c[0]);
  for (int k = 1; k <= N; ++k) {
    T sa = a.c[1] * ch.c[k - 1];
    T ca = a.c[1] * sh.c[k - 1];
    for (int j = 2; j <= k; ++j) {
      sa = sa + (a.c[j] * ch.c[k - j]) * double(j);
      ca = ca + (a.c[j] * sh.c[k - j]) * double(j);
    }
    sh.c[k] = sa * (1.0 / k);
    ch.c[k] = ca * (1.0 / k);
  }
}

template <typename T, int N>
Taylor<T, N> sin(const Taylor<T, N>& a) {
  Taylor<T, N> s, c;
  sincos(a, s, c);
  return s;
}

template <typename T, int N>
Taylor<T, N> cos(const Taylor<T, N>& a) {
  Taylor<T, N> s, c;
  sincos(a, s, c);
  return c;
}

template <typename T, int N>
Taylor<T, N> tan(const Taylor<T, N>& a) {
  Taylor<T, N> s, c;
  sincos(a, s, c);
  return s / c;
}

template <typename T, int N>
Taylor<T, N> sinh(const Taylor<T, N>& a) {
  Taylor<T, N> s, c;
  sinhcosh(a, s, c);
  return s;
}

template <typename T, int N>
Taylor<T, N> cosh(const Taylor<T, N>& a) {
  Taylor<T, N> s, c;
  sinhcosh(a, s, c);
  return c;
}

namespace detail {
template <typename T, int N>
Taylor<T, N> scalar_exp(const Taylor<T, N>& v) { return gali::exp(v); }
template <typename T, int N>
Taylor<T, N> scalar_log(const Taylor<T, N>& v) { return gali::log(v); }
template <typename T, int N>
Taylor<T, N> scalar_sqrt(const Taylor<T, N>& v) { return gali::sqrt(v); }
template <typename T, int N>
Taylor<T, N> scalar_sin(const Taylor<T, N>& v) { return gali::sin(v); }
template <typename T, int N>
Taylor<T, N> scalar_cos(const Taylor<T, N>& v) { return gali::cos(v); }
template <typename T, int N>
Taylor<T, N> scalar_sinh(const Taylor<T, N>& v) { return gali::sinh(v); }
template <typename T, int N>
Taylor<T, N> scalar_cosh(const Taylor<T, N>& v) { return gali::cosh(v); }
}  // namespace detail

/// x^n for integer n by repeated squaring. Negative n divides.
template <typename X>
X integer_power(const X& x, long n) {
  if (n < 0) return X(1.0) / integer_power(x, -n);
  X result(1.0);
  X base = x;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

inline bool is_zero(double v) { return v == 0.0; }
template <typename T, int N>
bool is_zero(const Taylor<T, N>& x) {
  for (const auto& v : x.c) {
    if (!is_zero(v)) return false;
  }
  return true;
}

/// True when every coefficient above order zero vanishes, recursively.
inline bool is_constant(double) { return true; }
template <typename T, int N>
bool is_constant(const Taylor<T, N>& x) {
  if (!is_constant(x.c[0])) return false;
  for (int k = 1; k <= N; ++k) {
    if (!is_zero(x.c[k])) return false;
  }
  return true;
}

}  // namespace gali
