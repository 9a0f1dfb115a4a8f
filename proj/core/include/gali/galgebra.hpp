#pragma once

// Vector algebra of the Galilean 3-space G3.
//
// The metric is degenerate: the first component measures non-isotropic
// vectors, the (x2, x3) plane carries a Euclidean metric for isotropic ones.
// Isotropy is decided by exact comparison with zero, so vectors produced by
// floating-point arithmetic go through quantize_isotropic() first.

#include <cmath>
#include <ostream>

#include "gali/errors.hpp"
#include "gali/taylor.hpp"

namespace gali {

template <typename T>
struct BasicVec3 {
  T x1{};
  T x2{};
  T x3{};

  friend BasicVec3 operator+(const BasicVec3& a, const BasicVec3& b) {
    return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend BasicVec3 operator-(const BasicVec3& a, const BasicVec3& b) {
    return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend BasicVec3 operator-(const BasicVec3& a) { return {-a.x1, -a.x2, -a.x3}; }
  template <typename S>
  friend BasicVec3 operator*(const S& k, const BasicVec3& a) {
    return {k * a.x1, k * a.x2, k * a.x3};
  }
  template <typename S>
  friend BasicVec3 operator*(const BasicVec3& a, const S& k) {
    return {a.x1 * k, a.x2 * k, a.x3 * k};
  }
  template <typename S>
  friend BasicVec3 operator/(const BasicVec3& a, const S& k) {
    return {a.x1 / k, a.x2 / k, a.x3 / k};
  }
  BasicVec3& operator+=(const BasicVec3& b) { return *this = *this + b; }
  BasicVec3& operator-=(const BasicVec3& b) { return *this = *this - b; }

  friend bool operator==(const BasicVec3&, const BasicVec3&) = default;
};

using GVec3 = BasicVec3<double>;

inline std::ostream& operator<<(std::ostream& os, const GVec3& v) {
  return os << '(' << v.x1 << ", " << v.x2 << ", " << v.x3 << ')';
}

inline bool is_isotropic(const GVec3& v) noexcept { return v.x1 == 0.0; }

/// Galilean scalar product. Branches on the stored first components.
template <typename T>
T galilean_dot(const BasicVec3<T>& x, const BasicVec3<T>& y) {
  if (primal(x.x1) != 0.0 || primal(y.x1) != 0.0) return x.x1 * y.x1;
  return x.x2 * y.x2 + x.x3 * y.x3;
}

/// Euclidean product of the yz-projections, whatever the first components.
/// Equals galilean_dot on isotropic pairs.
template <typename T>
T yz_dot(const BasicVec3<T>& x, const BasicVec3<T>& y) {
  return x.x2 * y.x2 + x.x3 * y.x3;
}

/// Formal determinant with first row (0, e2, e3); always isotropic.
template <typename T>
BasicVec3<T> galilean_cross(const BasicVec3<T>& x, const BasicVec3<T>& y) {
  return {T{}, x.x3 * y.x1 - x.x1 * y.x3, x.x1 * y.x2 - x.x2 * y.x1};
}

double galilean_norm(const GVec3& x) noexcept;

double yz_norm(const GVec3& x) noexcept;

/// (0, x2, x3) -> (0, x3, -x2). Throws NonIsotropicInput when x1 != 0.
GVec3 elliptic_involution(const GVec3& v);

/// Snaps x1 to exactly zero when |x1| <= eps * max(1, yz_norm(v)).
GVec3 quantize_isotropic(const GVec3& v, double eps = 1e-12) noexcept;

/// Max-norm distance in all three components (a plain coordinate
/// measure used for residual reporting, not a Galilean quantity).
double max_abs_diff(const GVec3& a, const GVec3& b) noexcept;

}  // namespace gali
