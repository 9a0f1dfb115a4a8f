#include "gali/galgebra.hpp"

#include <algorithm>
#include <cmath>

namespace gali {

double galilean_norm(const GVec3& x) noexcept {
  if (x.x1 != 0.0) return std::abs(x.x1);
  return std::hypot(x.x2, x.x3);
}

double yz_norm(const GVec3& x) noexcept { return std::hypot(x.x2, x.x3); }

GVec3 elliptic_involution(const GVec3& v) {
  if (!is_isotropic(v)) {
    throw NonIsotropicInput("elliptic involution needs an isotropic vector, got x1 = " +
                            std::to_string(v.x1));
  }
  return {0.0, v.x3, -v.x2};
}

GVec3 quantize_isotropic(const GVec3& v, double eps) noexcept {
  if (std::abs(v.x1) <= eps * std::max(1.0, yz_norm(v))) return {0.0, v.x2, v.x3};
  return v;
}

double max_abs_diff(const GVec3& a, const GVec3& b) noexcept {
  return std::max({std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3)});
}

}  // namespace gali
