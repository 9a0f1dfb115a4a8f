#pragma once

// Line-oriented scene files naming curves and surfaces:
//
//   # comment
//   [surface cyl]
//   x = s
//   y = cos(t)
//   z = sin(t)
//   domain_s = 0 6.283185307
//   domain_t = 0 6.283185307
//   [curve helix]
//   x = s
//   y = cos(s)
//   z = sin(s)
//   domain = 0 6.283185307

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gali/expr.hpp"

namespace gali {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  double length() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept { return v >= lo && v <= hi; }
  double mid() const noexcept { return 0.5 * (lo + hi); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct CurveDef {
  std::string name;
  Expr x, y, z;
  Interval domain;
};

struct SurfaceDef {
  std::string name;
  Expr x, y, z;
  Interval domain_s;
  Interval domain_t;
};

struct Scene {
  std::vector<CurveDef> curves;
  std::vector<SurfaceDef> surfaces;

  const CurveDef* find_curve(std::string_view name) const noexcept;
  const SurfaceDef* find_surface(std::string_view name) const noexcept;
};

/// Throws ParseError (offset is into the whole text), DuplicateName or BadDomain.
Scene parse_scene(std::string_view text);

Scene load_scene(const std::string& path);

}  // namespace gali
