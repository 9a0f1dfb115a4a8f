#pragma once

// Exact space curve psi(s(u), t(u)) built by pushing Taylor jets of the
// parameter expressions through the surface expressions.

#include <memory>

#include "gali/curves.hpp"

namespace gali::testing {

class ComposedCurveMap final : public CurveMap {
 public:
  ComposedCurveMap(SurfaceDef surf, Expr s_of_u, Expr t_of_u)
      : surf_(std::move(surf)), s_(std::move(s_of_u)), t_(std::move(t_of_u)) {}

  CurveJet jet(double u) const override {
    using J = Taylor<double, 3>;
    J x = J::variable(u);
    J s = evaluate(s_, x, J(0.0));
    J t = evaluate(t_, x, J(0.0));
    J px = evaluate(surf_.x, s, t);
    J py = evaluate(surf_.y, s, t);
    J pz = evaluate(surf_.z, s, t);
    CurveJet out;
    for (int k = 0; k < 4; ++k) out.d[k] = {px.derivative(k), py.derivative(k), pz.derivative(k)};
    return out;
  }

 private:
  SurfaceDef surf_;
  Expr s_, t_;
};

inline CurveG3 composed_curve(const SurfaceDef& surf, const Expr& s_of_u, const Expr& t_of_u,
                              Interval domain) {
  return CurveG3(std::make_shared<ComposedCurveMap>(surf, s_of_u, t_of_u), domain);
}

inline SurfaceDef surface_def(const char* x, const char* y, const char* z, Interval ds,
                              Interval dt, std::string name = "surf") {
  return {std::move(name), parse_expr(x), parse_expr(y), parse_expr(z), ds, dt};
}

}  // namespace gali::testing
