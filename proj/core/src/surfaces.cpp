#include "gali/surfaces.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <string>

#include "gali/curves.hpp"
#include "gali/jets.hpp"

namespace gali {

namespace {

std::string at_point(double s, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " at (s, t) = (%.9g, %.9g)", s, t);
  return buf;
}

template <int Order>
SurfacePatch patch_from_series(const Expr& x, const Expr& y, const Expr& z, double s0, double t0) {
  using Inner = Taylor<double, Order>;
  using Outer = Taylor<Inner, Order>;
  Outer s = Outer::variable(Inner(s0));
  Outer t(Inner::variable(t0));
  Outer rx = evaluate(x, s, t);
  Outer ry = evaluate(y, s, t);
  Outer rz = evaluate(z, s, t);
  // partial^(i+j) / ds^i dt^j = i! j! c[i][j]
  auto partial = [&](int i, int j) {
    static constexpr double fact[] = {1.0, 1.0, 2.0, 6.0};
    double f = fact[i] * fact[j];
    return GVec3{rx.c[i].c[j] * f, ry.c[i].c[j] * f, rz.c[i].c[j] * f};
  };
  SurfacePatch p;
  p.p = partial(0, 0);
  p.ps = partial(1, 0);
  p.pt = partial(0, 1);
  p.pss = partial(2, 0);
  p.pst = partial(1, 1);
  p.ptt = partial(0, 2);
  if constexpr (Order >= 3) {
    p.psss = partial(3, 0);
    p.psst = partial(2, 1);
    p.pstt = partial(1, 2);
    p.pttt = partial(0, 3);
    p.has_third = true;
  }
  return p;
}

class ExprSurfaceMap final : public SurfaceMap {
 public:
  ExprSurfaceMap(Expr x, Expr y, Expr z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  SurfacePatch patch(double s, double t, int order) const override {
    if (order >= 3) return patch_from_series<3>(x_, y_, z_, s, t);
    return patch_from_series<2>(x_, y_, z_, s, t);
  }

 private:
  Expr x_, y_, z_;
};

bool finite(const GVec3& v) {
  return std::isfinite(v.x1) && std::isfinite(v.x2) && std::isfinite(v.x3);
}

double second_form(const GVec3& pij, const GVec3& pk, double gk, const GVec3& eta, double eps) {
  GVec3 v = quantize_isotropic(gk * pij - pij.x1 * pk, eps);
  return galilean_dot(v, eta) / gk;
}

}  // namespace

SurfaceG3::SurfaceG3(std::shared_ptr<const SurfaceMap> map, Interval domain_s, Interval domain_t,
                     std::string name)
    : map_(std::move(map)), domain_s_(domain_s), domain_t_(domain_t), name_(std::move(name)) {}

SurfaceG3 SurfaceG3::from_expressions(Expr x, Expr y, Expr z, Interval domain_s,
                                      Interval domain_t, std::string name) {
  return SurfaceG3(std::make_shared<ExprSurfaceMap>(std::move(x), std::move(y), std::move(z)),
                   domain_s, domain_t, std::move(name));
}

SurfaceG3 SurfaceG3::from_def(const SurfaceDef& def) {
  return from_expressions(def.x, def.y, def.z, def.domain_s, def.domain_t, def.name);
}

GVec3 SurfaceG3::point(double s, double t) const { return map_->patch(s, t, 2).p; }

GVec3 isotropic_normal(const SurfacePatch& patch, const SurfaceTolerances& tol) {
  GVec3 n = galilean_cross(patch.ps, patch.pt);
  double w = yz_norm(n);
  if (!(w > tol.w_min)) throw SurfaceSingular("surface is singular (w = " + std::to_string(w) + ")");
  return n / w;
}

FundamentalData fundamental_data(const SurfacePatch& patch, const SurfaceTolerances& tol) {
  const auto& [p, ps, pt, pss, pst, ptt, psss, psst, pstt, pttt, third] = patch;
  (void)p, (void)psss, (void)psst, (void)pstt, (void)pttt, (void)third;

  FundamentalData fd;
  fd.g1 = ps.x1;
  fd.g2 = pt.x1;
  if (fd.g1 == 0.0 && fd.g2 == 0.0) {
    throw BothGZero("g1 = g2 = 0: tangent plane is Euclidean, second form undefined");
  }
  GVec3 cross = galilean_cross(ps, pt);
  fd.w = yz_norm(cross);
  if (!(fd.w > tol.w_min)) {
    throw SurfaceSingular("surface is singular (w = " + std::to_string(fd.w) + ")");
  }
  fd.eta = cross / fd.w;
  fd.delta = quantize_isotropic((fd.g2 * ps - fd.g1 * pt) / fd.w, tol.isotropy_eps);
  fd.gup1 = fd.g2 / fd.w;
  fd.gup2 = -fd.g1 / fd.w;

  fd.h11 = yz_dot(ps, ps);
  fd.h12 = yz_dot(ps, pt);
  fd.h22 = yz_dot(pt, pt);
  fd.ds2_matrix.ds1_sq = {{{fd.g1 * fd.g1, fd.g1 * fd.g2}, {fd.g1 * fd.g2, fd.g2 * fd.g2}}};
  fd.ds2_matrix.ds2_sq = {{{fd.h11, fd.h12}, {fd.h12, fd.h22}}};

  const double nan = std::nan("");
  auto by_g1 = [&](const GVec3& pij) {
    return fd.g1 != 0.0 ? second_form(pij, ps, fd.g1, fd.eta, tol.isotropy_eps) : nan;
  };
  auto by_g2 = [&](const GVec3& pij) {
    return fd.g2 != 0.0 ? second_form(pij, pt, fd.g2, fd.eta, tol.isotropy_eps) : nan;
  };
  bool use_g1 = std::abs(fd.g1) >= std::abs(fd.g2);
  auto primary = [&](const GVec3& pij) { return use_g1 ? by_g1(pij) : by_g2(pij); };
  auto other = [&](const GVec3& pij) { return use_g1 ? by_g2(pij) : by_g1(pij); };
  fd.L11 = primary(pss);
  fd.L12 = primary(pst);
  fd.L22 = primary(ptt);
  fd.L11_alt = other(pss);
  fd.L12_alt = other(pst);
  fd.L22_alt = other(ptt);

  double w2 = fd.w * fd.w;
  fd.K = (fd.L11 * fd.L22 - fd.L12 * fd.L12) / w2;
  fd.H = (fd.g2 * fd.g2 * fd.L11 - 2.0 * fd.g1 * fd.g2 * fd.L12 + fd.g1 * fd.g1 * fd.L22) /
         (2.0 * w2);
  if (!std::isfinite(fd.K) || !std::isfinite(fd.H) || !finite(fd.eta)) {
    throw NumericError("non-finite curvature");
  }
  return fd;
}

FundamentalData fundamental_data(const SurfaceG3& surf, double s, double t,
                                 const SurfaceTolerances& tol) {
  try {
    return fundamental_data(surf.patch(s, t), tol);
  } catch (const BothGZero& e) {
    throw BothGZero(e.what() + at_point(s, t));
  } catch (const SurfaceSingular& e) {
    throw SurfaceSingular(e.what() + at_point(s, t));
  } catch (const NumericError& e) {
    throw NumericError(e.what() + at_point(s, t));
  }
}

Christoffel christoffel(const SurfacePatch& patch, const SurfaceTolerances& tol) {
  FundamentalData fd = fundamental_data(patch, tol);
  Eigen::Matrix<double, 3, 2> a;
  a << patch.ps.x1, patch.pt.x1, patch.ps.x2, patch.pt.x2, patch.ps.x3, patch.pt.x3;
  Eigen::ColPivHouseholderQR<Eigen::Matrix<double, 3, 2>> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < 2) throw DegenerateTangent("psi_s and psi_t are linearly dependent");

  Christoffel ch;
  const GVec3* second[2][2] = {{&patch.pss, &patch.pst}, {&patch.pst, &patch.ptt}};
  const double lij[2][2] = {{fd.L11, fd.L12}, {fd.L12, fd.L22}};
  for (int i = 0; i < 2; ++i) {
    for (int j = i; j < 2; ++j) {
      GVec3 rhs = *second[i][j] - lij[i][j] * fd.eta;
      Eigen::Vector3d b(rhs.x1, rhs.x2, rhs.x3);
      Eigen::Vector2d g = qr.solve(b);
      for (int k = 0; k < 2; ++k) {
        ch.gamma[k][i][j] = g[k];
        ch.gamma[k][j][i] = g[k];
      }
      const GVec3& pij = *second[i][j];
      double scale = 1.0 + std::sqrt(pij.x1 * pij.x1 + pij.x2 * pij.x2 + pij.x3 * pij.x3);
      ch.residual = std::max(ch.residual, (a * g - b).norm() / scale);
    }
  }
  return ch;
}

Christoffel christoffel(const SurfaceG3& surf, double s, double t, const SurfaceTolerances& tol) {
  try {
    return christoffel(surf.patch(s, t), tol);
  } catch (const SurfaceSingular& e) {
    throw SurfaceSingular(e.what() + at_point(s, t));
  } catch (const DegenerateTangent& e) {
    throw DegenerateTangent(e.what() + at_point(s, t));
  }
}

ExprParamCurve::ExprParamCurve(Expr s_of_u, Expr t_of_u, Interval domain)
    : s_(std::move(s_of_u)), t_(std::move(t_of_u)), domain_(domain) {
  if (s_.uses_t() || t_.uses_t()) {
    throw Error("parameter curve expressions must use only the curve variable s");
  }
}

ParamJet ExprParamCurve::at(double u) const {
  Jet1 js = jet_eval_1d(s_, u, 2);
  Jet1 jt = jet_eval_1d(t_, u, 2);
  return {js.d0, jt.d0, js.d1, jt.d1, js.d2, jt.d2};
}

CurveOnSurface compose_on_surface(const SurfaceG3& surf, const ParamJet& pj,
                                  const SurfaceTolerances& tol) {
  using U = Taylor<double, 2>;
  using V = BasicVec3<U>;
  SurfacePatch p = surf.patch(pj.s, pj.t, 3);

  U dS;
  dS.c = {0.0, pj.ds, 0.5 * pj.dds};
  U dT;
  dT.c = {0.0, pj.dt, 0.5 * pj.ddt};
  U dSS = dS * dS;
  U dST = dS * dT;
  U dTT = dT * dT;

  auto lift = [](const GVec3& v) { return V{U(v.x1), U(v.x2), U(v.x3)}; };
  auto series = [&](const GVec3& c0, const GVec3& cs, const GVec3& ct, const GVec3& css,
                    const GVec3& cst, const GVec3& ctt) {
    return lift(c0) + lift(cs) * dS + lift(ct) * dT + lift(css) * (0.5 * dSS) +
           lift(cst) * dST + lift(ctt) * (0.5 * dTT);
  };

  V alpha = series(p.p, p.ps, p.pt, p.pss, p.pst, p.ptt);
  V psi_s = series(p.ps, p.pss, p.pst, p.psss, p.psst, p.pstt);
  V psi_t = series(p.pt, p.pst, p.ptt, p.psst, p.pstt, p.pttt);

  V n = galilean_cross(psi_s, psi_t);
  U w = sqrt(n.x2 * n.x2 + n.x3 * n.x3);
  if (!(primal(w) > tol.w_min)) {
    throw SurfaceSingular("surface is singular along the curve" + at_point(pj.s, pj.t));
  }
  V eta{U(0.0), n.x2 / w, n.x3 / w};

  CurveOnSurface out;
  for (int k = 0; k < 3; ++k) {
    out.alpha[k] = {alpha.x1.derivative(k), alpha.x2.derivative(k), alpha.x3.derivative(k)};
    out.eta[k] = {0.0, eta.x2.derivative(k), eta.x3.derivative(k)};
  }
  out.eta_second_valid = p.has_third;
  return out;
}

std::array<double, 2> geodesic_acceleration(const SurfaceG3& surf, double s, double t, double ds,
                                            double dt, const SurfaceTolerances& tol) {
  Christoffel ch = christoffel(surf, s, t, tol);
  const double v[2] = {ds, dt};
  std::array<double, 2> acc{};
  for (int k = 0; k < 2; ++k) {
    double sum = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) sum += ch.gamma[k][i][j] * v[i] * v[j];
    }
    acc[k] = -sum;
  }
  return acc;
}

namespace {

using State = std::array<double, 4>;

// Accepts points past an edge by rounding only.
bool within(const Interval& d, double v) {
  double slack = 1e-9 * std::max(1.0, d.length());
  return v >= d.lo - slack && v <= d.hi + slack;
}

State rk4_step(const SurfaceG3& surf, const State& y, double h, const SurfaceTolerances& tol) {
  auto f = [&](const State& x) {
    auto a = geodesic_acceleration(surf, x[0], x[1], x[2], x[3], tol);
    return State{x[2], x[3], a[0], a[1]};
  };
  auto axpy = [](const State& x, double k, const State& d) {
    return State{x[0] + k * d[0], x[1] + k * d[1], x[2] + k * d[2], x[3] + k * d[3]};
  };
  State k1 = f(y);
  State k2 = f(axpy(y, 0.5 * h, k1));
  State k3 = f(axpy(y, 0.5 * h, k2));
  State k4 = f(axpy(y, h, k3));
  State out;
  for (int i = 0; i < 4; ++i) out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

}  // namespace

GeodesicPath::GeodesicPath(SurfaceG3 surf, std::vector<GeodesicSample> samples, double step,
                           bool left_domain, SurfaceTolerances tol)
    : surf_(std::move(surf)),
      samples_(std::move(samples)),
      step_(step),
      left_domain_(left_domain),
      tol_(tol) {
  if (samples_.empty()) throw Error("geodesic path needs at least one sample");
}

Interval GeodesicPath::domain() const { return {samples_.front().u, samples_.back().u}; }

ParamJet GeodesicPath::at(double u) const {
  const double u0 = samples_.front().u;
  std::size_t last = samples_.size() - 1;
  double pos = (u - u0) / step_;
  std::size_t i = pos <= 0.0 ? 0 : std::min(static_cast<std::size_t>(pos), last);
  const GeodesicSample& g = samples_[i];
  State y{g.s, g.t, g.ds, g.dt};
  double h = u - g.u;
  if (h != 0.0) y = rk4_step(surf_, y, h, tol_);
  auto acc = geodesic_acceleration(surf_, y[0], y[1], y[2], y[3], tol_);
  return {y[0], y[1], y[2], y[3], acc[0], acc[1]};
}

GeodesicPath integrate_geodesic(const SurfaceG3& surf, std::array<double, 2> start,
                                std::array<double, 2> direction, double length, double step,
                                const SurfaceTolerances& tol) {
  if (!(length > 0.0) || !(step > 0.0)) throw Error("geodesic length and step must be positive");
  if (direction[0] == 0.0) {
    throw NotAdmissible("geodesic direction with ds = 0 is not admissible");
  }
  if (!surf.contains(start[0], start[1])) throw Error("geodesic start lies outside the domain");

  SurfacePatch p0 = surf.patch(start[0], start[1]);
  double speed = p0.ps.x1 * direction[0] + p0.pt.x1 * direction[1];
  if (std::abs(speed) <= 1e-14) {
    throw NotAdmissible("geodesic direction is isotropic (zero x-speed)" +
                        at_point(start[0], start[1]));
  }
  double ds = direction[0] / speed;
  double dt = direction[1] / speed;

  auto n = static_cast<std::size_t>(std::ceil(length / step - 1e-9));
  double h = length / static_cast<double>(n);

  std::vector<GeodesicSample> samples;
  samples.reserve(n + 1);
  samples.push_back({0.0, start[0], start[1], ds, dt});
  bool left = false;
  State y{start[0], start[1], ds, dt};
  for (std::size_t i = 1; i <= n; ++i) {
    y = rk4_step(surf, y, h, tol);
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) throw NumericError("geodesic diverged");
    bool inside = within(surf.domain_s(), y[0]) && within(surf.domain_t(), y[1]);
    if (!inside) {
      left = true;
      break;
    }
    samples.push_back({static_cast<double>(i) * h, y[0], y[1], y[2], y[3]});
  }

  GeodesicPath path(surf, std::move(samples), h, left, tol);
  path.set_max_geodesic_curvature(max_geodesic_curvature(path, tol));
  return path;
}

}  // namespace gali
