#include "gali/curves.hpp"

#include <algorithm>
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/math/interpolators/pchip.hpp>
#include <cmath>
#include <cstdio>

#include "gali/jets.hpp"
#include "gali/taylor.hpp"

namespace gali {

namespace {

std::string at_param(const char* name, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " at %s = %.9g", name, v);
  return buf;
}

class ExprCurveMap final : public CurveMap {
 public:
  ExprCurveMap(Expr x, Expr y, Expr z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  CurveJet jet(double s) const override {
    Jet1 jx = jet_eval_1d(x_, s);
    Jet1 jy = jet_eval_1d(y_, s);
    Jet1 jz = jet_eval_1d(z_, s);
    CurveJet out;
    for (int k = 0; k < 4; ++k) out.d[k] = {jx[k], jy[k], jz[k]};
    return out;
  }

 private:
  Expr x_, y_, z_;
};

constexpr int kLagrangePoints = 9;
constexpr std::size_t kStoredIntervals = 256;

class SampledCurveMap final : public CurveMap {
 public:
  SampledCurveMap(std::vector<GVec3> points, Interval domain)
      : points_(std::move(points)),
        lo_(domain.lo),
        h_(domain.length() / static_cast<double>(points_.size() - 1)) {}

  CurveJet jet(double s) const override {
    using J = Taylor<double, 3>;
    const int n = static_cast<int>(points_.size());
    int center = static_cast<int>(std::lround((s - lo_) / h_));
    int k0 = std::clamp(center - kLagrangePoints / 2, 0, n - kLagrangePoints);
    J x = J::variable((s - lo_) / h_ - k0);

    CurveJet out;
    for (int j = 0; j < kLagrangePoints; ++j) {
      J basis(1.0);
      for (int m = 0; m < kLagrangePoints; ++m) {
        if (m == j) continue;
        basis = basis * ((x - J(double(m))) * (1.0 / double(j - m)));
      }
      const GVec3& p = points_[static_cast<std::size_t>(k0 + j)];
      double scale = 1.0;
      for (int k = 0; k < 4; ++k) {
        out.d[k] += (basis.derivative(k) * scale) * p;
        scale /= h_;
      }
    }
    return out;
  }

 private:
  std::vector<GVec3> points_;
  double lo_;
  double h_;
};

/// Derivatives with respect to x at the same point, by reverting the
/// series of x(s). Needs x'(s) > 0.
CurveJet reparam_by_x(const CurveJet& j) {
  using J = Taylor<double, 3>;
  double a1 = j.d[1].x1;
  double a2 = j.d[2].x1 / 2.0;
  double a3 = j.d[3].x1 / 6.0;
  J h;
  h.c = {0.0, 1.0 / a1, -a2 / (a1 * a1 * a1),
         (2.0 * a2 * a2 - a1 * a3) / (a1 * a1 * a1 * a1 * a1)};

  auto compose = [&](double d0, double d1, double d2, double d3) {
    J r = (J(d3 / 6.0) * h + J(d2 / 2.0)) * h;
    r = (r + J(d1)) * h + J(d0);
    return r;
  };
  J x = compose(j.d[0].x1, j.d[1].x1, j.d[2].x1, j.d[3].x1);
  J y = compose(j.d[0].x2, j.d[1].x2, j.d[2].x2, j.d[3].x2);
  J z = compose(j.d[0].x3, j.d[1].x3, j.d[2].x3, j.d[3].x3);
  CurveJet out;
  for (int k = 0; k < 4; ++k) out.d[k] = {x.derivative(k), y.derivative(k), z.derivative(k)};
  // x(u) = u exactly in arclength.
  out.d[1].x1 = 1.0;
  out.d[2].x1 = 0.0;
  out.d[3].x1 = 0.0;
  return out;
}

class ReparamCurveMap final : public CurveMap {
 public:
  ReparamCurveMap(CurveG3 inner, int samples) : inner_(std::move(inner)) {
    const Interval& d = inner_.domain();
    std::vector<double> xs, ss;
    xs.reserve(static_cast<std::size_t>(samples));
    ss.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
      double s = d.lo + d.length() * i / (samples - 1);
      xs.push_back(inner_.point(s).x1);
      ss.push_back(s);
    }
    x_lo_ = xs.front();
    x_hi_ = xs.back();
    guess_ = std::make_shared<boost::math::interpolators::pchip<std::vector<double>>>(
        std::move(xs), std::move(ss));
  }

  Interval x_range() const { return {x_lo_, x_hi_}; }

  CurveJet jet(double u) const override {
    const Interval& d = inner_.domain();
    double s = std::clamp((*guess_)(std::clamp(u, x_lo_, x_hi_)), d.lo, d.hi);
    double lo = d.lo, hi = d.hi;
    for (int it = 0; it < 60; ++it) {
      CurveJet j = inner_.jet(s);
      double f = j.d[0].x1 - u;
      if (f > 0.0) hi = std::min(hi, s);
      if (f < 0.0) lo = std::max(lo, s);
      if (std::abs(f) <= 1e-15 * std::max(1.0, std::abs(u))) break;
      double next = s - f / j.d[1].x1;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (next == s) break;
      s = next;
    }
    return reparam_by_x(inner_.jet(s));
  }

 private:
  CurveG3 inner_;
  std::shared_ptr<boost::math::interpolators::pchip<std::vector<double>>> guess_;
  double x_lo_ = 0.0;
  double x_hi_ = 0.0;
};

}  // namespace

CurveG3::CurveG3(std::shared_ptr<const CurveMap> map, Interval domain, std::string name,
                 int admissibility_grid)
    : map_(std::move(map)), domain_(domain), name_(std::move(name)) {
  if (!(domain_.lo < domain_.hi)) throw BadDomain("curve domain must satisfy lo < hi");
  int n = std::max(admissibility_grid, 2);
  for (int i = 0; i < n; ++i) {
    double s = domain_.lo + domain_.length() * i / (n - 1);
    if (!(map_->jet(s).d[1].x1 > 0.0)) {
      admissible_ = false;
      bad_param_ = s;
      break;
    }
  }
}

CurveG3 CurveG3::from_expressions(Expr x, Expr y, Expr z, Interval domain, std::string name) {
  if (x.uses_t() || y.uses_t() || z.uses_t()) {
    throw Error("curve expressions must use only the variable s");
  }
  return CurveG3(std::make_shared<ExprCurveMap>(std::move(x), std::move(y), std::move(z)), domain,
                 std::move(name));
}

CurveG3 CurveG3::from_def(const CurveDef& def) {
  return from_expressions(def.x, def.y, def.z, def.domain, def.name);
}

CurveG3 CurveG3::sampled(std::vector<GVec3> points, Interval domain, std::string name) {
  if (points.size() < static_cast<std::size_t>(kLagrangePoints)) {
    throw Error("a sampled curve needs at least 9 points");
  }
  int grid = static_cast<int>(points.size());
  return CurveG3(std::make_shared<SampledCurveMap>(std::move(points), domain), domain,
                 std::move(name), grid);
}

CurveG3 reparametrize_to_galilean_arclength(const CurveG3& c, int samples) {
  samples = std::max(samples, 2);
  const Interval& d = c.domain();
  for (int i = 0; i < samples; ++i) {
    double s = d.lo + d.length() * i / (samples - 1);
    if (!(c.jet(s).d[1].x1 > 0.0)) {
      throw NotAdmissible("curve '" + c.name() + "' has x' <= 0" + at_param("s", s));
    }
  }
  auto map = std::make_shared<ReparamCurveMap>(c, samples);
  Interval xr = map->x_range();
  return CurveG3(std::move(map), xr, c.name());
}

FrenetSample frenet_apparatus(const CurveG3& c, double s, const FrenetOptions& opt) {
  CurveJet j = c.jet(s);
  if (!(j.d[1].x1 > 0.0)) {
    throw NotAdmissible("curve '" + c.name() + "' has x' <= 0" + at_param("s", s));
  }
  CurveJet g = reparam_by_x(j);
  const double y1 = g.d[1].x2, z1 = g.d[1].x3;
  const double y2 = g.d[2].x2, z2 = g.d[2].x3;
  const double y3 = g.d[3].x2, z3 = g.d[3].x3;

  FrenetSample f;
  f.s = s;
  f.T = {1.0, y1, z1};
  f.kappa = std::hypot(y2, z2);
  if (!std::isfinite(f.kappa)) throw NumericError("non-finite curvature" + at_param("s", s));
  if (f.kappa < opt.kappa_min) {
    if (opt.require_frame) {
      throw FrameUndefined("curvature below kappa_min, Frenet frame undefined" + at_param("s", s));
    }
    return f;
  }
  f.frame_defined = true;
  f.N = {0.0, y2 / f.kappa, z2 / f.kappa};
  f.B = galilean_cross(f.T, f.N);
  f.tau = (y2 * z3 - z2 * y3) / (f.kappa * f.kappa);
  return f;
}

DarbouxSample darboux_apparatus(const SurfaceG3& surf, const ParamCurve& pcurve, double u,
                                const SurfaceTolerances& tol) {
  ParamJet pj = pcurve.at(u);
  CurveOnSurface cs = compose_on_surface(surf, pj, tol);
  double a1 = cs.alpha[1].x1;
  if (!(a1 > 0.0)) {
    throw NotAdmissible("curve on surface has non-positive x-speed" + at_param("u", u));
  }
  DarbouxSample d;
  d.u = u;
  d.T = cs.alpha[1] / a1;
  d.T.x1 = 1.0;
  d.dT = quantize_isotropic((cs.alpha[2] / a1 - (cs.alpha[2].x1 / (a1 * a1)) * cs.alpha[1]) / a1,
                            tol.isotropy_eps);
  d.Nsurf = cs.eta[0];
  d.dNsurf = cs.eta[1] / a1;
  d.Bside = galilean_cross(d.T, d.Nsurf);
  d.k_n = galilean_dot(d.dT, d.Nsurf);
  d.k_g = galilean_dot(d.dT, d.Bside);
  d.tau_g = galilean_dot(d.dNsurf, d.Bside);
  return d;
}

double max_geodesic_curvature(const GeodesicPath& path, const SurfaceTolerances& tol) {
  double worst = 0.0;
  for (const auto& g : path.samples()) {
    worst = std::max(worst, std::abs(darboux_apparatus(path.surface(), path, g.u, tol).k_g));
  }
  return worst;
}

CurveG3 sample_curve_on_surface(const SurfaceG3& surf, const ParamCurve& pcurve, int count) {
  Interval d = pcurve.domain();
  std::vector<GVec3> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double u = d.lo + d.length() * i / (count - 1);
    ParamJet pj = pcurve.at(u);
    pts.push_back(surf.point(pj.s, pj.t));
  }
  return CurveG3::sampled(std::move(pts), d);
}

CurveG3 curve_from_intrinsics(const Expr& kappa, const Expr& tau, Interval s_range, double step) {
  if (!(s_range.lo < s_range.hi)) throw BadDomain("intrinsic range must satisfy lo < hi");
  if (kappa.uses_t() || tau.uses_t()) throw Error("curvature and torsion must depend on s only");
  if (step <= 0.0) step = s_range.length() / 1024.0;
  auto n = static_cast<std::size_t>(std::ceil(s_range.length() / step - 1e-9));
  n = std::max<std::size_t>(n, kLagrangePoints - 1);
  double h = s_range.length() / static_cast<double>(n);

  struct Frame {
    GVec3 p, T, N, B;
  };
  auto rates = [&](double s, const Frame& f) {
    double k = eval_expr(kappa, s);
    double w = eval_expr(tau, s);
    if (k < 0.0) throw DomainError("negative curvature" + at_param("s", s));
    if (!std::isfinite(k) || !std::isfinite(w)) {
      throw NumericError("non-finite curvature or torsion" + at_param("s", s));
    }
    return Frame{f.T, k * f.N, w * f.B, -w * f.N};
  };
  auto add = [](const Frame& f, double c, const Frame& d) {
    return Frame{f.p + c * d.p, f.T + c * d.T, f.N + c * d.N, f.B + c * d.B};
  };

  // The interpolant keeps every stride-th node: its third derivative loses
  // about eps / spacing^3 to rounding, so nodes closer than range/256 hurt.
  std::size_t stride = std::max<std::size_t>(1, n / kStoredIntervals);
  while (n % stride != 0) --stride;

  Frame f{{s_range.lo, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  std::vector<GVec3> pts;
  pts.reserve(n / stride + 1);
  pts.push_back(f.p);
  for (std::size_t i = 0; i < n; ++i) {
    double s = s_range.lo + static_cast<double>(i) * h;
    Frame k1 = rates(s, f);
    Frame k2 = rates(s + 0.5 * h, add(f, 0.5 * h, k1));
    Frame k3 = rates(s + 0.5 * h, add(f, 0.5 * h, k2));
    Frame k4 = rates(s + h, add(f, h, k3));
    f.p += (h / 6.0) * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
    f.T += (h / 6.0) * (k1.T + 2.0 * k2.T + 2.0 * k3.T + k4.T);
    f.N += (h / 6.0) * (k1.N + 2.0 * k2.N + 2.0 * k3.N + k4.N);
    f.B += (h / 6.0) * (k1.B + 2.0 * k2.B + 2.0 * k3.B + k4.B);
    // N stays isotropic and unit; B is slaved to T ^ N.
    f.N = {0.0, f.N.x2, f.N.x3};
    f.N = f.N / yz_norm(f.N);
    f.B = galilean_cross(f.T, f.N);
    f.p.x1 = s_range.lo + static_cast<double>(i + 1) * h;
    if ((i + 1) % stride == 0) pts.push_back(f.p);
  }
  return CurveG3::sampled(std::move(pts), s_range);
}

std::string_view to_string(CurveKind k) noexcept {
  switch (k) {
    case CurveKind::LineSegment:
      return "LineSegment";
    case CurveKind::Planar:
      return "Planar";
    case CurveKind::CircularHelix:
      return "CircularHelix";
    case CurveKind::AntiSalkowski:
      return "AntiSalkowski";
    case CurveKind::General:
      return "General";
  }
  return "General";
}

namespace {

struct Stats {
  double mean = 0.0;
  double spread = 0.0;
  double max_abs = 0.0;
};

Stats stats(const std::vector<double>& v) {
  Stats st;
  if (v.empty()) return st;
  for (double x : v) st.mean += x;
  st.mean /= static_cast<double>(v.size());
  for (double x : v) {
    st.spread = std::max(st.spread, std::abs(x - st.mean));
    st.max_abs = std::max(st.max_abs, std::abs(x));
  }
  return st;
}

}  // namespace

CurveClass classify_samples(const std::vector<double>& kappa, const std::vector<double>& tau,
                            const ClassifyOptions& opt) {
  CurveClass out;
  Stats k = stats(kappa);
  out.kappa_mean = k.mean;
  out.kappa_spread = k.spread;
  if (k.max_abs <= opt.tol_abs) {
    out.kind = CurveKind::LineSegment;
    return out;
  }
  std::vector<double> framed_tau;
  bool some_unframed = false;
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (kappa[i] < opt.kappa_min) {
      some_unframed = true;
    } else if (i < tau.size()) {
      framed_tau.push_back(tau[i]);
    }
  }
  Stats w = stats(framed_tau);
  out.tau_mean = w.mean;
  out.tau_spread = w.spread;
  if (some_unframed) {
    out.kind = CurveKind::General;
    out.mixed_regime = true;
    return out;
  }
  if (w.max_abs <= opt.tol_abs) {
    out.kind = CurveKind::Planar;
    return out;
  }
  bool kappa_const = k.spread <= opt.tol_rel * (1.0 + std::abs(k.mean));
  bool tau_const = w.spread <= opt.tol_rel * (1.0 + std::abs(w.mean));
  bool tau_nonzero = std::abs(w.mean) > opt.tol_abs;
  if (kappa_const && tau_const && tau_nonzero) {
    out.kind = CurveKind::CircularHelix;
  } else if (tau_const && tau_nonzero) {
    out.kind = CurveKind::AntiSalkowski;
  } else {
    out.kind = CurveKind::General;
  }
  return out;
}

std::vector<double> interior_grid(const Interval& d, int grid) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) out.push_back(d.lo + d.length() * (i + 1) / (grid + 1));
  return out;
}

CurveClass classify_curve(const CurveG3& c, int grid, const ClassifyOptions& opt) {
  if (grid < 16) throw Error("classification grid must have at least 16 points");
  std::vector<double> kappa, tau;
  FrenetOptions fo;
  fo.kappa_min = opt.kappa_min;
  for (double s : interior_grid(c.domain(), grid)) {
    FrenetSample f = frenet_apparatus(c, s, fo);
    kappa.push_back(f.kappa);
    tau.push_back(f.frame_defined ? f.tau : 0.0);
  }
  return classify_samples(kappa, tau, opt);
}

}  // namespace gali
