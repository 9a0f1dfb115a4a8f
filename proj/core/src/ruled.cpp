#include "gali/ruled.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

namespace gali {

namespace {

std::string at_u(double u) {
  char buf[48];
  std::snprintf(buf, sizeof buf, " at u = %.9g", u);
  return buf;
}

/// Base curve and director with their first two u-derivatives.
struct RuledFrame {
  GVec3 a[3];
  GVec3 d[3];
};

GVec3 binormal_rate(const CurveOnSurface& cs) {
  double a1 = cs.alpha[1].x1;
  GVec3 T = cs.alpha[1] / a1;
  GVec3 dT = cs.alpha[2] / a1 - (cs.alpha[2].x1 / (a1 * a1)) * cs.alpha[1];
  return galilean_cross(dT, cs.eta[0]) + galilean_cross(T, cs.eta[1]);
}

class RuledMap final : public SurfaceMap {
 public:
  RuledMap(SurfaceG3 base, std::shared_ptr<const ParamCurve> curve, RuledKind kind,
           SurfaceTolerances tol)
      : base_(std::move(base)), curve_(std::move(curve)), kind_(kind), tol_(tol) {}

  RuledFrame frame(double u) const {
    CurveOnSurface cs = compose_on_surface(base_, curve_->at(u), tol_);
    if (!(cs.alpha[1].x1 > 0.0)) {
      throw NotAdmissible("base curve has non-positive x-speed" + at_u(u));
    }
    RuledFrame f;
    for (int k = 0; k < 3; ++k) f.a[k] = cs.alpha[k];
    double h = 1e-4 * std::max(1.0, std::abs(u));
    if (kind_ == RuledKind::NormalSurface) {
      f.d[0] = cs.eta[0];
      f.d[1] = cs.eta[1];
      if (cs.eta_second_valid) {
        f.d[2] = cs.eta[2];
      } else {
        GVec3 up = compose_on_surface(base_, curve_->at(u + h), tol_).eta[1];
        GVec3 dn = compose_on_surface(base_, curve_->at(u - h), tol_).eta[1];
        f.d[2] = (up - dn) / (2.0 * h);
      }
    } else {
      f.d[0] = galilean_cross(cs.alpha[1] / cs.alpha[1].x1, cs.eta[0]);
      f.d[1] = binormal_rate(cs);
      GVec3 up = binormal_rate(compose_on_surface(base_, curve_->at(u + h), tol_));
      GVec3 dn = binormal_rate(compose_on_surface(base_, curve_->at(u - h), tol_));
      f.d[2] = (up - dn) / (2.0 * h);
    }
    return f;
  }

  static SurfacePatch patch_at(const RuledFrame& f, double t) {
    SurfacePatch p;
    p.p = f.a[0] + t * f.d[0];
    p.ps = f.a[1] + t * f.d[1];
    p.pt = f.d[0];
    p.pss = f.a[2] + t * f.d[2];
    p.pst = f.d[1];
    p.ptt = {};
    return p;
  }

  SurfacePatch patch(double s, double t, int /*order*/) const override {
    return patch_at(frame(s), t);
  }

 private:
  SurfaceG3 base_;
  std::shared_ptr<const ParamCurve> curve_;
  RuledKind kind_;
  SurfaceTolerances tol_;
};

constexpr int kImmersionSamples = 64;

}  // namespace

std::string_view to_string(RuledKind k) noexcept {
  return k == RuledKind::NormalSurface ? "NormalSurface" : "BinormalSurface";
}

std::string_view to_string(RuledVerdict v) noexcept {
  switch (v) {
    case RuledVerdict::ConstNegativeMinimal:
      return "ConstNegativeMinimal";
    case RuledVerdict::FlatMinimal:
      return "FlatMinimal";
    case RuledVerdict::Fail:
      return "Fail";
  }
  return "Fail";
}

std::string_view to_string(SurfaceClass c) noexcept {
  switch (c) {
    case SurfaceClass::Plane:
      return "Plane";
    case SurfaceClass::CircularHyperboloid:
      return "CircularHyperboloid";
    case SurfaceClass::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

std::vector<double> grid_nodes(const Interval& d, int n) {
  if (n < 2) throw Error("grid needs at least 2 nodes per direction");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = d.lo + d.length() * i / (n - 1);
  out.back() = d.hi;
  return out;
}

SurfaceG3 build_ruled(const SurfaceG3& surf, std::shared_ptr<const ParamCurve> curve,
                      RuledKind kind, Interval t_range, const SurfaceTolerances& tol) {
  if (!(t_range.lo < t_range.hi)) throw BadDomain("t range must satisfy lo < hi");
  Interval dom = curve->domain();
  if (!(dom.lo < dom.hi)) throw BadDomain("base curve domain is empty");
  auto map = std::make_shared<RuledMap>(surf, curve, kind, tol);
  for (double u : grid_nodes(dom, kImmersionSamples)) {
    SurfacePatch p = RuledMap::patch_at(map->frame(u), 0.0);
    if (!(galilean_norm(galilean_cross(p.ps, p.pt)) > tol.w_min)) {
      throw SurfaceSingular("ruled surface is not immersed along the base curve" + at_u(u));
    }
  }
  std::string name = surf.name() + (kind == RuledKind::NormalSurface ? ".normal" : ".binormal");
  return SurfaceG3(std::move(map), dom, t_range, std::move(name));
}

LineOfCurvature line_of_curvature_check(const SurfaceG3& surf, const ParamCurve& curve, int ns,
                                        double tol) {
  LineOfCurvature out;
  for (double u : grid_nodes(curve.domain(), ns)) {
    DarbouxSample d = darboux_apparatus(surf, curve, u);
    out.max_residual = std::max(out.max_residual, std::abs(d.tau_g));
    // eta' is isotropic and T is not, so eta' = lambda T forces lambda = 0.
    out.lambda_residual = std::max(out.lambda_residual, galilean_norm(d.dNsurf));
  }
  out.is_line_of_curvature = out.max_residual <= tol;
  return out;
}

VerificationReport verify_proposition(const SurfaceG3& surf,
                                      std::shared_ptr<const ParamCurve> curve, RuledKind kind,
                                      const VerifyOptions& opt) {
  const RuledGrid& g = opt.grid;
  build_ruled(surf, curve, kind, g.t_range, opt.surface);
  RuledMap map(surf, curve, kind, opt.surface);

  VerificationReport r;
  r.kind = kind;
  r.grid_s = g.ns;
  r.grid_t = g.nt;
  r.s_nodes = grid_nodes(curve->domain(), g.ns);
  r.t_nodes = grid_nodes(g.t_range, g.nt);
  r.K_samples.reserve(static_cast<std::size_t>(g.ns * g.nt));
  r.H_samples.reserve(static_cast<std::size_t>(g.ns * g.nt));

  std::vector<double> kappa, tau;
  bool identity_ok = true;
  double flat_director = 0.0;
  for (double u : r.s_nodes) {
    DarbouxSample d = darboux_apparatus(surf, *curve, u, opt.surface);
    r.max_geodesic_curvature = std::max(r.max_geodesic_curvature, std::abs(d.k_g));
    kappa.push_back(std::abs(d.k_n));
    tau.push_back(d.tau_g);
    RuledFrame f = map.frame(u);
    GVec3 expected = kind == RuledKind::NormalSurface ? d.Bside : d.Nsurf;
    double tau2 = d.tau_g * d.tau_g;
    double bracket = galilean_dot(f.d[1], galilean_cross(d.T, f.d[0]));
    for (double t : r.t_nodes) {
      FundamentalData fd = fundamental_data(RuledMap::patch_at(f, t), opt.surface);
      r.K_samples.push_back(fd.K);
      r.H_samples.push_back(fd.H);
      r.H_maxabs = std::max(r.H_maxabs, std::abs(fd.H));
      r.eta_alignment = std::max(r.eta_alignment, std::min(yz_norm(fd.eta - expected),
                                                           yz_norm(fd.eta + expected)));
      r.w_deviation = std::max(r.w_deviation, std::abs(fd.w - 1.0));
      r.l_pattern_residual =
          std::max({r.l_pattern_residual, std::abs(fd.L22), std::abs(std::abs(fd.L12) - std::abs(d.tau_g))});
      double id = std::abs(fd.K + tau2);
      r.identity_residual = std::max(r.identity_residual, id);
      if (id > opt.tol * (1.0 + tau2)) identity_ok = false;
      flat_director = std::max(flat_director,
                               std::abs(std::abs(fd.K) * std::pow(fd.w, 1.5) - bracket * bracket));
    }
  }
  if (r.max_geodesic_curvature > opt.geodesic_tol) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "base curve is not a geodesic: max |k_g| = %.3g",
                  r.max_geodesic_curvature);
    throw NotAGeodesic(buf);
  }

  r.base_class = classify_samples(kappa, tau);
  for (double t : tau) r.tau_mean += t;
  r.tau_mean /= static_cast<double>(tau.size());

  double k_max = 0.0;
  for (double k : r.K_samples) {
    r.K_mean += k;
    k_max = std::max(k_max, std::abs(k));
  }
  r.K_mean /= static_cast<double>(r.K_samples.size());
  for (double k : r.K_samples) r.K_spread = std::max(r.K_spread, std::abs(k - r.K_mean));

  bool line_base = r.base_class.kind == CurveKind::LineSegment;
  bool minimal = r.H_maxabs <= opt.flat_tol;
  bool flat = k_max <= opt.flat_tol;
  if (line_base) {
    r.identity_residual = k_max;
    r.director_residual = flat_director;
    if (kind == RuledKind::NormalSurface) {
      LineOfCurvature loc = line_of_curvature_check(surf, *curve, g.ns, opt.flat_tol);
      r.loc_residual = loc.max_residual;
      r.line_of_curvature = loc.is_line_of_curvature;
    }
    bool loc_ok = !r.line_of_curvature.has_value() || *r.line_of_curvature;
    r.verdict = flat && minimal && loc_ok ? RuledVerdict::FlatMinimal : RuledVerdict::Fail;
  } else {
    bool constant = r.K_spread <= opt.tol * (1.0 + std::abs(r.K_mean));
    if (flat && minimal) {
      r.verdict = RuledVerdict::FlatMinimal;
    } else if (r.K_mean < 0.0 && constant && minimal && identity_ok) {
      r.verdict = RuledVerdict::ConstNegativeMinimal;
    } else {
      r.verdict = RuledVerdict::Fail;
    }
  }
  return r;
}

namespace {

Eigen::Vector3d to_eigen(const GVec3& v) { return {v.x1, v.x2, v.x3}; }

/// Least-squares coefficients of v in the tangent basis and the residual.
std::pair<Eigen::Vector2d, double> tangent_solve(const SurfacePatch& p, const GVec3& v) {
  Eigen::Matrix<double, 3, 2> A;
  A.col(0) = to_eigen(p.ps);
  A.col(1) = to_eigen(p.pt);
  Eigen::Vector3d b = to_eigen(v);
  Eigen::Vector2d x = A.colPivHouseholderQr().solve(b);
  return {x, (A * x - b).norm()};
}

}  // namespace

GeodesicPath geodesic_along_curve(const SurfaceG3& surf, const CurveG3& c, double step,
                                  double tol, const SurfaceTolerances& stol) {
  if (!c.admissible()) throw NotAdmissible("curve '" + c.name() + "' is not admissible");
  const Interval& ds = surf.domain_s();
  const Interval& dt = surf.domain_t();
  GVec3 p0 = c.point(c.domain().lo);
  double scale = 1.0 + to_eigen(p0).norm();

  // Coarse search, then Gauss-Newton on psi(s, t) = p0.
  constexpr int kCoarse = 41;
  double best = std::numeric_limits<double>::infinity();
  std::array<double, 2> st{ds.mid(), dt.mid()};
  for (double s : grid_nodes(ds, kCoarse)) {
    for (double t : grid_nodes(dt, kCoarse)) {
      double e = (to_eigen(surf.point(s, t)) - to_eigen(p0)).norm();
      if (e < best) {
        best = e;
        st = {s, t};
      }
    }
  }
  for (int it = 0; it < 50; ++it) {
    SurfacePatch p = surf.patch(st[0], st[1]);
    auto [step_st, res] = tangent_solve(p, p0 - p.p);
    (void)res;
    st[0] = std::clamp(st[0] + step_st[0], ds.lo, ds.hi);
    st[1] = std::clamp(st[1] + step_st[1], dt.lo, dt.hi);
    if (step_st.norm() <= 1e-15 * scale) break;
  }
  SurfacePatch p = surf.patch(st[0], st[1]);
  if ((to_eigen(p.p) - to_eigen(p0)).norm() > tol * scale) {
    throw NotAGeodesic("curve '" + c.name() + "' does not start on surface '" + surf.name() + "'");
  }
  GVec3 a1 = c.jet(c.domain().lo).d[1];
  auto [dir, res] = tangent_solve(p, a1);
  if (res > tol * (1.0 + to_eigen(a1).norm())) {
    throw NotAGeodesic("curve '" + c.name() + "' leaves the tangent plane of '" + surf.name() +
                       "'");
  }

  double length = c.point(c.domain().hi).x1 - p0.x1;
  GeodesicPath path = integrate_geodesic(surf, st, {dir[0], dir[1]}, length, step, stol);

  CurveG3 by_x = reparametrize_to_galilean_arclength(c);
  double worst = 0.0;
  for (const auto& g : path.samples()) {
    GVec3 q = by_x.point(std::min(p0.x1 + g.u, by_x.domain().hi));
    worst = std::max(worst, (to_eigen(surf.point(g.s, g.t)) - to_eigen(q)).norm());
  }
  if (worst > tol * scale) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (max separation %.3g)", worst);
    throw NotAGeodesic("curve '" + c.name() + "' is not a geodesic of '" + surf.name() + "'" +
                       buf);
  }
  if (path.max_geodesic_curvature() > tol) {
    throw NotAGeodesic("integrated path has |k_g| above tolerance");
  }
  return path;
}

std::vector<std::array<double, 2>> default_probes(const SurfaceG3& surf, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.02, 0.02);
  const Interval& ds = surf.domain_s();
  const Interval& dt = surf.domain_t();
  std::vector<std::array<double, 2>> out;
  for (double f : {0.25, 0.5, 0.75}) {
    double a = f + jitter(rng);
    double b = f + jitter(rng);
    out.push_back({ds.lo + a * ds.length(), dt.lo + b * dt.length()});
  }
  return out;
}

SurfaceVerdict classify_surface(const SurfaceG3& surf,
                                const std::vector<std::array<double, 2>>& probes,
                                const ClassifySurfaceOptions& opt) {
  if (probes.empty()) throw Error("surface classification needs at least one probe");
  SurfaceVerdict out;
  out.base_flat_minimal = true;
  for (const auto& pr : probes) {
    try {
      FundamentalData fd = fundamental_data(surf, pr[0], pr[1], opt.verify.surface);
      if (std::abs(fd.K) > opt.verify.flat_tol || std::abs(fd.H) > opt.verify.flat_tol) {
        out.base_flat_minimal = false;
      }
    } catch (const Error&) {
      out.base_flat_minimal = false;
    }
    for (double slope : opt.slopes) {
      std::shared_ptr<const GeodesicPath> path;
      std::string path_error;
      try {
        path = std::make_shared<const GeodesicPath>(
            integrate_geodesic(surf, pr, {1.0, slope}, opt.length, opt.step, opt.verify.surface));
        if (path->samples().size() < 2) {
          path_error = "geodesic leaves the domain immediately";
          path.reset();
        }
      } catch (const Error& e) {
        path_error = e.what();
      }
      for (RuledKind kind : opt.kinds) {
        ProbeReport rep;
        rep.s = pr[0];
        rep.t = pr[1];
        rep.slope = slope;
        rep.kind = kind;
        if (!path) {
          rep.error = path_error;
        } else {
          rep.left_domain = path->left_domain();
          try {
            rep.report = verify_proposition(surf, path, kind, opt.verify);
          } catch (const Error& e) {
            rep.error = e.what();
          }
        }
        out.reports.push_back(std::move(rep));
      }
    }
  }

  bool all_flat = true;
  bool all_pass = true;
  bool any_negative = false;
  for (const auto& rep : out.reports) {
    RuledVerdict v = rep.report ? rep.report->verdict : RuledVerdict::Fail;
    all_flat = all_flat && v == RuledVerdict::FlatMinimal;
    all_pass = all_pass && v != RuledVerdict::Fail;
    any_negative = any_negative || v == RuledVerdict::ConstNegativeMinimal;
  }
  if (all_flat && out.base_flat_minimal) {
    out.verdict = SurfaceClass::Plane;
  } else if (all_pass && any_negative) {
    out.verdict = SurfaceClass::CircularHyperboloid;
    // The radius is read from the unit-slope geodesics when they give a
    // constant negative curvature, else from the most negative report.
    double sum = 0.0;
    int count = 0;
    double most_negative = 0.0;
    for (const auto& rep : out.reports) {
      if (!rep.report || rep.report->verdict != RuledVerdict::ConstNegativeMinimal) continue;
      most_negative = std::min(most_negative, rep.report->K_mean);
      if (rep.slope == 1.0) {
        sum += rep.report->K_mean;
        ++count;
      }
    }
    double k = count > 0 ? sum / count : most_negative;
    out.r = 1.0 / std::sqrt(-k);
  } else {
    out.verdict = SurfaceClass::Inconclusive;
  }
  return out;
}

}  // namespace gali
