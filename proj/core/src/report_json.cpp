#include "gali/report_json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "json.hpp"

namespace gali {

namespace {

using nlohmann::ordered_json;

ordered_json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round9(v);
}

ordered_json nums(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

ordered_json curve_class(const CurveClass& c) {
  ordered_json j;
  j["kind"] = std::string(to_string(c.kind));
  j["kappa_mean"] = num(c.kappa_mean);
  j["kappa_spread"] = num(c.kappa_spread);
  j["tau_mean"] = num(c.tau_mean);
  j["tau_spread"] = num(c.tau_spread);
  j["mixed_regime"] = c.mixed_regime;
  return j;
}

ordered_json report(const VerificationReport& r) {
  ordered_json j;
  j["kind"] = std::string(to_string(r.kind));
  j["base_class"] = curve_class(r.base_class);
  j["grid_s"] = r.grid_s;
  j["grid_t"] = r.grid_t;
  j["s_nodes"] = nums(r.s_nodes);
  j["t_nodes"] = nums(r.t_nodes);
  j["K_samples"] = nums(r.K_samples);
  j["H_samples"] = nums(r.H_samples);
  j["K_mean"] = num(r.K_mean);
  j["K_spread"] = num(r.K_spread);
  j["H_maxabs"] = num(r.H_maxabs);
  j["tau_mean"] = num(r.tau_mean);
  j["identity_residual"] = num(r.identity_residual);
  j["director_residual"] = r.director_residual ? num(*r.director_residual) : ordered_json();
  j["eta_alignment"] = num(r.eta_alignment);
  j["w_deviation"] = num(r.w_deviation);
  j["l_pattern_residual"] = num(r.l_pattern_residual);
  j["loc_residual"] = r.loc_residual ? num(*r.loc_residual) : ordered_json();
  j["line_of_curvature"] = r.line_of_curvature ? ordered_json(*r.line_of_curvature) : ordered_json();
  j["max_geodesic_curvature"] = num(r.max_geodesic_curvature);
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

double round9(double v) {
  if (!std::isfinite(v)) return v;
  if (v == 0.0) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::stod(buf);
}

CurveAnalysis analyze_curve(const CurveG3& c, int grid, const ClassifyOptions& opt) {
  CurveAnalysis a;
  a.name = c.name();
  FrenetOptions fo;
  fo.kappa_min = opt.kappa_min;
  for (double s : interior_grid(c.domain(), grid)) {
    FrenetSample f = frenet_apparatus(c, s, fo);
    a.s_samples.push_back(s);
    a.kappa_samples.push_back(f.kappa);
    a.tau_samples.push_back(f.frame_defined ? f.tau : 0.0);
  }
  a.curve_class = classify_samples(a.kappa_samples, a.tau_samples, opt);
  return a;
}

SurfaceAnalysis analyze_surface(const SurfaceG3& surf, int ns, int nt,
                                const SurfaceTolerances& tol) {
  SurfaceAnalysis a;
  a.name = surf.name();
  a.grid_s = ns;
  a.grid_t = nt;
  a.s_nodes = grid_nodes(surf.domain_s(), ns);
  a.t_nodes = grid_nodes(surf.domain_t(), nt);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  double sum = 0.0;
  int count = 0;
  for (double s : a.s_nodes) {
    for (double t : a.t_nodes) {
      double K = nan, H = nan, w = nan;
      try {
        FundamentalData fd = fundamental_data(surf, s, t, tol);
        K = fd.K;
        H = fd.H;
        w = fd.w;
        sum += K;
        ++count;
        a.H_maxabs = std::max(a.H_maxabs, std::abs(H));
      } catch (const SurfaceSingular&) {
        ++a.singular_count;
      } catch (const BothGZero&) {
        ++a.singular_count;
      }
      a.K_samples.push_back(K);
      a.H_samples.push_back(H);
      a.w_samples.push_back(w);
    }
  }
  if (count > 0) {
    a.K_mean = sum / count;
    for (double k : a.K_samples) {
      if (std::isfinite(k)) a.K_spread = std::max(a.K_spread, std::abs(k - a.K_mean));
    }
  }
  return a;
}

std::string to_json(const CurveClass& c) { return dump(curve_class(c)); }

std::string to_json(const CurveAnalysis& a) {
  ordered_json j;
  j["name"] = a.name;
  j["s_samples"] = nums(a.s_samples);
  j["kappa_samples"] = nums(a.kappa_samples);
  j["tau_samples"] = nums(a.tau_samples);
  j["curve_class"] = curve_class(a.curve_class);
  return dump(j);
}

std::string to_json(const SurfaceAnalysis& a) {
  ordered_json j;
  j["name"] = a.name;
  j["grid_s"] = a.grid_s;
  j["grid_t"] = a.grid_t;
  j["s_nodes"] = nums(a.s_nodes);
  j["t_nodes"] = nums(a.t_nodes);
  j["K_samples"] = nums(a.K_samples);
  j["H_samples"] = nums(a.H_samples);
  j["w_samples"] = nums(a.w_samples);
  j["singular_count"] = a.singular_count;
  j["K_mean"] = num(a.K_mean);
  j["K_spread"] = num(a.K_spread);
  j["H_maxabs"] = num(a.H_maxabs);
  return dump(j);
}

std::string to_json(const GeodesicPath& g) {
  ordered_json j;
  ordered_json u = ordered_json::array(), s = ordered_json::array(), t = ordered_json::array();
  for (const auto& p : g.samples()) {
    u.push_back(num(p.u));
    s.push_back(num(p.s));
    t.push_back(num(p.t));
  }
  j["surface"] = g.surface().name();
  j["step"] = num(g.step());
  j["u"] = u;
  j["s"] = s;
  j["t"] = t;
  j["left_domain"] = g.left_domain();
  j["max_geodesic_curvature"] = num(g.max_geodesic_curvature());
  return dump(j);
}

std::string to_json(const VerificationReport& r) { return dump(report(r)); }

std::string to_json(const SurfaceVerdict& v) {
  ordered_json j;
  j["verdict"] = std::string(to_string(v.verdict));
  j["r"] = v.r ? num(*v.r) : ordered_json();
  j["base_flat_minimal"] = v.base_flat_minimal;
  ordered_json reps = ordered_json::array();
  for (const auto& p : v.reports) {
    ordered_json e;
    e["s"] = num(p.s);
    e["t"] = num(p.t);
    e["slope"] = num(p.slope);
    e["kind"] = std::string(to_string(p.kind));
    e["left_domain"] = p.left_domain;
    e["error"] = p.error;
    if (p.report) {
      const VerificationReport& r = *p.report;
      e["verdict"] = std::string(to_string(r.verdict));
      e["K_mean"] = num(r.K_mean);
      e["K_spread"] = num(r.K_spread);
      e["H_maxabs"] = num(r.H_maxabs);
      e["tau_mean"] = num(r.tau_mean);
      e["identity_residual"] = num(r.identity_residual);
      e["base_class"] = std::string(to_string(r.base_class.kind));
    } else {
      e["verdict"] = std::string(to_string(RuledVerdict::Fail));
    }
    reps.push_back(std::move(e));
  }
  j["reports"] = std::move(reps);
  return dump(j);
}

}  // namespace gali
