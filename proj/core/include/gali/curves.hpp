#pragma once

// Admissible curves in G3 (x' > 0), their Frenet apparatus, the Darboux
// apparatus of curves lying on a surface, reconstruction from curvature and
// torsion, and the helix / anti-Salkowski / planar / line taxonomy.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gali/galgebra.hpp"
#include "gali/scene.hpp"
#include "gali/surfaces.hpp"

namespace gali {

/// Position and derivatives up to order 3 with respect to the parameter.
struct CurveJet {
  GVec3 d[4];
};

class CurveMap {
 public:
  virtual ~CurveMap() = default;
  virtual CurveJet jet(double s) const = 0;
};

class CurveG3 {
 public:
  /// Admissibility (x' > 0) is checked on `admissibility_grid` points.
  CurveG3(std::shared_ptr<const CurveMap> map, Interval domain, std::string name = {},
          int admissibility_grid = 257);

  static CurveG3 from_expressions(Expr x, Expr y, Expr z, Interval domain, std::string name = {});
  static CurveG3 from_def(const CurveDef& def);
  /// Uniformly spaced samples over `domain`; derivatives come from local
  /// degree-8 Lagrange interpolation. Needs at least 9 points.
  static CurveG3 sampled(std::vector<GVec3> points, Interval domain, std::string name = {});

  CurveJet jet(double s) const { return map_->jet(s); }
  GVec3 point(double s) const { return map_->jet(s).d[0]; }
  const Interval& domain() const noexcept { return domain_; }
  bool admissible() const noexcept { return admissible_; }
  /// Parameter of the first sampled point with x' <= 0, if any.
  std::optional<double> first_non_admissible() const noexcept { return bad_param_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::shared_ptr<const CurveMap> map_;
  Interval domain_;
  std::string name_;
  bool admissible_ = true;
  std::optional<double> bad_param_;
};

/// Returns a curve with x(u) = u. Throws NotAdmissible if x' <= 0 at any of
/// `samples` points.
CurveG3 reparametrize_to_galilean_arclength(const CurveG3& c, int samples = 257);

struct FrenetOptions {
  double kappa_min = 1e-9;
  /// Throw FrameUndefined instead of flagging when kappa < kappa_min.
  bool require_frame = false;
};

struct FrenetSample {
  double s = 0.0;
  GVec3 T;
  GVec3 N;
  GVec3 B;
  double kappa = 0.0;
  double tau = 0.0;
  bool frame_defined = false;
};

/// Frenet frame in Galilean arclength. Curves parametrized otherwise are
/// locally reparametrized by x before the closed-form expressions apply.
FrenetSample frenet_apparatus(const CurveG3& c, double s, const FrenetOptions& opt = {});

struct DarbouxSample {
  double u = 0.0;
  GVec3 T;
  GVec3 Nsurf;
  GVec3 Bside;
  double k_g = 0.0;
  double k_n = 0.0;
  double tau_g = 0.0;
  /// T' and Nsurf' with respect to Galilean arclength.
  GVec3 dT;
  GVec3 dNsurf;
};

/// Throws SurfaceSingular or NotAdmissible (x-speed of the composed curve
/// not positive).
DarbouxSample darboux_apparatus(const SurfaceG3& surf, const ParamCurve& pcurve, double u,
                                const SurfaceTolerances& tol = {});

/// max |k_g| over the geodesic's own samples.
double max_geodesic_curvature(const GeodesicPath& path, const SurfaceTolerances& tol = {});

/// Space curve alpha(u) = psi(s(u), t(u)) sampled at `count` uniform points.
CurveG3 sample_curve_on_surface(const SurfaceG3& surf, const ParamCurve& pcurve, int count);

/// Integrates T' = kappa N, N' = tau B, B' = -tau N by RK4 from the frame
/// T = (1,0,0), N = (0,1,0), B = (0,0,1) at (lo, 0, 0), re-normalizing N and
/// resetting B = T ^ N after each step. step <= 0 selects range/1024. The
/// returned sampled curve keeps about 256 evenly spaced nodes of the run.
CurveG3 curve_from_intrinsics(const Expr& kappa, const Expr& tau, Interval s_range,
                              double step = 0.0);

enum class CurveKind { LineSegment, Planar, CircularHelix, AntiSalkowski, General };

std::string_view to_string(CurveKind k) noexcept;

struct CurveClass {
  CurveKind kind = CurveKind::General;
  double kappa_mean = 0.0;
  double kappa_spread = 0.0;
  double tau_mean = 0.0;
  double tau_spread = 0.0;
  /// Set when kappa vanishes on part of the grid only.
  bool mixed_regime = false;
};

struct ClassifyOptions {
  double tol_rel = 1e-6;
  double tol_abs = 1e-8;
  double kappa_min = 1e-9;
};

/// Decides from sampled curvature and torsion. tau entries where the frame
/// is undefined are ignored.
CurveClass classify_samples(const std::vector<double>& kappa, const std::vector<double>& tau,
                            const ClassifyOptions& opt = {});

/// Samples `grid` interior points of the domain (grid >= 16).
CurveClass classify_curve(const CurveG3& c, int grid = 64, const ClassifyOptions& opt = {});

/// Parameters of `grid` evenly spaced interior points of `d`.
std::vector<double> interior_grid(const Interval& d, int grid);

}  // namespace gali
