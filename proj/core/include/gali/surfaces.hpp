#pragma once

// Parametric surfaces psi(s, t) in G3: fundamental forms, the isotropic
// normal and tangent, Gaussian and mean curvature, Christoffel symbols and
// geodesics.

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "gali/galgebra.hpp"
#include "gali/scene.hpp"

namespace gali {

/// Position and partial derivatives at one parameter point.
/// Third partials are present only when has_third is set.
struct SurfacePatch {
  GVec3 p, ps, pt;
  GVec3 pss, pst, ptt;
  GVec3 psss, psst, pstt, pttt;
  bool has_third = false;
};

class SurfaceMap {
 public:
  virtual ~SurfaceMap() = default;
  /// order is 2 or 3.
  virtual SurfacePatch patch(double s, double t, int order) const = 0;
};

class SurfaceG3 {
 public:
  SurfaceG3(std::shared_ptr<const SurfaceMap> map, Interval domain_s, Interval domain_t,
            std::string name = {});

  static SurfaceG3 from_expressions(Expr x, Expr y, Expr z, Interval domain_s, Interval domain_t,
                                    std::string name = {});
  static SurfaceG3 from_def(const SurfaceDef& def);

  SurfacePatch patch(double s, double t, int order = 2) const { return map_->patch(s, t, order); }
  GVec3 point(double s, double t) const;

  const Interval& domain_s() const noexcept { return domain_s_; }
  const Interval& domain_t() const noexcept { return domain_t_; }
  bool contains(double s, double t) const noexcept {
    return domain_s_.contains(s) && domain_t_.contains(t);
  }
  const std::string& name() const noexcept { return name_; }

 private:
  std::shared_ptr<const SurfaceMap> map_;
  Interval domain_s_;
  Interval domain_t_;
  std::string name_;
};

struct SurfaceTolerances {
  double w_min = 1e-10;
  double isotropy_eps = 1e-12;
};

struct FirstFundamentalForm {
  // ds1^2 = (g1 ds + g2 dt)^2 and ds2^2 = h11 ds^2 + 2 h12 ds dt + h22 dt^2.
  std::array<std::array<double, 2>, 2> ds1_sq{};
  std::array<std::array<double, 2>, 2> ds2_sq{};
};

struct FundamentalData {
  double g1 = 0.0, g2 = 0.0;
  double gup1 = 0.0, gup2 = 0.0;
  double h11 = 0.0, h12 = 0.0, h22 = 0.0;
  double w = 0.0;
  FirstFundamentalForm ds2_matrix;
  double L11 = 0.0, L12 = 0.0, L22 = 0.0;
  GVec3 eta;
  GVec3 delta;
  double K = 0.0;
  double H = 0.0;
  /// The second-form coefficients by the branch not selected (g1-form when
  /// |g1| < |g2| and vice versa); NaN when that branch divides by zero.
  double L11_alt = 0.0, L12_alt = 0.0, L22_alt = 0.0;
};

/// Throws BothGZero when g1 = g2 = 0 and SurfaceSingular when w <= w_min.
FundamentalData fundamental_data(const SurfacePatch& patch, const SurfaceTolerances& tol = {});
FundamentalData fundamental_data(const SurfaceG3& surf, double s, double t,
                                 const SurfaceTolerances& tol = {});

/// Unit isotropic normal (psi_s ^ psi_t) / w.
GVec3 isotropic_normal(const SurfacePatch& patch, const SurfaceTolerances& tol = {});

struct Christoffel {
  /// gamma[k][i][j], indices 0 for s and 1 for t.
  double gamma[2][2][2] = {};
  double residual = 0.0;
};

/// Least-squares split of psi_ij - L_ij eta onto psi_s, psi_t.
/// Throws DegenerateTangent when the tangents are dependent.
Christoffel christoffel(const SurfacePatch& patch, const SurfaceTolerances& tol = {});
Christoffel christoffel(const SurfaceG3& surf, double s, double t,
                        const SurfaceTolerances& tol = {});

/// Parameter curve u -> (s(u), t(u)) with derivatives up to order 2.
struct ParamJet {
  double s = 0.0, t = 0.0;
  double ds = 0.0, dt = 0.0;
  double dds = 0.0, ddt = 0.0;
};

class ParamCurve {
 public:
  virtual ~ParamCurve() = default;
  virtual ParamJet at(double u) const = 0;
  virtual Interval domain() const = 0;
};

/// (s(u), t(u)) given as expressions in the variable s (standing for u).
class ExprParamCurve final : public ParamCurve {
 public:
  ExprParamCurve(Expr s_of_u, Expr t_of_u, Interval domain);
  ParamJet at(double u) const override;
  Interval domain() const override { return domain_; }

 private:
  Expr s_;
  Expr t_;
  Interval domain_;
};

/// Space curve alpha(u) = psi(s(u), t(u)) and the surface normal along it,
/// each with derivatives in u up to order 2. d2_eta is only valid when the
/// surface supplied third partials.
struct CurveOnSurface {
  GVec3 alpha[3];
  GVec3 eta[3];
  bool eta_second_valid = false;
};

CurveOnSurface compose_on_surface(const SurfaceG3& surf, const ParamJet& pj,
                                  const SurfaceTolerances& tol = {});

struct GeodesicSample {
  double u = 0.0;
  double s = 0.0, t = 0.0;
  double ds = 0.0, dt = 0.0;
};

/// Geodesic ODE u''^k + Gamma^k_ij u'^i u'^j = 0 integrated with RK4.
class GeodesicPath final : public ParamCurve {
 public:
  GeodesicPath(SurfaceG3 surf, std::vector<GeodesicSample> samples, double step, bool left_domain,
               SurfaceTolerances tol);

  ParamJet at(double u) const override;
  Interval domain() const override;

  const std::vector<GeodesicSample>& samples() const noexcept { return samples_; }
  const SurfaceG3& surface() const noexcept { return surf_; }
  double step() const noexcept { return step_; }
  /// The trajectory left the surface domain and was truncated there.
  bool left_domain() const noexcept { return left_domain_; }
  /// max |k_g| over the samples, filled in by integrate_geodesic.
  double max_geodesic_curvature() const noexcept { return max_kg_; }
  void set_max_geodesic_curvature(double v) noexcept { max_kg_ = v; }

 private:
  SurfaceG3 surf_;
  std::vector<GeodesicSample> samples_;
  double step_;
  bool left_domain_;
  SurfaceTolerances tol_;
  double max_kg_ = 0.0;
};

/// Right-hand side of the geodesic system: returns (s'', t'').
std::array<double, 2> geodesic_acceleration(const SurfaceG3& surf, double s, double t, double ds,
                                            double dt, const SurfaceTolerances& tol = {});

/// `direction` = (ds, dt) with ds != 0, rescaled to unit x-speed
/// g1 ds + g2 dt = 1 so u is Galilean arclength. Throws NotAdmissible,
/// SurfaceSingular. A trajectory leaving the domain is truncated and flagged.
GeodesicPath integrate_geodesic(const SurfaceG3& surf, std::array<double, 2> start,
                                std::array<double, 2> direction, double length, double step,
                                const SurfaceTolerances& tol = {});

}  // namespace gali
