#pragma once

// Normal and binormal ruled surfaces along geodesics, verification of their
// curvature identities, and the plane / circular hyperboloid classification.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gali/curves.hpp"
#include "gali/surfaces.hpp"

namespace gali {

enum class RuledKind { NormalSurface, BinormalSurface };

std::string_view to_string(RuledKind k) noexcept;

/// Grid sizes for sampling phi(s, t): ns nodes over the base curve's domain
/// and nt nodes over t_range, endpoints included.
struct RuledGrid {
  int ns = 50;
  int nt = 21;
  Interval t_range{-0.5, 0.5};
};

/// The ruling director is the surface normal eta of the base surface along
/// the curve (NormalSurface) or T ^ eta (BinormalSurface). For a geodesic
/// eta is the Frenet normal up to sign, and it stays defined where kappa = 0.
SurfaceG3 build_ruled(const SurfaceG3& surf, std::shared_ptr<const ParamCurve> curve,
                      RuledKind kind, Interval t_range, const SurfaceTolerances& tol = {});

/// n evenly spaced nodes over d, endpoints included.
std::vector<double> grid_nodes(const Interval& d, int n);

struct LineOfCurvature {
  /// max |<eta', T ^ eta>| over the grid.
  double max_residual = 0.0;
  /// lambda in eta' = lambda T, and max |eta' - lambda T|.
  double lambda = 0.0;
  double lambda_residual = 0.0;
  bool is_line_of_curvature = false;
};

LineOfCurvature line_of_curvature_check(const SurfaceG3& surf, const ParamCurve& curve, int ns = 50,
                                        double tol = 1e-8);

enum class RuledVerdict { ConstNegativeMinimal, FlatMinimal, Fail };

std::string_view to_string(RuledVerdict v) noexcept;

struct VerifyOptions {
  RuledGrid grid;
  /// Constancy of K and the K = -tau^2 identity, relative.
  double tol = 1e-6;
  /// |H| and, for a line base, |K|.
  double flat_tol = 1e-8;
  double geodesic_tol = 1e-6;
  SurfaceTolerances surface;
};

struct VerificationReport {
  RuledKind kind = RuledKind::NormalSurface;
  CurveClass base_class;
  int grid_s = 0;
  int grid_t = 0;
  std::vector<double> s_nodes;
  std::vector<double> t_nodes;
  std::vector<double> K_samples;
  std::vector<double> H_samples;
  double K_mean = 0.0;
  double K_spread = 0.0;
  double H_maxabs = 0.0;
  double tau_mean = 0.0;
  /// max |K + tau^2| for a curved base, max |K| for a line base.
  double identity_residual = 0.0;
  /// Line base only: max | |K| w^(3/2) - <D', T ^ D>^2 |.
  std::optional<double> director_residual;
  /// max deviation of eta_phi from +-B (normal) or -+eta (binormal).
  double eta_alignment = 0.0;
  double w_deviation = 0.0;
  /// Informational: max of |L22| and ||L12| - |tau||.
  double l_pattern_residual = 0.0;
  /// Normal surface on a line base only.
  std::optional<double> loc_residual;
  std::optional<bool> line_of_curvature;
  double max_geodesic_curvature = 0.0;
  RuledVerdict verdict = RuledVerdict::Fail;
};

/// Throws NotAGeodesic when |k_g| exceeds opt.geodesic_tol on the grid.
VerificationReport verify_proposition(const SurfaceG3& surf,
                                      std::shared_ptr<const ParamCurve> curve, RuledKind kind,
                                      const VerifyOptions& opt = {});

/// Locates `c` on `surf` at its first point, integrates the geodesic with the
/// same initial direction over the curve's x-extent and throws NotAGeodesic
/// when the two separate by more than `tol`.
GeodesicPath geodesic_along_curve(const SurfaceG3& surf, const CurveG3& c, double step = 1e-3,
                                  double tol = 1e-6, const SurfaceTolerances& stol = {});

enum class SurfaceClass { Plane, CircularHyperboloid, Inconclusive };

std::string_view to_string(SurfaceClass c) noexcept;

struct ProbeReport {
  double s = 0.0;
  double t = 0.0;
  double slope = 0.0;
  RuledKind kind = RuledKind::NormalSurface;
  bool left_domain = false;
  std::optional<VerificationReport> report;
  /// Set when construction or verification raised.
  std::string error;
};

struct SurfaceVerdict {
  SurfaceClass verdict = SurfaceClass::Inconclusive;
  std::optional<double> r;
  bool base_flat_minimal = false;
  std::vector<ProbeReport> reports;
};

struct ClassifySurfaceOptions {
  std::vector<double> slopes{0.0, 1.0, -1.0, 2.0};
  std::vector<RuledKind> kinds{RuledKind::NormalSurface, RuledKind::BinormalSurface};
  double length = 1.0;
  double step = 1e-3;
  VerifyOptions verify;
};

/// Three probes on the domain diagonal at fractions 1/4, 1/2, 3/4, each
/// jittered by up to 2% of the domain size from `seed`.
std::vector<std::array<double, 2>> default_probes(const SurfaceG3& surf, std::uint64_t seed);

SurfaceVerdict classify_surface(const SurfaceG3& surf,
                                const std::vector<std::array<double, 2>>& probes,
                                const ClassifySurfaceOptions& opt = {});

}  // namespace gali
