#include <gtest/gtest.h>

#include <cmath>

#include "gali/ruled.hpp"
#include "generators.hpp"

using namespace gali;

namespace {

constexpr double kTwoPi = 6.283185307179586;

SurfaceG3 make(const char* x, const char* y, const char* z, Interval ds, Interval dt,
               std::string name = "surf") {
  return SurfaceG3::from_expressions(parse_expr(x), parse_expr(y), parse_expr(z), ds, dt,
                                     std::move(name));
}

SurfaceG3 cylinder() { return make("s", "cos(t)", "sin(t)", {0, kTwoPi}, {0, kTwoPi}, "cyl"); }
SurfaceG3 plane() { return make("s", "t", "0", {-2, 2}, {-2, 2}, "plane"); }

std::shared_ptr<const ParamCurve> param(const char* s, const char* t, Interval d) {
  return std::make_shared<ExprParamCurve>(parse_expr(s), parse_expr(t), d);
}

std::shared_ptr<const ParamCurve> helix_geodesic() {
  return std::make_shared<const GeodesicPath>(
      integrate_geodesic(cylinder(), {0, 0}, {1, 1}, 6.0, 1e-3));
}

}  // namespace

TEST(BuildRuled, NormalSurfaceOfHelixIsCone) {
  SurfaceG3 phi = build_ruled(cylinder(), helix_geodesic(), RuledKind::NormalSurface, {-0.5, 0.5});
  for (double s : {0.3, 2.0, 5.5}) {
    for (double t : {-0.5, 0.0, 0.4}) {
      GVec3 expect{s, (1 - t) * std::cos(s), (1 - t) * std::sin(s)};
      EXPECT_LE(max_abs_diff(phi.point(s, t), expect), 1e-10);
    }
  }
}

TEST(BuildRuled, BinormalSurfaceOfHelix) {
  SurfaceG3 phi =
      build_ruled(cylinder(), helix_geodesic(), RuledKind::BinormalSurface, {-0.5, 0.5});
  for (double s : {0.3, 2.0, 5.5}) {
    for (double t : {-0.5, 0.25}) {
      // Director T ^ eta = (0, sin s, -cos s).
      GVec3 expect{s, std::cos(s) + t * std::sin(s), std::sin(s) - t * std::cos(s)};
      EXPECT_LE(max_abs_diff(phi.point(s, t), expect), 1e-10);
    }
  }
}

TEST(BuildRuled, LineOnPlaneGivesPlane) {
  SurfaceG3 phi = build_ruled(plane(), param("s", "0.5*s", {-1, 1}), RuledKind::NormalSurface,
                              {-0.5, 0.5});
  for (double s : {-0.8, 0.1}) {
    for (double t : {-0.3, 0.2}) {
      EXPECT_LE(max_abs_diff(phi.point(s, t), {s, 0.5 * s, t}), 1e-14);
      FundamentalData fd = fundamental_data(phi, s, t);
      EXPECT_EQ(fd.K, 0.0);
      EXPECT_EQ(fd.H, 0.0);
    }
  }
}

TEST(Verify, HelixNormalSurface) {
  VerificationReport r = verify_proposition(cylinder(), helix_geodesic(), RuledKind::NormalSurface);
  EXPECT_EQ(r.verdict, RuledVerdict::ConstNegativeMinimal);
  EXPECT_EQ(r.K_samples.size(), 50u * 21u);
  EXPECT_NEAR(r.K_mean, -1.0, 1e-6);
  EXPECT_LE(r.H_maxabs, 1e-8);
  EXPECT_LE(r.eta_alignment, 1e-8);
  EXPECT_LE(r.w_deviation, 1e-8);
  EXPECT_LE(r.l_pattern_residual, 1e-8);
  EXPECT_EQ(r.base_class.kind, CurveKind::CircularHelix);
  EXPECT_FALSE(r.loc_residual.has_value());
}

TEST(Verify, HelixBinormalSurface) {
  VerificationReport r =
      verify_proposition(cylinder(), helix_geodesic(), RuledKind::BinormalSurface);
  EXPECT_EQ(r.verdict, RuledVerdict::ConstNegativeMinimal);
  EXPECT_NEAR(r.K_mean, -1.0, 1e-6);
  EXPECT_LE(r.eta_alignment, 1e-8);
}

TEST(Verify, LineOnPlane) {
  VerificationReport r =
      verify_proposition(plane(), param("s", "0.5*s", {-1, 1}), RuledKind::NormalSurface);
  EXPECT_EQ(r.verdict, RuledVerdict::FlatMinimal);
  EXPECT_EQ(r.base_class.kind, CurveKind::LineSegment);
  ASSERT_TRUE(r.loc_residual.has_value());
  EXPECT_LE(*r.loc_residual, 1e-8);
  EXPECT_TRUE(r.line_of_curvature.value_or(false));
  ASSERT_TRUE(r.director_residual.has_value());
  EXPECT_LE(*r.director_residual, 1e-6);
}

TEST(Verify, RejectsNonGeodesic) {
  // A parabola in the plane is not a geodesic.
  EXPECT_THROW(
      verify_proposition(plane(), param("s", "s^2", {-1, 1}), RuledKind::NormalSurface),
      NotAGeodesic);
}

TEST(Verify, SlopesGiveMinusTauSquared) {
  const double slopes[] = {0, 1, -1, 2};
  const double expect[] = {0, -1, -1, -4};
  for (int i = 0; i < 4; ++i) {
    auto g = std::make_shared<const GeodesicPath>(
        integrate_geodesic(cylinder(), {1, 1}, {1, slopes[i]}, 1, 1e-3));
    for (RuledKind k : {RuledKind::NormalSurface, RuledKind::BinormalSurface}) {
      VerificationReport r = verify_proposition(cylinder(), g, k);
      EXPECT_NEAR(r.K_mean, expect[i], 1e-6);
      EXPECT_NEAR(r.tau_mean, slopes[i], 1e-9);
      EXPECT_NE(r.verdict, RuledVerdict::Fail);
    }
  }
}

TEST(Verify, GridAndTolerances) {
  VerifyOptions o;
  o.grid = {5, 3, {-0.2, 0.2}};
  VerificationReport r = verify_proposition(cylinder(), helix_geodesic(), RuledKind::NormalSurface, o);
  EXPECT_EQ(r.K_samples.size(), 15u);
  EXPECT_EQ(r.t_nodes.front(), -0.2);
  EXPECT_EQ(r.t_nodes.back(), 0.2);
}

TEST(LineOfCurvature, Examples) {
  LineOfCurvature a = line_of_curvature_check(plane(), *param("s", "0.3*s", {-1, 1}));
  EXPECT_EQ(a.max_residual, 0.0);
  EXPECT_TRUE(a.is_line_of_curvature);
  EXPECT_EQ(a.lambda, 0.0);
  LineOfCurvature b = line_of_curvature_check(cylinder(), *param("s", "0.7", {0, 3}));
  EXPECT_LE(b.max_residual, 1e-8);
  EXPECT_TRUE(b.is_line_of_curvature);
  SurfaceG3 graph = make("s", "t", "s*t", {-1, 1}, {-1, 1});
  LineOfCurvature c = line_of_curvature_check(graph, *param("s", "0.5", {-1, 1}));
  EXPECT_FALSE(c.is_line_of_curvature);
}

TEST(GeodesicAlongCurve, FindsHelix) {
  CurveG3 helix = CurveG3::from_expressions(parse_expr("s"), parse_expr("cos(s)"),
                                            parse_expr("sin(s)"), {0, kTwoPi}, "helix");
  GeodesicPath p = geodesic_along_curve(cylinder(), helix);
  EXPECT_FALSE(p.left_domain());
  EXPECT_NEAR(p.domain().hi, kTwoPi, 1e-9);
  CurveG3 bent = CurveG3::from_expressions(parse_expr("s"), parse_expr("cos(s^2)"),
                                           parse_expr("sin(s^2)"), {0.5, 2}, "bent");
  EXPECT_THROW(geodesic_along_curve(cylinder(), bent), NotAGeodesic);
  CurveG3 off = CurveG3::from_expressions(parse_expr("s"), parse_expr("2"), parse_expr("0"),
                                          {0, 1}, "off");
  EXPECT_THROW(geodesic_along_curve(cylinder(), off), NotAGeodesic);
}

TEST(ClassifySurface, Plane) {
  SurfaceVerdict v = classify_surface(plane(), default_probes(plane(), 42));
  EXPECT_EQ(v.verdict, SurfaceClass::Plane);
  EXPECT_TRUE(v.base_flat_minimal);
  EXPECT_EQ(v.reports.size(), 3u * 4u * 2u);
}

TEST(ClassifySurface, Cylinder) {
  SurfaceVerdict v = classify_surface(cylinder(), default_probes(cylinder(), 42));
  EXPECT_EQ(v.verdict, SurfaceClass::CircularHyperboloid);
  ASSERT_TRUE(v.r.has_value());
  EXPECT_NEAR(*v.r, 1.0, 1e-4);
}

TEST(ClassifySurface, Saddle) {
  SurfaceG3 saddle = make("s", "t", "s^2 - t^2", {-1, 1}, {-1, 1}, "saddle");
  EXPECT_EQ(classify_surface(saddle, default_probes(saddle, 42)).verdict,
            SurfaceClass::Inconclusive);
}

TEST(ClassifySurface, DeterministicForSeed) {
  auto a = default_probes(cylinder(), 7);
  auto b = default_probes(cylinder(), 7);
  auto c = default_probes(cylinder(), 8);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(ClassifySurfaceProperty, InvariantUnderShearAndTranslation) {
  gali::testing::Gen g(61);
  const char* bases[][3] = {{"s", "t", "0"}, {"s", "cos(t)", "sin(t)"}, {"s", "t", "s^2 - t^2"}};
  const Interval doms[][2] = {{{-2, 2}, {-2, 2}}, {{0, kTwoPi}, {0, kTwoPi}}, {{-1, 1}, {-1, 1}}};
  for (int i = 0; i < 3; ++i) {
    SurfaceG3 base = make(bases[i][0], bases[i][1], bases[i][2], doms[i][0], doms[i][1]);
    SurfaceClass expect = classify_surface(base, default_probes(base, 42)).verdict;
    for (int trial = 0; trial < 2; ++trial) {
      double a = g.uniform(-1, 1), b = g.uniform(-1, 1), c = g.uniform(-3, 3);
      char y[128], z[128], x[64];
      std::snprintf(x, sizeof x, "%s + %.6f", bases[i][0], c);
      std::snprintf(y, sizeof y, "%s + %.6f*(%s)", bases[i][1], a, bases[i][0]);
      std::snprintf(z, sizeof z, "%s + %.6f*(%s) + %.6f", bases[i][2], b, bases[i][0], c);
      SurfaceG3 moved = make(x, y, z, doms[i][0], doms[i][1]);
      EXPECT_EQ(classify_surface(moved, default_probes(moved, 42)).verdict, expect)
          << "surface " << i << " shear " << a << "," << b;
    }
  }
}
