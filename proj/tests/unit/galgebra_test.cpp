#include <gtest/gtest.h>

#include "gali/galgebra.hpp"
#include "generators.hpp"

using namespace gali;
using gali::testing::Gen;

TEST(GalileanDot, Branches) {
  EXPECT_EQ(galilean_dot(GVec3{1, 2, 3}, GVec3{4, 5, 6}), 4.0);
  EXPECT_EQ(galilean_dot(GVec3{0, 1, 2}, GVec3{0, 3, 4}), 11.0);
  EXPECT_EQ(galilean_dot(GVec3{0, 2, 3}, GVec3{5, 0, 0}), 0.0);
}

TEST(GalileanCross, Examples) {
  EXPECT_EQ(galilean_cross(GVec3{1, 0, 0}, GVec3{0, 1, 0}), (GVec3{0, 0, 1}));
  EXPECT_EQ(galilean_cross(GVec3{1, 2, 3}, GVec3{2, 4, 6}), (GVec3{0, 0, 0}));
  EXPECT_EQ(galilean_cross(GVec3{1, 5, 7}, GVec3{0, 3, 4}), (GVec3{0, -4, 3}));
}

TEST(GalileanNorm, Examples) {
  EXPECT_EQ(galilean_norm({3, 1, 2}), 3.0);
  EXPECT_EQ(galilean_norm({0, 3, 4}), 5.0);
  EXPECT_EQ(galilean_norm({-2, 0, 0}), 2.0);
}

TEST(EllipticInvolution, Examples) {
  EXPECT_EQ(elliptic_involution({0, 2, 5}), (GVec3{0, 5, -2}));
  EXPECT_EQ(elliptic_involution({0, 1, 0}), (GVec3{0, 0, -1}));
  EXPECT_THROW(elliptic_involution({1, 2, 3}), NonIsotropicInput);
}

TEST(Quantize, SnapsOnlySmallFirstComponent) {
  EXPECT_TRUE(is_isotropic(quantize_isotropic({1e-14, 1, 0})));
  EXPECT_TRUE(is_isotropic(quantize_isotropic({1e-11, 100, 0})));
  EXPECT_FALSE(is_isotropic(quantize_isotropic({1e-10, 1, 0})));
  EXPECT_EQ(quantize_isotropic({0.5, 1, 2}), (GVec3{0.5, 1, 2}));
}

TEST(GalgebraProperty, CrossIsIsotropicAndOrthogonal) {
  Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    GVec3 x = g.vec(), y = g.vec();
    GVec3 c = galilean_cross(x, y);
    EXPECT_TRUE(is_isotropic(c));
    // c is isotropic, so its product with a non-isotropic y is c1*y1 = 0.
    EXPECT_EQ(galilean_dot(c, y), 0.0);
    EXPECT_LE(max_abs_diff(galilean_cross(y, x), -1.0 * c), 1e-12);
  }
}

TEST(GalgebraProperty, CrossBilinear) {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    GVec3 x = g.vec(), y = g.vec(), z = g.vec();
    double a = g.uniform(-2, 2), b = g.uniform(-2, 2);
    GVec3 lhs = galilean_cross(a * x + b * y, z);
    GVec3 rhs = a * galilean_cross(x, z) + b * galilean_cross(y, z);
    EXPECT_LE(max_abs_diff(lhs, rhs), 1e-11);
  }
}

TEST(GalgebraProperty, IsotropicCrossVanishes) {
  Gen g(13);
  for (int i = 0; i < 500; ++i) {
    EXPECT_EQ(galilean_cross(g.isotropic(), g.isotropic()), (GVec3{0, 0, 0}));
  }
}

TEST(GalgebraProperty, InvolutionOrderFourAndIsometry) {
  Gen g(14);
  for (int i = 0; i < 1000; ++i) {
    GVec3 v = g.isotropic();
    GVec3 twice = elliptic_involution(elliptic_involution(v));
    EXPECT_EQ(twice, (GVec3{0, -v.x2, -v.x3}));
    EXPECT_EQ(elliptic_involution(elliptic_involution(twice)), v);
    EXPECT_DOUBLE_EQ(galilean_norm(elliptic_involution(v)), galilean_norm(v));
  }
}

TEST(GalgebraProperty, DotOfSelfIsNormSquared) {
  Gen g(15);
  for (int i = 0; i < 1000; ++i) {
    GVec3 v = g.coin() ? g.vec() : g.isotropic();
    double n = galilean_norm(v);
    EXPECT_NEAR(galilean_dot(v, v), n * n, 1e-12 * (1 + n * n));
  }
}
