#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <regex>
#include <sstream>

#include "gali/export.hpp"
#include "gali/report_json.hpp"
#include "json.hpp"

using namespace gali;

namespace {

constexpr double kTwoPi = 6.283185307179586;

SurfaceG3 cylinder() {
  return SurfaceG3::from_expressions(parse_expr("s"), parse_expr("cos(t)"), parse_expr("sin(t)"),
                                     {0, kTwoPi}, {0, kTwoPi}, "cyl");
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Round9, Digits) {
  EXPECT_EQ(round9(1.0 / 3.0), 0.333333333);
  EXPECT_EQ(round9(123456789.4), 123456789.0);
  EXPECT_EQ(round9(-2.0e-12 / 3.0), -6.66666667e-13);
  EXPECT_EQ(round9(0.0), 0.0);
  EXPECT_TRUE(std::isnan(round9(std::numeric_limits<double>::quiet_NaN())));
}

TEST(Obj, CountsAndIndices) {
  std::string text = obj_text(cylinder(), 4, 3);
  auto ls = lines(text);
  int v = 0, f = 0;
  const std::regex vre(R"(v \S+ \S+ \S+)"), fre(R"(f (\d+) (\d+) (\d+))");
  for (const auto& l : ls) {
    std::smatch m;
    if (std::regex_match(l, vre)) {
      ++v;
    } else if (std::regex_match(l, m, fre)) {
      ++f;
      for (int k = 1; k <= 3; ++k) {
        int idx = std::stoi(m[k]);
        EXPECT_GE(idx, 1);
        EXPECT_LE(idx, 12);
      }
    } else {
      ADD_FAILURE() << "unexpected line: " << l;
    }
  }
  EXPECT_EQ(v, 12);
  EXPECT_EQ(f, (4 - 1) * (3 - 1) * 2);
  EXPECT_EQ(ls[0], "v 0 1 0");
  EXPECT_EQ(ls[12], "f 1 4 5");
  EXPECT_EQ(ls[13], "f 1 5 2");
}

TEST(Obj, DefaultGridTriangleCount) {
  auto ls = lines(obj_text(cylinder(), 50, 21));
  EXPECT_EQ(ls.size(), 50u * 21u + 49u * 20u * 2u);
}

TEST(Obj, VertexFormatNineDigits) {
  auto ls = lines(obj_text(cylinder(), 3, 3));
  // Second node is (0, cos(pi), sin(pi)).
  char expect[96];
  std::snprintf(expect, sizeof expect, "v %.9g %.9g %.9g", 0.0, std::cos(kTwoPi / 2),
                std::sin(kTwoPi / 2));
  EXPECT_EQ(ls[1], expect);
  std::snprintf(expect, sizeof expect, "v %.9g %.9g %.9g", kTwoPi / 2, 1.0, 0.0);
  EXPECT_EQ(ls[3], expect);
}

TEST(Csv, HeaderAndRows) {
  auto ls = lines(csv_text(cylinder(), 5, 4));
  ASSERT_EQ(ls.size(), 21u);
  EXPECT_EQ(ls[0], "s,t,K,H");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    double s, t, K, H;
    ASSERT_EQ(std::sscanf(ls[i].c_str(), "%lf,%lf,%lf,%lf", &s, &t, &K, &H), 4) << ls[i];
    EXPECT_EQ(K, 0.0);
    EXPECT_EQ(std::abs(H), 0.5);
  }
}

TEST(Csv, SingularSurfaceThrows) {
  SurfaceG3 cone = SurfaceG3::from_expressions(parse_expr("s"), parse_expr("s*cos(t)"),
                                               parse_expr("s*sin(t)"), {0, 1}, {0, 1}, "cone");
  EXPECT_THROW(csv_text(cone, 4, 4), SurfaceSingular);
}

TEST(WriteTextFile, RoundTripAndUnwritable) {
  auto dir = std::filesystem::temp_directory_path() / "gali_export_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "a.txt").string();
  write_text_file(path, "abc\n");
  std::ifstream in(path);
  std::string got((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(got, "abc\n");
  EXPECT_THROW(write_text_file((dir / "missing" / "x.obj").string(), "x"), IoError);
  std::filesystem::remove_all(dir);
}

TEST(Json, SurfaceAnalysisDeterministicAndNullAtSingular) {
  SurfaceG3 cone = SurfaceG3::from_expressions(parse_expr("s"), parse_expr("s*cos(t)"),
                                               parse_expr("s*sin(t)"), {0, 1}, {0, 1}, "cone");
  SurfaceAnalysis a = analyze_surface(cone, 3, 2);
  EXPECT_EQ(a.singular_count, 2);
  std::string j1 = to_json(a), j2 = to_json(analyze_surface(cone, 3, 2));
  EXPECT_EQ(j1, j2);
  auto doc = nlohmann::json::parse(j1);
  EXPECT_TRUE(doc["K_samples"][0].is_null());
  EXPECT_TRUE(doc["K_samples"][2].is_number());
  EXPECT_EQ(doc["name"], "cone");
  EXPECT_EQ(j1.back(), '\n');
}

TEST(Json, CurveAnalysisKeys) {
  CurveG3 helix = CurveG3::from_expressions(parse_expr("s"), parse_expr("cos(s)"),
                                            parse_expr("sin(s)"), {0, kTwoPi}, "helix");
  auto doc = nlohmann::ordered_json::parse(to_json(analyze_curve(helix, 16)));
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "s_samples", "kappa_samples", "tau_samples",
                                            "curve_class"}));
  EXPECT_EQ(doc["curve_class"]["kind"], "CircularHelix");
  EXPECT_EQ(doc["kappa_samples"].size(), 16u);
  for (const auto& k : doc["kappa_samples"]) EXPECT_EQ(k.get<double>(), 1.0);
}

TEST(Json, NineSignificantDigits) {
  CurveClass c;
  c.kappa_mean = 1.0 / 3.0;
  c.tau_mean = std::numeric_limits<double>::infinity();
  std::string j = to_json(c);
  EXPECT_NE(j.find("0.333333333"), std::string::npos);
  EXPECT_EQ(j.find("0.3333333333"), std::string::npos);
  EXPECT_NE(j.find("\"tau_mean\": null"), std::string::npos);
}

TEST(Json, VerificationReportFields) {
  auto g = std::make_shared<const GeodesicPath>(
      integrate_geodesic(cylinder(), {0, 0}, {1, 1}, 6.0, 1e-3));
  VerifyOptions o;
  o.grid = {6, 3, {-0.5, 0.5}};
  auto r = verify_proposition(cylinder(), g, RuledKind::NormalSurface, o);
  auto doc = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(doc["verdict"], "ConstNegativeMinimal");
  EXPECT_EQ(doc["K_samples"].size(), 18u);
  EXPECT_TRUE(doc["loc_residual"].is_null());
  EXPECT_EQ(doc["base_class"]["kind"], "CircularHelix");
  EXPECT_EQ(to_json(r), to_json(verify_proposition(cylinder(), g, RuledKind::NormalSurface, o)));
}
