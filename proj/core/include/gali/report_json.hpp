#pragma once

// Sampled analyses of scene objects and their JSON documents. Keys are the
// field names; floats carry 9 significant digits and non-finite values are
// written as null. Output is deterministic.

#include <string>
#include <vector>

#include "gali/curves.hpp"
#include "gali/ruled.hpp"
#include "gali/surfaces.hpp"

namespace gali {

struct CurveAnalysis {
  std::string name;
  std::vector<double> s_samples;
  std::vector<double> kappa_samples;
  std::vector<double> tau_samples;
  CurveClass curve_class;
};

/// Frenet apparatus on `grid` interior points plus the classification.
CurveAnalysis analyze_curve(const CurveG3& c, int grid = 64, const ClassifyOptions& opt = {});

struct SurfaceAnalysis {
  std::string name;
  int grid_s = 0;
  int grid_t = 0;
  std::vector<double> s_nodes;
  std::vector<double> t_nodes;
  /// Row-major by s then t; NaN at singular nodes.
  std::vector<double> K_samples;
  std::vector<double> H_samples;
  std::vector<double> w_samples;
  int singular_count = 0;
  double K_mean = 0.0;
  double K_spread = 0.0;
  double H_maxabs = 0.0;
};

SurfaceAnalysis analyze_surface(const SurfaceG3& surf, int ns, int nt,
                                const SurfaceTolerances& tol = {});

/// Rounds to 9 significant digits.
double round9(double v);

std::string to_json(const CurveClass& c);
std::string to_json(const CurveAnalysis& a);
std::string to_json(const SurfaceAnalysis& a);
std::string to_json(const GeodesicPath& g);
std::string to_json(const VerificationReport& r);
std::string to_json(const SurfaceVerdict& v);

}  // namespace gali
