// gali: command-line front end over the G3 kernel.
//
// Exit codes: 0 ok, 1 verdict mismatch, 2 parse or usage error, 3 missing
// name, 4 numeric failure, 5 unwritable output path.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gali/export.hpp"
#include "gali/report_json.hpp"
#include "gali/ruled.hpp"
#include "gali/scene.hpp"

namespace {

using namespace gali;

enum Exit : int {
  kOk = 0,
  kMismatch = 1,
  kParse = 2,
  kMissingName = 3,
  kNumeric = 4,
  kUnwritable = 5,
};

struct ExitWith {
  int code;
  std::string message;
};

struct Config {
  std::string command;
  std::string scene;
  std::string name;
  std::string surface;
  std::string curve;
  std::string kind;
  std::string theorem;
  std::string expect;
  std::string grid;
  std::vector<double> t_range;
  std::optional<double> tol;
  std::uint64_t seed = 42;
  std::string out;
  bool json = false;
  std::vector<double> start;
  double slope = 1.0;
  double length = 1.0;
  double step = 1e-3;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

RuledGrid ruled_grid(const Config& c) {
  RuledGrid g;
  if (!c.grid.empty()) {
    static const std::regex re(R"(^(\d{1,6})x(\d{1,6})$)");
    std::smatch m;
    if (!std::regex_match(c.grid, m, re)) throw ExitWith{kParse, "--grid expects NSxNT"};
    g.ns = std::stoi(m[1]);
    g.nt = std::stoi(m[2]);
    if (g.ns < 2 || g.nt < 2) throw ExitWith{kParse, "--grid needs at least 2x2 nodes"};
  }
  if (!c.t_range.empty()) {
    if (!(c.t_range[0] < c.t_range[1])) throw ExitWith{kParse, "--t-range needs LO < HI"};
    g.t_range = {c.t_range[0], c.t_range[1]};
  }
  return g;
}

double default_tol(const Config& c) {
  if (c.tol) return *c.tol;
  if (const char* env = std::getenv("GALI_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw ExitWith{kParse, std::string("GALI_TOL is not a positive number: ") + env};
    }
    return v;
  }
  return VerifyOptions{}.tol;
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions o;
  o.grid = ruled_grid(c);
  o.tol = default_tol(c);
  return o;
}

Scene load(const Config& c) {
  try {
    return load_scene(c.scene);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ExitWith{kParse, e.what()};
  }
}

const std::string& pick(const std::string& a, const std::string& b) { return a.empty() ? b : a; }

SurfaceG3 surface_named(const Scene& sc, const std::string& name) {
  if (name.empty()) throw ExitWith{kParse, "a surface name is required (--surface)"};
  const SurfaceDef* d = sc.find_surface(name);
  if (!d) throw ExitWith{kMissingName, "no surface named '" + name + "' in the scene"};
  return SurfaceG3::from_def(*d);
}

CurveG3 curve_named(const Scene& sc, const std::string& name) {
  if (name.empty()) throw ExitWith{kParse, "a curve name is required (--curve)"};
  const CurveDef* d = sc.find_curve(name);
  if (!d) throw ExitWith{kMissingName, "no curve named '" + name + "' in the scene"};
  return CurveG3::from_def(*d);
}

std::shared_ptr<const GeodesicPath> geodesic(const Config& c, const Scene& sc,
                                              const SurfaceG3& surf) {
  if (!c.curve.empty()) {
    CurveG3 curve = curve_named(sc, c.curve);
    return std::make_shared<const GeodesicPath>(geodesic_along_curve(surf, curve, c.step));
  }
  std::array<double, 2> p{surf.domain_s().mid(), surf.domain_t().mid()};
  if (!c.start.empty()) p = {c.start[0], c.start[1]};
  return std::make_shared<const GeodesicPath>(
      integrate_geodesic(surf, p, {1.0, c.slope}, c.length, c.step));
}

RuledKind kind_of(const std::string& k) {
  if (k.empty() || k == "normal") return RuledKind::NormalSurface;
  if (k == "binormal") return RuledKind::BinormalSurface;
  throw ExitWith{kParse, "--kind must be normal or binormal"};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void emit_json(const Config& c, const std::string& json) {
  if (!c.out.empty()) write_text_file(c.out, json);
  if (c.json) std::cout << json;
}

int check_expect(const std::string& expect, std::string_view verdict,
                 std::initializer_list<std::pair<const char*, const char*>> table) {
  if (expect.empty()) return kOk;
  for (const auto& [flag, label] : table) {
    if (expect == flag) return verdict == label ? kOk : kMismatch;
  }
  throw ExitWith{kParse, "unknown --expect value '" + expect + "'"};
}

int cmd_analyze_curve(const Config& c) {
  Scene sc = load(c);
  CurveG3 curve = curve_named(sc, pick(c.name, c.curve));
  CurveAnalysis a = analyze_curve(curve);
  emit_json(c, to_json(a));
  if (!c.json) {
    std::cout << "curve " << a.name << ": " << to_string(a.curve_class.kind)
              << " kappa_mean " << fmt("%.9g", a.curve_class.kappa_mean) << " tau_mean "
              << fmt("%.9g", a.curve_class.tau_mean) << "\n";
  }
  return kOk;
}

int cmd_analyze_surface(const Config& c) {
  Scene sc = load(c);
  SurfaceG3 surf = surface_named(sc, pick(c.name, c.surface));
  RuledGrid g = ruled_grid(c);
  SurfaceAnalysis a = analyze_surface(surf, g.ns, g.nt);
  emit_json(c, to_json(a));
  if (!c.json) {
    std::cout << "surface " << a.name << ": K_mean " << fmt("%.9g", a.K_mean) << " K_spread "
              << fmt("%.3g", a.K_spread) << " H_maxabs " << fmt("%.3g", a.H_maxabs)
              << " singular " << a.singular_count << "\n";
  }
  return kOk;
}

int cmd_geodesic(const Config& c) {
  Scene sc = load(c);
  SurfaceG3 surf = surface_named(sc, pick(c.surface, c.name));
  auto path = geodesic(c, sc, surf);
  emit_json(c, to_json(*path));
  if (!c.json) {
    std::cout << "geodesic on " << surf.name() << ": " << path->samples().size()
              << " samples, max |k_g| " << fmt("%.3g", path->max_geodesic_curvature())
              << (path->left_domain() ? ", left the domain" : "") << "\n";
  }
  return kOk;
}

void print_report(const VerificationReport& r) {
  std::cout << to_string(r.kind) << ": verdict " << to_string(r.verdict) << ", K_mean "
            << fmt("%.6f", r.K_mean) << ", K_spread " << fmt("%.3g", r.K_spread)
            << ", H_maxabs " << fmt("%.3g", r.H_maxabs) << ", tau_mean "
            << fmt("%.6f", r.tau_mean) << ", base " << to_string(r.base_class.kind) << "\n";
}

int cmd_ruled(const Config& c) {
  Scene sc = load(c);
  SurfaceG3 surf = surface_named(sc, pick(c.surface, c.name));
  RuledKind kind = kind_of(c.kind);
  VerifyOptions opt = verify_options(c);
  auto path = geodesic(c, sc, surf);
  VerificationReport r = verify_proposition(surf, path, kind, opt);
  if (ends_with(c.out, ".obj") || ends_with(c.out, ".csv")) {
    SurfaceG3 phi = build_ruled(surf, path, kind, opt.grid.t_range);
    write_text_file(c.out, ends_with(c.out, ".obj") ? obj_text(phi, opt.grid.ns, opt.grid.nt)
                                                   : csv_text(phi, opt.grid.ns, opt.grid.nt));
    if (c.json) std::cout << to_json(r);
  } else {
    emit_json(c, to_json(r));
  }
  if (!c.json) print_report(r);
  return kOk;
}

int cmd_verify(const Config& c) {
  Scene sc = load(c);
  SurfaceG3 surf = surface_named(sc, pick(c.surface, c.name));
  VerifyOptions opt = verify_options(c);
  if (c.theorem == "prop32" || c.theorem == "prop42") {
    RuledKind kind =
        c.theorem == "prop32" ? RuledKind::NormalSurface : RuledKind::BinormalSurface;
    VerificationReport r = verify_proposition(surf, geodesic(c, sc, surf), kind, opt);
    emit_json(c, to_json(r));
    if (!c.json) print_report(r);
    return check_expect(c.expect, to_string(r.verdict),
                        {{"const-negative", "ConstNegativeMinimal"}, {"flat", "FlatMinimal"},
                         {"fail", "Fail"}});
  }
  if (c.theorem == "thm11" || c.theorem == "thm12") {
    ClassifySurfaceOptions co;
    co.kinds = {c.theorem == "thm11" ? RuledKind::NormalSurface : RuledKind::BinormalSurface};
    co.verify = opt;
    co.step = c.step;
    co.length = c.length;
    SurfaceVerdict v = classify_surface(surf, default_probes(surf, c.seed), co);
    emit_json(c, to_json(v));
    if (!c.json) {
      std::cout << c.theorem << " on " << surf.name() << ": " << to_string(v.verdict);
      if (v.r) std::cout << ", r " << fmt("%.6f", *v.r);
      std::cout << "\n";
    }
    return check_expect(c.expect, to_string(v.verdict),
                        {{"plane", "Plane"}, {"hyperboloid", "CircularHyperboloid"},
                         {"inconclusive", "Inconclusive"}});
  }
  throw ExitWith{kParse, "--theorem must be one of prop32, prop42, thm11, thm12"};
}

int cmd_classify(const Config& c) {
  Scene sc = load(c);
  SurfaceG3 surf = surface_named(sc, pick(c.surface, c.name));
  ClassifySurfaceOptions co;
  co.verify = verify_options(c);
  co.step = c.step;
  co.length = c.length;
  if (!c.kind.empty()) co.kinds = {kind_of(c.kind)};
  SurfaceVerdict v = classify_surface(surf, default_probes(surf, c.seed), co);
  emit_json(c, to_json(v));
  if (!c.json) {
    std::cout << "surface " << surf.name() << ": " << to_string(v.verdict);
    if (v.r) std::cout << ", r " << fmt("%.6f", *v.r);
    std::cout << "\n";
  }
  return check_expect(c.expect, to_string(v.verdict),
                      {{"plane", "Plane"}, {"hyperboloid", "CircularHyperboloid"},
                       {"inconclusive", "Inconclusive"}});
}

int cmd_export(const Config& c) {
  if (c.out.empty()) throw ExitWith{kParse, "export needs --out PATH ending in .obj or .csv"};
  bool obj = ends_with(c.out, ".obj");
  if (!obj && !ends_with(c.out, ".csv")) {
    throw ExitWith{kParse, "--out must end in .obj or .csv"};
  }
  Scene sc = load(c);
  SurfaceG3 surf = surface_named(sc, pick(c.surface, c.name));
  RuledGrid g = ruled_grid(c);
  if (!c.kind.empty()) {
    surf = build_ruled(surf, geodesic(c, sc, surf), kind_of(c.kind), g.t_range);
  }
  write_text_file(c.out, obj ? obj_text(surf, g.ns, g.nt) : csv_text(surf, g.ns, g.nt));
  if (!c.json) std::cout << "wrote " << c.out << "\n";
  return kOk;
}

int run(const Config& c) {
  if (c.command == "analyze-curve") return cmd_analyze_curve(c);
  if (c.command == "analyze-surface") return cmd_analyze_surface(c);
  if (c.command == "geodesic") return cmd_geodesic(c);
  if (c.command == "ruled") return cmd_ruled(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "classify") return cmd_classify(c);
  return cmd_export(c);
}

}  // namespace

int main(int argc, char** argv) {
  Config c;
  CLI::App app{"Differential geometry of curves and ruled surfaces in Galilean 3-space"};
  app.add_option("command", c.command, "Command to run")
      ->required()
      ->check(CLI::IsMember({"analyze-curve", "analyze-surface", "geodesic", "ruled", "verify",
                             "classify", "export"}));
  app.add_option("--scene", c.scene, "Scene file")->required();
  app.add_option("--name", c.name, "Object name");
  app.add_option("--surface", c.surface, "Surface name");
  app.add_option("--curve", c.curve, "Curve name (a geodesic of the surface for ruled commands)");
  app.add_option("--kind", c.kind, "normal or binormal");
  app.add_option("--theorem", c.theorem, "prop32, prop42, thm11 or thm12");
  app.add_option("--expect", c.expect,
                 "const-negative, flat, fail, plane, hyperboloid or inconclusive");
  app.add_option("--grid", c.grid, "Grid NSxNT, default 50x21");
  app.add_option("--t-range", c.t_range, "Ruling parameter range LO HI")->expected(2);
  app.add_option("--tol", c.tol, "Tolerance (overrides GALI_TOL)");
  app.add_option("--seed", c.seed, "Seed for probe jitter");
  app.add_option("--out", c.out, "Output path");
  app.add_flag("--json", c.json, "Print JSON to stdout");
  app.add_option("--start", c.start, "Geodesic start S T when no --curve is given")->expected(2);
  app.add_option("--slope", c.slope, "Geodesic direction dt/ds, default 1");
  app.add_option("--length", c.length, "Geodesic length, default 1");
  app.add_option("--step", c.step, "RK4 step, default 1e-3")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    return run(c);
  } catch (const ExitWith& e) {
    std::cerr << "gali: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "gali: " << c.scene << ": " << e.what() << "\n";
    return kParse;
  } catch (const DuplicateName& e) {
    std::cerr << "gali: " << c.scene << ": " << e.what() << "\n";
    return kParse;
  } catch (const BadDomain& e) {
    std::cerr << "gali: " << e.what() << "\n";
    return kParse;
  } catch (const IoError& e) {
    std::cerr << "gali: " << e.what() << "\n";
    return kUnwritable;
  } catch (const Error& e) {
    std::cerr << "gali: " << e.what() << "\n";
    return kNumeric;
  }
}
