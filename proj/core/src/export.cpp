#include "gali/export.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "gali/ruled.hpp"

namespace gali {

namespace {

void append(std::string& out, const char* fmt, double a, double b, double c) {
  char buf[96];
  int n = std::snprintf(buf, sizeof buf, fmt, a, b, c);
  out.append(buf, static_cast<std::size_t>(n));
}

}  // namespace

std::string obj_text(const SurfaceG3& surf, int ns, int nt) {
  std::vector<double> s_nodes = grid_nodes(surf.domain_s(), ns);
  std::vector<double> t_nodes = grid_nodes(surf.domain_t(), nt);
  std::string out;
  for (double s : s_nodes) {
    for (double t : t_nodes) {
      GVec3 p = surf.point(s, t);
      append(out, "v %.9g %.9g %.9g\n", p.x1, p.x2, p.x3);
    }
  }
  auto face = [&out](int a, int b, int c) {
    out += "f " + std::to_string(a) + ' ' + std::to_string(b) + ' ' + std::to_string(c) + '\n';
  };
  auto idx = [nt](int i, int j) { return i * nt + j + 1; };
  for (int i = 0; i + 1 < ns; ++i) {
    for (int j = 0; j + 1 < nt; ++j) {
      face(idx(i, j), idx(i + 1, j), idx(i + 1, j + 1));
      face(idx(i, j), idx(i + 1, j + 1), idx(i, j + 1));
    }
  }
  return out;
}

std::string csv_text(const SurfaceG3& surf, int ns, int nt, const SurfaceTolerances& tol) {
  std::vector<double> s_nodes = grid_nodes(surf.domain_s(), ns);
  std::vector<double> t_nodes = grid_nodes(surf.domain_t(), nt);
  std::string out = "s,t,K,H\n";
  for (double s : s_nodes) {
    for (double t : t_nodes) {
      FundamentalData fd = fundamental_data(surf, s, t, tol);
      char buf[128];
      int n = std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g\n", s, t, fd.K, fd.H);
      out.append(buf, static_cast<std::size_t>(n));
    }
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace gali
