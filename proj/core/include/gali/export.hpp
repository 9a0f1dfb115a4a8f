#pragma once

// Grid exports of a surface over its parameter domain, nodes row-major by s
// then t.
//
// OBJ: one "v %.9g %.9g %.9g" line per node, then each grid quad split into
// two triangles "f a b c" with 1-based indices.
// CSV: header "s,t,K,H" and one row per node, 9 significant digits.

#include <string>

#include "gali/surfaces.hpp"

namespace gali {

std::string obj_text(const SurfaceG3& surf, int ns, int nt);

/// Throws the error of fundamental_data at the first failing node.
std::string csv_text(const SurfaceG3& surf, int ns, int nt, const SurfaceTolerances& tol = {});

/// Throws IoError when the path cannot be written.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace gali
