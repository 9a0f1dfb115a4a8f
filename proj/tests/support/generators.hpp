#pragma once

// Seeded generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "gali/galgebra.hpp"

namespace gali::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  GVec3 vec(double r = 3.0) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }
  GVec3 isotropic(double r = 3.0) { return {0.0, uniform(-r, r), uniform(-r, r)}; }
  GVec3 non_isotropic(double r = 3.0) {
    double x = uniform(0.1, r);
    return {coin() ? x : -x, uniform(-r, r), uniform(-r, r)};
  }

  std::string bytes(int max_len) {
    std::string s(static_cast<std::size_t>(integer(0, max_len)), '\0');
    for (char& c : s) c = static_cast<char>(integer(0, 255));
    return s;
  }

  /// Random well-formed expression in s (and t when `with_t`).
  std::string expression(int depth, bool with_t) {
    if (depth <= 0 || integer(0, 3) == 0) {
      switch (integer(0, with_t ? 3 : 2)) {
        case 0:
          return "s";
        case 1: {
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.3g", uniform(0.1, 5.0));
          return buf;
        }
        case 2:
          return std::to_string(integer(1, 9));
        default:
          return "t";
      }
    }
    static const char* funcs[] = {"sin", "cos", "exp", "sinh", "cosh", "tan", "ln", "sqrt"};
    switch (integer(0, 6)) {
      case 0:
        return expression(depth - 1, with_t) + " + " + expression(depth - 1, with_t);
      case 1:
        return expression(depth - 1, with_t) + " - (" + expression(depth - 1, with_t) + ")";
      case 2:
        return "(" + expression(depth - 1, with_t) + ")*" + expression(depth - 1, with_t);
      case 3:
        return "(" + expression(depth - 1, with_t) + ")/(" + expression(depth - 1, with_t) + ")";
      case 4:
        return "(" + expression(depth - 1, with_t) + ")^" + std::to_string(integer(0, 4));
      case 5:
        return "-" + expression(depth - 1, with_t);
      default:
        return std::string(funcs[integer(0, 7)]) + "(" + expression(depth - 1, with_t) + ")";
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace gali::testing
