#pragma once

// Exact derivatives of expressions through truncated Taylor arithmetic, and
// an independent central-difference oracle used by tests to check them.

#include <functional>
#include <span>

#include "gali/expr.hpp"
#include "gali/taylor.hpp"

namespace gali {

/// Value and derivatives up to order 3 in one variable.
struct Jet1 {
  double d0 = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;

  double operator[](int k) const noexcept {
    switch (k) {
      case 0: return d0;
      case 1: return d1;
      case 2: return d2;
      default: return d3;
    }
  }
};

/// Partials in (s, t) to total order 2, plus d_sss and d_sst.
struct Jet2 {
  double value = 0.0;
  double d_s = 0.0;
  double d_t = 0.0;
  double d_ss = 0.0;
  double d_st = 0.0;
  double d_tt = 0.0;
  double d_sss = 0.0;
  double d_sst = 0.0;
};

inline constexpr int kMaxJetOrder = 3;

/// `expr` must not use t. order in [0, 3]; slots above it are zero.
Jet1 jet_eval_1d(const Expr& expr, double s0, int order = kMaxJetOrder);

Jet2 jet_eval_2d(const Expr& expr, double s0, double t0);

/// Mixed series: outer variable s to order 3, inner variable t to order 2.
using SurfaceSeries = Taylor<Taylor<double, 2>, 3>;

SurfaceSeries surface_series(const Expr& expr, double s0, double t0);

Jet2 to_jet2(const SurfaceSeries& series);

using ScalarField = std::function<double(std::span<const double>)>;

/// Tensor-product central differences of second order with two Richardson
/// steps (h, h/2, h/4), error O(h^6). orders[i] in [0, 3] per coordinate.
double fd_partial(const ScalarField& f, std::span<const double> point,
                  std::span<const int> orders, double h);

/// Step keeping the oracle's rounding error below its truncation error for a
/// derivative of the given total order, starting from 1e-4 for order one.
double default_fd_step(int total_order) noexcept;

/// Convenience overloads for one and two variables.
double fd_derivative(const std::function<double(double)>& f, double s0, int order, double h);
double fd_derivative(const std::function<double(double)>& f, double s0, int order);
double fd_partial2(const std::function<double(double, double)>& f, double s0, double t0,
                   int order_s, int order_t);

}  // namespace gali
