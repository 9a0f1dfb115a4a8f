#include "gali/jets.hpp"

#include <array>
#include <cmath>
#include <vector>

namespace gali {

Jet1 jet_eval_1d(const Expr& expr, double s0, int order) {
  if (order < 0 || order > kMaxJetOrder) throw Error("jet order must be in [0, 3]");
  if (expr.uses_t()) throw Error("one-variable jet requested for an expression using t");
  using J = Taylor<double, kMaxJetOrder>;
  J s = J::variable(s0);
  J r = evaluate(expr, s, J(0.0));
  Jet1 out{r.derivative(0), r.derivative(1), r.derivative(2), r.derivative(3)};
  if (order < 3) out.d3 = 0.0;
  if (order < 2) out.d2 = 0.0;
  if (order < 1) out.d1 = 0.0;
  return out;
}

SurfaceSeries surface_series(const Expr& expr, double s0, double t0) {
  using Inner = Taylor<double, 2>;
  SurfaceSeries s = SurfaceSeries::variable(Inner(s0));
  SurfaceSeries t(Inner::variable(t0));
  return evaluate(expr, s, t);
}

Jet2 to_jet2(const SurfaceSeries& r) {
  // c[i][j] is the coefficient of h_s^i h_t^j.
  Jet2 j;
  j.value = r.c[0].c[0];
  j.d_s = r.c[1].c[0];
  j.d_t = r.c[0].c[1];
  j.d_ss = 2.0 * r.c[2].c[0];
  j.d_st = r.c[1].c[1];
  j.d_tt = 2.0 * r.c[0].c[2];
  j.d_sss = 6.0 * r.c[3].c[0];
  j.d_sst = 2.0 * r.c[2].c[1];
  return j;
}

Jet2 jet_eval_2d(const Expr& expr, double s0, double t0) {
  return to_jet2(surface_series(expr, s0, t0));
}

namespace {

struct Stencil {
  std::vector<std::pair<int, double>> taps;  // offset in units of h, weight
  int power;                                 // divide by h^power
};

const Stencil& central(int order) {
  static const std::array<Stencil, 4> stencils{{
      {{{0, 1.0}}, 0},
      {{{-1, -0.5}, {1, 0.5}}, 1},
      {{{-1, 1.0}, {0, -2.0}, {1, 1.0}}, 2},
      {{{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}}, 3},
  }};
  return stencils.at(static_cast<std::size_t>(order));
}

double tensor_difference(const ScalarField& f, std::span<const double> point,
                         std::span<const int> orders, double h) {
  std::size_t dim = point.size();
  std::vector<double> x(point.begin(), point.end());
  double scale = 1.0;
  for (std::size_t i = 0; i < dim; ++i) scale *= std::pow(h, central(orders[i]).power);

  double sum = 0.0;
  std::vector<std::size_t> idx(dim, 0);
  for (;;) {
    double weight = 1.0;
    for (std::size_t i = 0; i < dim; ++i) {
      const auto& [offset, w] = central(orders[i]).taps[idx[i]];
      x[i] = point[i] + offset * h;
      weight *= w;
    }
    sum += weight * f(x);
    std::size_t i = 0;
    for (; i < dim; ++i) {
      if (++idx[i] < central(orders[i]).taps.size()) break;
      idx[i] = 0;
    }
    if (i == dim) break;
  }
  return sum / scale;
}

}  // namespace

double fd_partial(const ScalarField& f, std::span<const double> point,
                  std::span<const int> orders, double h) {
  if (orders.size() != point.size()) throw Error("fd_partial: multi-index and point differ in size");
  for (int o : orders) {
    if (o < 0 || o > 3) throw Error("fd_partial: per-coordinate order must be in [0, 3]");
  }
  double d1 = tensor_difference(f, point, orders, h);
  double d2 = tensor_difference(f, point, orders, 0.5 * h);
  double d4 = tensor_difference(f, point, orders, 0.25 * h);
  double r1 = (4.0 * d2 - d1) / 3.0;
  double r2 = (4.0 * d4 - d2) / 3.0;
  return (16.0 * r2 - r1) / 15.0;
}

double default_fd_step(int total_order) noexcept {
  switch (total_order) {
    case 0:
    case 1:
      return 1e-4;
    case 2:
      return 1e-3;
    default:
      return 1e-2;
  }
}

double fd_derivative(const std::function<double(double)>& f, double s0, int order, double h) {
  std::array<double, 1> p{s0};
  std::array<int, 1> o{order};
  return fd_partial([&](std::span<const double> x) { return f(x[0]); }, p, o, h);
}

double fd_derivative(const std::function<double(double)>& f, double s0, int order) {
  return fd_derivative(f, s0, order, default_fd_step(order));
}

double fd_partial2(const std::function<double(double, double)>& f, double s0, double t0,
                   int order_s, int order_t) {
  std::array<double, 2> p{s0, t0};
  std::array<int, 2> o{order_s, order_t};
  return fd_partial([&](std::span<const double> x) { return f(x[0], x[1]); }, p, o,
                    default_fd_step(order_s + order_t));
}

}  // namespace gali
