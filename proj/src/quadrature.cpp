#include "eigenent/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "eigenent/errors.hpp"

namespace eigenent {

namespace {

// Kronrod nodes x_i (descending) with K15 weights; odd-indexed nodes are the
// Gauss-Legendre 7-point nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double k15 = kKronrod[7] * fc;
  double g7 = kGauss[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[static_cast<std::size_t>(i)];
    const double pair = f(center - dx) + f(center + dx);
    k15 += kKronrod[static_cast<std::size_t>(i)] * pair;
    if (i % 2 == 1) g7 += kGauss[static_cast<std::size_t>(i / 2)] * pair;
  }
  return {a, b, k15 * half, std::abs((k15 - g7) * half)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_intervals) {
  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod(f, a, b));
  double total_error = panels.top().error;
  int count = 1;
  while (total_error > abs_tol) {
    if (count >= max_intervals) {
      throw QuadratureError("adaptive quadrature did not reach tolerance " + std::to_string(abs_tol) +
                                " (estimate " + std::to_string(total_error) + ")",
                            total_error);
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }
  // Sum in a fixed (left-to-right) order.
  std::vector<Panel> all;
  all.reserve(panels.size());
  double err = 0.0;
  while (!panels.empty()) {
    all.push_back(panels.top());
    err += panels.top().error;
    panels.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  double value = 0.0;
  for (const Panel& p : all) value += p.value;
  return {value, err, count};
}

}  // namespace eigenent
