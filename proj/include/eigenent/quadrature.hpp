#pragma once

#include <functional>

namespace eigenent {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) quadrature on [a, b]. The interval
// with the largest |K15 - G7| is bisected until the summed estimate drops
// below abs_tol. Throws QuadratureError if max_intervals is exhausted.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-9, int max_intervals = 4000);

}  // namespace eigenent
