#pragma once

#include <functional>

namespace sagt {

/// Composite Simpson rule with an even number of intervals.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

struct QuadratureResult {
  double value = 0.0;
  int points = 0;        // intervals of the accepted estimate
  double defect = 0.0;   // relative change against the previous halving
  bool converged = false;
};

/// Doubles the interval count from `intervals` until two successive Simpson
/// estimates agree to `rel_tol` (relative), or `max_intervals` is reached.
QuadratureResult simpson_converged(const std::function<double(double)>& f, double a, double b, int intervals,
                                   double rel_tol, int max_intervals = 1 << 16);

}  // namespace sagt
