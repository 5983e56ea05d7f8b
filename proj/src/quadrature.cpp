#include "sagt/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sagt {

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals < 2 || intervals % 2 != 0) throw std::invalid_argument("Simpson rule needs an even interval count >= 2");
  const double h = (b - a) / intervals;
  double odd = 0.0;
  double even = 0.0;
  for (int k = 1; k < intervals; ++k) {
    const double x = a + k * h;
    (k % 2 ? odd : even) += f(x);
  }
  return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

QuadratureResult simpson_converged(const std::function<double(double)>& f, double a, double b, int intervals,
                                   double rel_tol, int max_intervals) {
  int n = std::max(2, intervals + intervals % 2);
  double prev = simpson(f, a, b, n);
  QuadratureResult result{prev, n, 0.0, false};
  while (n < max_intervals) {
    n *= 2;
    const double next = simpson(f, a, b, n);
    const double scale = std::max(std::abs(next), 1e-300);
    result = {next, n, std::abs(next - prev) / scale, false};
    if (result.defect <= rel_tol) {
      result.converged = true;
      break;
    }
    prev = next;
  }
  return result;
}

}  // namespace sagt
