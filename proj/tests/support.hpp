#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "sagt/operators.hpp"
#include "sagt/schedules.hpp"

namespace sagt::test {

inline double max_abs(const Operator& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

// Dense complex Gaussian matrix, not unitary.
inline Operator random_like(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  Operator a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = Complex(n(rng), n(rng));
  return a;
}

inline StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline StateVector basis_state(int qubits, Eigen::Index index) {
  StateVector v = StateVector::Zero(Eigen::Index{1} << qubits);
  v(index) = 1.0;
  return v;
}

// Quintic smootherstep ramp from 0 to 0.5 on [0, 0.4], flat on [0.4, 0.6],
// then up to 1 on [0.6, 1]. Everything built on it is frozen around s = 0.5.
inline Schedule plateau_schedule() {
  auto ramp = [](double x) { return x * x * x * (10.0 - 15.0 * x + 6.0 * x * x); };
  auto dramp = [](double x) { return 30.0 * x * x * (1.0 - x) * (1.0 - x); };
  auto p = [ramp](double s) {
    if (s < 0.4) return 0.5 * ramp(s / 0.4);
    if (s <= 0.6) return 0.5;
    return 0.5 + 0.5 * ramp((s - 0.6) / 0.4);
  };
  auto dp = [dramp](double s) {
    if (s < 0.4) return 0.5 * dramp(s / 0.4) / 0.4;
    if (s <= 0.6) return 0.0;
    return 0.5 * dramp((s - 0.6) / 0.4) / 0.4;
  };
  return Schedule(
      "plateau", [p](double s) { return 1.0 - p(s); }, p, [dp](double s) { return -dp(s); }, dp);
}

}  // namespace sagt::test
