#include "sagt/gates.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/QR>

namespace sagt {

Operator hadamard_gate() {
  Operator h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::numbers::sqrt2;
}

Operator t_gate() {
  Operator t = Operator::Identity(2, 2);
  t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
  return t;
}

Operator cnot_gate() {
  Operator c = Operator::Zero(4, 4);
  c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1.0;
  return c;
}

Operator cz_gate() {
  Operator c = Operator::Identity(4, 4);
  c(3, 3) = -1.0;
  return c;
}

Operator toffoli_gate() {
  Operator t = Operator::Identity(8, 8);
  t(6, 6) = t(7, 7) = 0.0;
  t(6, 7) = t(7, 6) = 1.0;
  return t;
}

Operator random_unitary(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Operator z(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) z(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Operator> qr(z);
  Operator q = qr.householderQ();
  const Operator r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

StateVector random_state(Eigen::Index dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

std::optional<Operator> named_gate(std::string_view name) {
  if (name == "hadamard" || name == "h") return hadamard_gate();
  if (name == "t") return t_gate();
  if (name == "x") return pauli('X');
  if (name == "z") return pauli('Z');
  if (name == "cnot") return cnot_gate();
  if (name == "cz") return cz_gate();
  if (name == "toffoli") return toffoli_gate();
  return std::nullopt;
}

}  // namespace sagt
