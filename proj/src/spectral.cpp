#include "sagt/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace sagt {

BlockMatrix block_hamiltonian(const Schedule& schedule, double s, double omega) {
  require_unit_interval(s, "block_hamiltonian");
  const double a = schedule.eta_i(s);
  const double b = schedule.eta_f(s);
  BlockMatrix h;
  // clang-format off
  h << -(a + b),   -a,      0.0,     -b,
       -a,          b - a,  -b,       0.0,
        0.0,       -b,       a + b,  -a,
       -b,          0.0,    -a,       a - b;
  // clang-format on
  return omega * h;
}

std::array<double, 4> block_energies(const Schedule& schedule, double s, double omega) {
  const double e = 2.0 * omega * chi(schedule, s);
  return {-e, 0.0, 0.0, e};
}

double gap(const Schedule& schedule, double s, double omega) { return 2.0 * omega * chi(schedule, s); }

BlockMatrix block_eigenvectors(const Schedule& schedule, double s) {
  const double c = chi(schedule, s);
  const double a = schedule.eta_i(s);
  const double b = schedule.eta_f(s);
  BlockMatrix v;
  v.col(0) << (a + c) * (c + b), a * (c + a), a * b, b * (c + b);
  v.col(1) << a - b, -a, 0.0, b;
  v.col(2) << -a * b, b * b, a * a - a * b + b * b, a * a;
  v.col(3) << -a * b, b * (c + b), -(c + b) * (c + a), a * (c + a);
  for (int m = 0; m < 4; ++m) {
    const double norm = v.col(m).norm();
    if (norm < 1e-300) throw std::domain_error("block eigenvector degenerates at s = " + std::to_string(s));
    v.col(m) /= norm;
  }
  return v;
}

BlockMatrix block_eigenvector_derivatives(const Schedule& schedule, double s, double step) {
  require_unit_interval(s, "block_eigenvector_derivatives");
  const double h = step;
  auto f = [&](double x) { return block_eigenvectors(schedule, x); };
  if (s - h < 0.0) return (-3.0 * f(s) + 4.0 * f(s + h) - f(s + 2 * h)) / (2 * h);
  if (s + h > 1.0) return (3.0 * f(s) - 4.0 * f(s - h) + f(s - 2 * h)) / (2 * h);
  return (f(s + h) - f(s - h)) / (2 * h);
}

SpectralBlock spectral_block(const Schedule& schedule, double s, double omega) {
  return {s, block_energies(schedule, s, omega), block_eigenvectors(schedule, s),
          block_eigenvector_derivatives(schedule, s)};
}

Operator embed_blocks(const Operator& plus, const Operator& minus) {
  if (plus.rows() != 4 || plus.cols() != 4 || minus.rows() != 4 || minus.cols() != 4) {
    throw std::invalid_argument("embed_blocks expects two 4x4 blocks");
  }
  Operator out = Operator::Zero(8, 8);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out(kPlusBlockBasis[i], kPlusBlockBasis[j]) = plus(i, j);
      out(kMinusBlockBasis[i], kMinusBlockBasis[j]) = minus(i, j);
    }
  }
  return out;
}

Operator extract_block(const Operator& op, const std::array<int, 4>& basis) {
  if (op.rows() != 8 || op.cols() != 8) throw std::invalid_argument("extract_block expects an 8x8 operator");
  Operator out(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = op(basis[i], basis[j]);
  return out;
}

}  // namespace sagt
