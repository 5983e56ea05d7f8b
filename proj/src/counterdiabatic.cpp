#include "sagt/counterdiabatic.hpp"

#include <string>

namespace sagt {
namespace {

void check_tau(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive, got " + std::to_string(tau));
}

}  // namespace

BlockOperator block_cd(const Schedule& schedule, double s, double tau) {
  check_tau(tau);
  const BlockMatrix v = block_eigenvectors(schedule, s);
  const BlockMatrix dv = block_eigenvector_derivatives(schedule, s);
  // sum_n |dv_n><v_n| = dV V^T, antisymmetric because V V^T = I. Keeping only
  // the antisymmetric part drops the finite-difference error that would
  // otherwise show up as a trace and a Hermiticity defect.
  const BlockMatrix raw = dv * v.transpose();
  const BlockMatrix a = 0.5 * (raw - raw.transpose());
  return (kI / tau) * a.cast<Complex>();
}

Operator sector_cd(const Schedule& schedule, double s, double tau) {
  const Operator b = block_cd(schedule, s, tau);
  return embed_blocks(b, b);
}

HamiltonianFamily superadiabatic_family(const HamiltonianFamily& base, double tau) {
  if (base.mode() != Mode::adiabatic) throw std::invalid_argument("superadiabatic_family expects an adiabatic base family");
  check_tau(tau);
  HamiltonianFamily::Parts parts = base.parts();
  const auto base_sector = parts.sector;
  const auto base_block = parts.block;
  const Schedule schedule = parts.schedule;
  parts.mode = Mode::superadiabatic;
  parts.tau = tau;
  parts.sector = [base_sector, schedule, tau](double s) -> Operator { return base_sector(s) + sector_cd(schedule, s, tau); };
  parts.block = [base_block, schedule, tau](double s) -> BlockOperator {
    return base_block(s) + block_cd(schedule, s, tau);
  };
  // The rotation stays on the family: H_SA(s, G) = G H_SA(s) G^dagger.
  return HamiltonianFamily(std::move(parts));
}

Operator cd_from_frame(const std::function<Operator(double)>& frame, double s, double tau, double h) {
  check_tau(tau);
  require_unit_interval(s, "cd_from_frame");
  const Operator f = frame(s);
  Operator df;
  if (s - h < 0.0) {
    df = (-3.0 * f + 4.0 * frame(s + h) - frame(s + 2 * h)) / (2 * h);
  } else if (s + h > 1.0) {
    df = (3.0 * f - 4.0 * frame(s - h) + frame(s - 2 * h)) / (2 * h);
  } else {
    df = (frame(s + h) - frame(s - h)) / (2 * h);
  }
  Operator sum = df * f.adjoint();
  for (Eigen::Index n = 0; n < f.cols(); ++n) {
    const Complex berry = df.col(n).dot(f.col(n));  // <d_s n|n>
    sum += berry * f.col(n) * f.col(n).adjoint();
  }
  return (kI / tau) * sum;
}

Operator sector_frame(const Schedule& schedule, double s) {
  const Operator v = block_eigenvectors(schedule, s).cast<Complex>();
  // Columns 0..3: plus-block levels, 4..7: minus-block levels.
  Operator frame = Operator::Zero(8, 8);
  for (int m = 0; m < 4; ++m) {
    for (int i = 0; i < 4; ++i) {
      frame(kPlusBlockBasis[i], m) = v(i, m);
      frame(kMinusBlockBasis[i], 4 + m) = v(i, m);
    }
  }
  return frame;
}

Operator register_frame(const Schedule& schedule, double s, int sectors) {
  const Operator one = sector_frame(schedule, s);
  std::vector<Operator> factors(sectors, one);
  return tensor(factors);
}

}  // namespace sagt
