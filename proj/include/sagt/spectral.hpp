#pragma once

#include <array>

#include <Eigen/Dense>

#include "sagt/operators.hpp"
#include "sagt/schedules.hpp"

namespace sagt {

using BlockMatrix = Eigen::Matrix4d;
using BlockOperator = Eigen::Matrix4cd;

/// Computational-basis indices of the Pi_z = +1 block, in block order
/// {|000>, |011>, |101>, |110>}.
inline constexpr std::array<int, 4> kPlusBlockBasis{0b000, 0b011, 0b101, 0b110};
/// Pi_x image of kPlusBlockBasis: {|111>, |100>, |010>, |001>}.
inline constexpr std::array<int, 4> kMinusBlockBasis{0b111, 0b100, 0b010, 0b001};

/// One parity block of the single-sector Hamiltonian (both blocks are equal).
BlockMatrix block_hamiltonian(const Schedule& schedule, double s, double omega);

/// (-2 omega chi, 0, 0, 2 omega chi).
std::array<double, 4> block_energies(const Schedule& schedule, double s, double omega);

double gap(const Schedule& schedule, double s, double omega);

/// Smooth orthonormal eigenframe of a block; column m pairs with block_energies()[m].
///
/// Columns are the closed-form eigenvectors with denominators cleared:
///   v0 = ((ei+chi)(chi+ef), ei(chi+ei), ei ef, ef(chi+ef))
///   v1 = (ei-ef, -ei, 0, ef)
///   v2 = (-ei ef, ef^2, ei^2-ei ef+ef^2, ei^2)   [Gram-Schmidt of E2 against v1]
///   v3 = (-ei ef, ef(chi+ef), -(chi+ef)(chi+ei), ei(chi+ei))
/// Using chi - ef = ei^2/(chi + ef) and chi - ei = ef^2/(chi + ei), none of them
/// vanish at s = 0 or s = 1, so the frame is continuous on the closed interval.
BlockMatrix block_eigenvectors(const Schedule& schedule, double s);

/// d/ds of block_eigenvectors by second-order finite differences (one-sided
/// within `step` of an endpoint).
BlockMatrix block_eigenvector_derivatives(const Schedule& schedule, double s, double step = 1e-6);

struct SpectralBlock {
  double s = 0.0;
  std::array<double, 4> energies{};
  BlockMatrix eigenvectors;
  BlockMatrix derivatives;
};

SpectralBlock spectral_block(const Schedule& schedule, double s, double omega);

/// Assembles the 8x8 three-qubit operator whose Pi_z = +1 block (in
/// kPlusBlockBasis order) is `plus` and whose Pi_z = -1 block (in
/// kMinusBlockBasis order) is `minus`.
Operator embed_blocks(const Operator& plus, const Operator& minus);

/// Extracts the 4x4 block of an 8x8 operator on the given basis indices.
Operator extract_block(const Operator& op, const std::array<int, 4>& basis);

}  // namespace sagt
