#pragma once

#include <functional>

#include "sagt/model.hpp"

namespace sagt {

/// Counter-diabatic term of one parity block, i (hbar/tau) sum_n |d_s v_n><v_n|
/// over the smooth frame of block_eigenvectors. Equals i/tau times a real
/// antisymmetric matrix.
BlockOperator block_cd(const Schedule& schedule, double s, double tau);

/// 8x8 sector counter-diabatic term (the block embedded in both parity sectors).
Operator sector_cd(const Schedule& schedule, double s, double tau);

/// H_SA = H_0 + H_CD for an adiabatic family. Multi-sector families get the
/// sum of padded sector terms; a rotated family gets G H_SA G^dagger.
HamiltonianFamily superadiabatic_family(const HamiltonianFamily& base, double tau);

/// Counter-diabatic operator from an arbitrary smooth eigenframe (columns are
/// eigenvectors), including the Berry-connection term:
///   i (hbar/tau) sum_n ( |d_s n><n| + <d_s n|n> |n><n| ).
/// Derivatives by central differences with step h (one-sided near 0 and 1).
/// This is the frame-level construction; block_cd is its specialization.
Operator cd_from_frame(const std::function<Operator(double)>& frame, double s, double tau, double h = 1e-6);

/// Full-register eigenframe of an unrotated n-sector family: Kronecker product
/// of the embedded block frames (8x8 per sector).
Operator sector_frame(const Schedule& schedule, double s);
Operator register_frame(const Schedule& schedule, double s, int sectors);

}  // namespace sagt
