#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Dense>

#include "sagt/operators.hpp"

// Data-parallel state-vector kernels. Each OpenMP kernel has a serial twin
// with identical arithmetic order per amplitude group, kept as the test and
// benchmark reference.
namespace sagt::kernels {

using SectorMatrix = Eigen::Matrix<Complex, 8, 8>;

/// Groups below this count run on one thread.
inline constexpr std::int64_t kParallelThreshold = 1 << 11;

/// Applies an 8x8 operator to the three qubits of `sector` (0-based) in a
/// register of `sectors` three-qubit sectors, in place.
void apply_sector(std::span<Complex> state, const SectorMatrix& op, int sector, int sectors);
void apply_sector_serial(std::span<Complex> state, const SectorMatrix& op, int sector, int sectors);

/// Applies the same operator to every sector.
void apply_all_sectors(std::span<Complex> state, const SectorMatrix& op, int sectors);
void apply_all_sectors_serial(std::span<Complex> state, const SectorMatrix& op, int sectors);

/// <psi| Z...Z |psi> for the Z string selecting the basis bits in `mask`.
double z_parity_expectation(std::span<const Complex> state, std::uint64_t mask);
double z_parity_expectation_serial(std::span<const Complex> state, std::uint64_t mask);

/// Bit mask of the three qubits of a sector (0-based), or of all 3n qubits when sector < 0.
std::uint64_t sector_mask(int sector, int sectors);

}  // namespace sagt::kernels
