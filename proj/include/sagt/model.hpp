#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "sagt/operators.hpp"
#include "sagt/schedules.hpp"
#include "sagt/spectral.hpp"

namespace sagt {

enum class Mode { adiabatic, superadiabatic };

std::string_view mode_label(Mode mode);
Mode parse_mode(std::string_view text);

/// Teleportation Hamiltonian over n three-qubit sectors, s in [0, 1] -> Operator.
///
/// Sector k (0-based) owns qubits 3k (input), 3k+1 (resource), 3k+2 (output).
/// Every sector carries the same Hamiltonian, so a family is fully described
/// by one sector term plus an optional register-wide rotation G:
///   H(s) = G [ sum_k 1 x ... x H_sector(s) x ... x 1 ] G^dagger.
/// The sector term is available both as a dense 8x8 operator and as its 4x4
/// parity block; the propagator works with the block.
class HamiltonianFamily {
 public:
  using SectorFn = std::function<Operator(double)>;
  using BlockFn = std::function<BlockOperator(double)>;

  struct Parts {
    int sectors = 1;
    double omega = 1.0;
    Schedule schedule;
    Mode mode = Mode::adiabatic;
    std::optional<double> tau;
    std::optional<Operator> rotation;
    SectorFn sector;
    BlockFn block;
  };

  explicit HamiltonianFamily(Parts parts);

  int sectors() const noexcept { return parts_.sectors; }
  int register_size() const noexcept { return 3 * parts_.sectors; }
  Eigen::Index dimension() const noexcept { return Eigen::Index{1} << register_size(); }
  double omega() const noexcept { return parts_.omega; }
  const Schedule& schedule() const noexcept { return parts_.schedule; }
  Mode mode() const noexcept { return parts_.mode; }
  std::optional<double> tau() const noexcept { return parts_.tau; }
  const std::optional<Operator>& rotation() const noexcept { return parts_.rotation; }

  /// Full-register operator at s.
  Operator operator()(double s) const;
  /// Unrotated 8x8 sector term at s.
  Operator sector_hamiltonian(double s) const;
  /// Unrotated 4x4 parity block of the sector term at s (both blocks are equal).
  BlockOperator block(double s) const;

  const Parts& parts() const noexcept { return parts_; }

 private:
  Parts parts_;
};

/// -omega(1XX + 1ZZ) and -omega(XX1 + ZZ1).
Operator initial_hamiltonian(double omega);
Operator final_hamiltonian(double omega);

HamiltonianFamily single_sector_family(double omega, const Schedule& schedule);

/// Throws CapacityError when 3n exceeds the dense register limit.
HamiltonianFamily multi_sector_family(int sectors, double omega, const Schedule& schedule);

/// G H(s) G^dagger; G must be a unitary on the whole register.
HamiltonianFamily rotate_family(const HamiltonianFamily& family, const Operator& rotation);

/// Qubit indices of the sector outputs: 2, 5, 8, ...
std::vector<int> output_qubits(int sectors);

/// Places an n-qubit gate on the outputs of n sectors (gate qubit j -> output of sector j).
Operator place_on_outputs(const Operator& gate, int sectors);

enum class ParityAxis { x, z };

struct ParitySet {
  ParityAxis axis = ParityAxis::z;
  std::optional<int> sector;  // 1-based; nullopt for the global parity
  std::optional<Operator> rotation;
  Operator op;
};

/// Product of Z (or X) over all 3n qubits, or over the three qubits of sector k,
/// conjugated by `rotation` when given.
ParitySet parity(ParityAxis axis, std::optional<int> sector, int sectors, const std::optional<Operator>& rotation = {});

/// (|00> + |11>)/sqrt(2).
StateVector bell_state();

/// psi_in on the input qubits, a Bell pair on each (resource, output) pair; with
/// a gate U the pairs are rotated by U acting on the outputs.
StateVector initial_state(const StateVector& psi_in, int sectors, const std::optional<Operator>& gate = {});

/// Bell pair on each (input, resource) pair, U psi_in on the outputs.
StateVector target_state(const StateVector& psi_in, int sectors, const std::optional<Operator>& gate = {});

/// Interleaved labelling used for the two-qubit protocol diagram: qubits
/// 1..n are inputs, n+1..2n resources, 2n+1..3n outputs, and sector k is
/// {k, n+k, 2n+k} (for n = 2: odd sector {1,3,5}, even sector {2,4,6}).
/// Returns perm with perm[q] = contiguous index of interleaved qubit q (both 0-based).
std::vector<int> interleaved_to_contiguous(int sectors);

}  // namespace sagt
