#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace sagt {

using Complex = std::complex<double>;

/// Dense operator on an N-qubit register. Basis index bit (N-1-q) holds qubit q,
/// so qubit 0 (the leftmost Pauli character) is the most significant bit.
using Operator = Eigen::MatrixXcd;

/// Amplitude vector of dimension 2^N, same ordering as Operator.
using StateVector = Eigen::VectorXcd;

/// Raised when a request exceeds what the dense representation supports.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest register handled by the dense builders.
inline constexpr int kMaxDenseQubits = 10;

/// Tolerance used when an input operator must be Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;

inline constexpr Complex kI{0.0, 1.0};

/// Number of qubits for a dimension; throws std::invalid_argument if dim is not 2^N, N >= 1.
int qubit_count(Eigen::Index dim);

Operator identity(int qubits);

/// Single-qubit operator for one of '1' (or 'I'), 'X', 'Y', 'Z'.
Operator pauli(char symbol);

/// Kronecker product; the first factor acts on the most significant qubits.
Operator tensor(std::span<const Operator> factors);
Operator tensor(std::initializer_list<Operator> factors);

/// N-fold product of single-qubit Paulis, e.g. "1XX".
Operator pauli_string(std::string_view spec);

Operator commutator(const Operator& a, const Operator& b);

/// sqrt(Tr[A^dagger A]).
double frobenius_norm(const Operator& a);

/// max |A - A^dagger| over entries.
double hermiticity_defect(const Operator& a);

/// ||U^dagger U - I||_F.
double unitarity_defect(const Operator& u);

/// exp(-i H dt) with hbar = 1, via the spectral decomposition of H.
Operator unitary_step(const Operator& h, double dt);

/// Embeds a k-qubit gate acting on `positions` (qubit indices, gate's first
/// qubit first) of a register of `total_qubits`, identity elsewhere.
Operator embed_on_qubits(const Operator& gate, std::span<const int> positions, int total_qubits);

/// Permutation matrix sending qubit q to qubit perm[q].
Operator qubit_permutation(std::span<const int> perm);

/// Relabels the qubits an operator acts on: returns P A P^T with P = qubit_permutation(perm).
Operator permute_qubits(const Operator& a, std::span<const int> perm);

}  // namespace sagt
