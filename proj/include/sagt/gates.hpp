#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "sagt/operators.hpp"

namespace sagt {

Operator hadamard_gate();
Operator t_gate();
Operator cnot_gate();
/// Controlled-phase, diag(1, 1, 1, -1).
Operator cz_gate();
Operator toffoli_gate();

/// Haar-distributed unitary: QR of a seeded complex Gaussian matrix with the
/// phases of R's diagonal folded into Q.
Operator random_unitary(Eigen::Index dim, std::uint64_t seed);

/// Normalized complex Gaussian vector.
StateVector random_state(Eigen::Index dim, std::uint64_t seed);

/// hadamard, t, x, z, cnot, cz, toffoli; nullopt for anything else.
std::optional<Operator> named_gate(std::string_view name);

}  // namespace sagt
