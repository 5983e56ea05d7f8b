#include "sagt/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sagt {
namespace {

constexpr double kUnitaryTolerance = 1e-10;

Operator pad_sector(const Operator& term, int sector, int sectors) {
  const int before = 3 * sector;
  const int after = 3 * (sectors - sector - 1);
  std::vector<Operator> factors;
  if (before > 0) factors.push_back(identity(before));
  factors.push_back(term);
  if (after > 0) factors.push_back(identity(after));
  return tensor(factors);
}

StateVector kron(const StateVector& a, const StateVector& b) {
  StateVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

StateVector basis_qubit(int bit) {
  StateVector v = StateVector::Zero(2);
  v(bit) = 1.0;
  return v;
}

void check_sectors(int sectors) {
  if (sectors < 1) throw std::invalid_argument("sector count must be positive");
  if (3 * sectors > kMaxDenseQubits) {
    throw CapacityError(std::to_string(sectors) + " sectors need " + std::to_string(3 * sectors) +
                        " qubits; the dense limit is " + std::to_string(kMaxDenseQubits));
  }
}

// Sum over the basis of psi_in of psi_in[j] * (x)_k sector_state(bit_k(j)).
StateVector assemble(const StateVector& psi_in, int sectors, const std::function<StateVector(int)>& sector_state) {
  check_sectors(sectors);
  if (psi_in.size() != (Eigen::Index{1} << sectors)) {
    throw std::invalid_argument("input state has dimension " + std::to_string(psi_in.size()) + ", expected " +
                                std::to_string(1 << sectors));
  }
  StateVector out = StateVector::Zero(Eigen::Index{1} << (3 * sectors));
  for (Eigen::Index j = 0; j < psi_in.size(); ++j) {
    if (psi_in(j) == Complex{}) continue;
    StateVector term = sector_state(static_cast<int>((j >> (sectors - 1)) & 1));
    for (int k = 1; k < sectors; ++k) term = kron(term, sector_state(static_cast<int>((j >> (sectors - 1 - k)) & 1)));
    out += psi_in(j) * term;
  }
  return out;
}

}  // namespace

std::string_view mode_label(Mode mode) { return mode == Mode::adiabatic ? "adiabatic" : "superadiabatic"; }

Mode parse_mode(std::string_view text) {
  if (text == "adiabatic") return Mode::adiabatic;
  if (text == "superadiabatic") return Mode::superadiabatic;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected adiabatic or superadiabatic)");
}

HamiltonianFamily::HamiltonianFamily(Parts parts) : parts_(std::move(parts)) {
  check_sectors(parts_.sectors);
  if (!(parts_.omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (parts_.mode == Mode::superadiabatic && !(parts_.tau && *parts_.tau > 0.0)) {
    throw std::invalid_argument("superadiabatic family requires a positive tau");
  }
  if (!parts_.sector || !parts_.block) throw std::invalid_argument("family is missing its sector term");
  if (parts_.rotation) {
    const Operator& g = *parts_.rotation;
    if (g.rows() != dimension() || g.cols() != dimension()) throw std::invalid_argument("rotation does not match the register");
    const double defect = unitarity_defect(g);
    if (defect > kUnitaryTolerance) throw std::invalid_argument("rotation is not unitary (defect " + std::to_string(defect) + ")");
  }
}

Operator HamiltonianFamily::sector_hamiltonian(double s) const {
  require_unit_interval(s, "family evaluator");
  return parts_.sector(s);
}

BlockOperator HamiltonianFamily::block(double s) const {
  require_unit_interval(s, "family evaluator");
  return parts_.block(s);
}

Operator HamiltonianFamily::operator()(double s) const {
  const Operator term = sector_hamiltonian(s);
  Operator h = Operator::Zero(dimension(), dimension());
  for (int k = 0; k < parts_.sectors; ++k) h += pad_sector(term, k, parts_.sectors);
  if (parts_.rotation) h = (*parts_.rotation) * h * parts_.rotation->adjoint();
  return h;
}

Operator initial_hamiltonian(double omega) { return -omega * (pauli_string("1XX") + pauli_string("1ZZ")); }

Operator final_hamiltonian(double omega) { return -omega * (pauli_string("XX1") + pauli_string("ZZ1")); }

HamiltonianFamily single_sector_family(double omega, const Schedule& schedule) {
  return multi_sector_family(1, omega, schedule);
}

HamiltonianFamily multi_sector_family(int sectors, double omega, const Schedule& schedule) {
  check_sectors(sectors);
  const Operator hi = initial_hamiltonian(omega);
  const Operator hf = final_hamiltonian(omega);
  HamiltonianFamily::Parts parts{sectors, omega, schedule, Mode::adiabatic, std::nullopt, std::nullopt, {}, {}};
  parts.sector = [hi, hf, schedule](double s) -> Operator { return schedule.eta_i(s) * hi + schedule.eta_f(s) * hf; };
  parts.block = [omega, schedule](double s) -> BlockOperator {
    return block_hamiltonian(schedule, s, omega).cast<Complex>();
  };
  return HamiltonianFamily(std::move(parts));
}

HamiltonianFamily rotate_family(const HamiltonianFamily& family, const Operator& rotation) {
  if (rotation.rows() != family.dimension() || rotation.cols() != family.dimension()) {
    throw std::invalid_argument("rotation does not match the family register");
  }
  const double defect = unitarity_defect(rotation);
  if (defect > kUnitaryTolerance) throw std::invalid_argument("rotation is not unitary (defect " + std::to_string(defect) + ")");
  HamiltonianFamily::Parts parts = family.parts();
  parts.rotation = family.rotation() ? Operator(rotation * (*family.rotation())) : rotation;
  return HamiltonianFamily(std::move(parts));
}

std::vector<int> output_qubits(int sectors) {
  std::vector<int> out;
  for (int k = 0; k < sectors; ++k) out.push_back(3 * k + 2);
  return out;
}

Operator place_on_outputs(const Operator& gate, int sectors) {
  check_sectors(sectors);
  if (qubit_count(gate.rows()) != sectors) throw std::invalid_argument("gate arity does not match the sector count");
  const auto outputs = output_qubits(sectors);
  return embed_on_qubits(gate, outputs, 3 * sectors);
}

ParitySet parity(ParityAxis axis, std::optional<int> sector, int sectors, const std::optional<Operator>& rotation) {
  check_sectors(sectors);
  if (sector && (*sector < 1 || *sector > sectors)) {
    throw std::invalid_argument("parity sector " + std::to_string(*sector) + " outside 1.." + std::to_string(sectors));
  }
  const char p = axis == ParityAxis::z ? 'Z' : 'X';
  std::string spec(3 * sectors, '1');
  for (int k = 0; k < sectors; ++k) {
    if (sector && *sector != k + 1) continue;
    spec[3 * k] = spec[3 * k + 1] = spec[3 * k + 2] = p;
  }
  Operator op = pauli_string(spec);
  if (rotation) {
    if (rotation->rows() != op.rows()) throw std::invalid_argument("parity rotation does not match the register");
    op = (*rotation) * op * rotation->adjoint();
  }
  return {axis, sector, rotation, std::move(op)};
}

StateVector bell_state() {
  StateVector v = StateVector::Zero(4);
  v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  return v;
}

StateVector initial_state(const StateVector& psi_in, int sectors, const std::optional<Operator>& gate) {
  const StateVector bell = bell_state();
  StateVector out = assemble(psi_in, sectors, [&](int bit) { return kron(basis_qubit(bit), bell); });
  if (gate) out = place_on_outputs(*gate, sectors) * out;
  return out;
}

StateVector target_state(const StateVector& psi_in, int sectors, const std::optional<Operator>& gate) {
  const StateVector bell = bell_state();
  StateVector out = assemble(psi_in, sectors, [&](int bit) { return kron(bell, basis_qubit(bit)); });
  if (gate) out = place_on_outputs(*gate, sectors) * out;
  return out;
}

std::vector<int> interleaved_to_contiguous(int sectors) {
  check_sectors(sectors);
  std::vector<int> perm(3 * sectors);
  for (int q = 0; q < 3 * sectors; ++q) {
    const int role = q / sectors;
    const int sector = q % sectors;
    perm[q] = 3 * sector + role;
  }
  return perm;
}

}  // namespace sagt
