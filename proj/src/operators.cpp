#include "sagt/operators.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace sagt {

int qubit_count(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two >= 2");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

Operator identity(int qubits) {
  if (qubits < 0) throw std::invalid_argument("negative qubit count");
  if (qubits > kMaxDenseQubits) throw CapacityError("register of " + std::to_string(qubits) + " qubits exceeds dense limit");
  return Operator::Identity(Eigen::Index{1} << qubits, Eigen::Index{1} << qubits);
}

Operator pauli(char symbol) {
  Operator p = Operator::Zero(2, 2);
  switch (symbol) {
    case '1':
    case 'I':
      p(0, 0) = 1.0;
      p(1, 1) = 1.0;
      break;
    case 'X':
      p(0, 1) = 1.0;
      p(1, 0) = 1.0;
      break;
    case 'Y':
      p(0, 1) = -kI;
      p(1, 0) = kI;
      break;
    case 'Z':
      p(0, 0) = 1.0;
      p(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument(std::string("invalid Pauli symbol '") + symbol + "'");
  }
  return p;
}

Operator tensor(std::span<const Operator> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor of an empty factor list");
  Eigen::Index total = 1;
  for (const auto& f : factors) {
    if (f.rows() != f.cols() || f.rows() == 0) throw std::invalid_argument("tensor factor is not square");
    total *= f.rows();
    if (total > (Eigen::Index{1} << kMaxDenseQubits)) throw CapacityError("tensor product exceeds dense limit");
  }
  Operator result = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const Operator& f = factors[k];
    Operator next(result.rows() * f.rows(), result.cols() * f.cols());
    for (Eigen::Index i = 0; i < result.rows(); ++i) {
      for (Eigen::Index j = 0; j < result.cols(); ++j) {
        next.block(i * f.rows(), j * f.cols(), f.rows(), f.cols()) = result(i, j) * f;
      }
    }
    result = std::move(next);
  }
  return result;
}

Operator tensor(std::initializer_list<Operator> factors) {
  return tensor(std::span<const Operator>(factors.begin(), factors.size()));
}

Operator pauli_string(std::string_view spec) {
  if (spec.empty()) throw std::invalid_argument("empty Pauli string");
  std::vector<Operator> factors;
  factors.reserve(spec.size());
  for (char c : spec) factors.push_back(pauli(c));
  return tensor(factors);
}

Operator commutator(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("commutator of operators with different dimensions");
  return a * b - b * a;
}

double frobenius_norm(const Operator& a) { return a.norm(); }

double hermiticity_defect(const Operator& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("operator is not square");
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Operator& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("operator is not square");
  return (u.adjoint() * u - Operator::Identity(u.rows(), u.cols())).norm();
}

Operator unitary_step(const Operator& h, double dt) {
  const double defect = hermiticity_defect(h);
  if (defect > kHermitianTolerance) {
    throw std::invalid_argument("unitary_step: operator is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  // Symmetrize so the eigensolver sees an exactly Hermitian input.
  const Operator hs = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<Operator> eig(hs);
  const Eigen::VectorXcd phases = (-kI * dt * eig.eigenvalues().cast<Complex>()).array().exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

Operator embed_on_qubits(const Operator& gate, std::span<const int> positions, int total_qubits) {
  const int k = qubit_count(gate.rows());
  if (gate.cols() != gate.rows()) throw std::invalid_argument("gate is not square");
  if (static_cast<int>(positions.size()) != k) throw std::invalid_argument("gate arity does not match the number of target qubits");
  if (total_qubits > kMaxDenseQubits) throw CapacityError("register exceeds dense limit");
  Eigen::Index target_mask = 0;
  for (int p : positions) {
    if (p < 0 || p >= total_qubits) throw std::invalid_argument("target qubit out of range");
    const Eigen::Index bit = Eigen::Index{1} << (total_qubits - 1 - p);
    if (target_mask & bit) throw std::invalid_argument("duplicate target qubit");
    target_mask |= bit;
  }
  const Eigen::Index dim = Eigen::Index{1} << total_qubits;
  auto local_index = [&](Eigen::Index full) {
    Eigen::Index local = 0;
    for (int j = 0; j < k; ++j) {
      const Eigen::Index bit = (full >> (total_qubits - 1 - positions[j])) & 1;
      local |= bit << (k - 1 - j);
    }
    return local;
  };
  Operator out = Operator::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const Eigen::Index lr = local_index(r);
    const Eigen::Index rest = r & ~target_mask;
    for (Eigen::Index c = 0; c < dim; ++c) {
      if ((c & ~target_mask) != rest) continue;
      out(r, c) = gate(lr, local_index(c));
    }
  }
  return out;
}

Operator qubit_permutation(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1 || n > kMaxDenseQubits) throw std::invalid_argument("invalid permutation size");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Operator out = Operator::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    Eigen::Index j = 0;
    for (int q = 0; q < n; ++q) {
      const Eigen::Index bit = (i >> (n - 1 - q)) & 1;
      j |= bit << (n - 1 - perm[q]);
    }
    out(j, i) = 1.0;
  }
  return out;
}

Operator permute_qubits(const Operator& a, std::span<const int> perm) {
  const Operator p = qubit_permutation(perm);
  if (p.rows() != a.rows()) throw std::invalid_argument("permutation size does not match operator");
  return p * a * p.transpose();
}

}  // namespace sagt
