#include "sagt/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include <Eigen/Eigenvalues>

#include "sagt/counterdiabatic.hpp"
#include "sagt/kernels.hpp"
#include "sagt/quadrature.hpp"

namespace sagt {
namespace {

kernels::SectorMatrix block_unitary(const BlockOperator& block, double dt) {
  const BlockOperator h = 0.5 * (block + block.adjoint());
  Eigen::SelfAdjointEigenSolver<BlockOperator> eig(h);
  const Eigen::Vector4cd phases = (-kI * dt * eig.eigenvalues().cast<Complex>()).array().exp();
  const BlockOperator u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  return embed_blocks(u, u);
}

double resolve_duration(const HamiltonianFamily& family, std::optional<double> duration) {
  if (duration) {
    if (!(*duration >= 0.0)) throw std::invalid_argument("duration must be non-negative");
    if (family.tau() && std::abs(*duration - *family.tau()) > 1e-12 * *family.tau()) {
      throw std::invalid_argument("duration differs from the tau the superadiabatic family was built for");
    }
    return *duration;
  }
  if (!family.tau()) throw std::invalid_argument("adiabatic family: evolution time must be given");
  return *family.tau();
}

void check_state(const StateVector& psi, Eigen::Index dim) {
  if (psi.size() != dim) {
    throw std::invalid_argument("state dimension " + std::to_string(psi.size()) + " does not match register dimension " +
                                std::to_string(dim));
  }
}

void check_steps(int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
}

}  // namespace

StateVector propagate(const HamiltonianFamily& family, const StateVector& psi0, int steps, std::optional<double> duration,
                      const StepObserver& observer) {
  check_steps(steps);
  check_state(psi0, family.dimension());
  const double total = resolve_duration(family, duration);
  const double dt = total / steps;
  const int sectors = family.sectors();

  StateVector psi = family.rotation() ? StateVector(family.rotation()->adjoint() * psi0) : psi0;
  std::span<Complex> view(psi.data(), static_cast<std::size_t>(psi.size()));
  if (observer) observer(0.0, psi);
  for (int k = 0; k < steps; ++k) {
    const double s_mid = (k + 0.5) / steps;
    const kernels::SectorMatrix u = block_unitary(family.block(s_mid), dt);
    kernels::apply_all_sectors(view, u, sectors);
    if (observer) observer(static_cast<double>(k + 1) / steps, psi);
  }
  if (family.rotation()) psi = (*family.rotation()) * psi;
  return psi;
}

StateVector propagate_reference(const std::function<Operator(double)>& hamiltonian, double duration,
                                const StateVector& psi0, int steps) {
  check_steps(steps);
  const double dt = duration / steps;
  StateVector psi = psi0;
  for (int k = 0; k < steps; ++k) {
    const Operator h = hamiltonian((k + 0.5) / steps);
    check_state(psi, h.rows());
    psi = unitary_step(h, dt) * psi;
  }
  return psi;
}

double fidelity(const StateVector& psi, const StateVector& phi) {
  if (psi.size() != phi.size()) throw std::invalid_argument("fidelity of states with different dimensions");
  const double norms = psi.squaredNorm() * phi.squaredNorm();
  if (!(norms > 0.0)) throw std::invalid_argument("fidelity of a zero vector");
  // Dividing out the norms keeps roundoff drift from pushing the value above 1.
  return std::clamp(std::norm(phi.dot(psi)) / norms, 0.0, 1.0);
}

double ground_manifold_overlap(const Schedule& schedule, int sectors, double s, const StateVector& frame_state) {
  const Eigen::Vector4d v0 = block_eigenvectors(schedule, s).col(0);
  const Operator p4 = (v0 * v0.transpose()).cast<Complex>();
  const kernels::SectorMatrix projector = embed_blocks(p4, p4);
  StateVector projected = frame_state;
  kernels::apply_all_sectors(std::span<Complex>(projected.data(), static_cast<std::size_t>(projected.size())), projector,
                             sectors);
  return projected.squaredNorm();
}

StateVector adiabatic_reference(const HamiltonianFamily& family, const StateVector& psi_in, double s,
                                std::optional<double> duration) {
  if (family.sectors() != 1) throw CapacityError("adiabatic_reference supports single-sector families only");
  require_unit_interval(s, "adiabatic_reference");
  if (psi_in.size() != 2) throw std::invalid_argument("input state must be a single qubit");
  const double total = duration ? *duration : family.tau().value_or(0.0);
  if (!duration && !family.tau()) throw std::invalid_argument("adiabatic family: evolution time must be given");

  const Eigen::Vector4d v0 = block_eigenvectors(family.schedule(), s).col(0);
  StateVector frame = StateVector::Zero(8);
  for (int i = 0; i < 4; ++i) {
    frame(kPlusBlockBasis[i]) = psi_in(0) * v0(i);
    frame(kMinusBlockBasis[i]) = psi_in(1) * v0(i);
  }
  double phase_integral = 0.0;
  if (s > 0.0) {
    const Schedule& schedule = family.schedule();
    const double omega = family.omega();
    phase_integral = simpson([&](double x) { return block_energies(schedule, x, omega)[0]; }, 0.0, s, 512);
  }
  frame *= std::exp(-kI * total * phase_integral);
  if (family.rotation()) frame = (*family.rotation()) * frame;
  return frame;
}

namespace {

struct Attempt {
  double fidelity = 0.0;
  double parity_drift = 0.0;
  double norm_defect = 0.0;
  std::vector<std::pair<double, double>> trace;
};

Attempt attempt(const HamiltonianFamily& family, const StateVector& psi0, const StateVector& target, int steps) {
  const int sectors = family.sectors();
  std::vector<std::uint64_t> masks{kernels::sector_mask(-1, sectors)};
  for (int k = 0; k < sectors; ++k) masks.push_back(kernels::sector_mask(k, sectors));
  std::vector<double> parity0;
  Attempt out;
  const int trace_every = std::max(1, steps / 20);
  int calls = 0;
  auto observer = [&](double s, const StateVector& frame) {
    std::span<const Complex> view(frame.data(), static_cast<std::size_t>(frame.size()));
    for (std::size_t m = 0; m < masks.size(); ++m) {
      const double p = kernels::z_parity_expectation(view, masks[m]);
      if (calls == 0) {
        parity0.push_back(p);
      } else {
        out.parity_drift = std::max(out.parity_drift, std::abs(p - parity0[m]));
      }
    }
    if (calls % trace_every == 0 || calls == steps) {
      out.trace.emplace_back(s, ground_manifold_overlap(family.schedule(), sectors, s, frame));
    }
    ++calls;
  };
  const StateVector final_state = propagate(family, psi0, steps, family.tau(), observer);
  out.fidelity = fidelity(final_state, target);
  out.norm_defect = std::abs(final_state.norm() - 1.0);
  return out;
}

RunRecord run(const std::optional<Operator>& gate, const RunConfig& config, const StateVector& psi_in) {
  if (!(config.tau_omega > 0.0)) throw std::invalid_argument("tau_omega must be positive");
  if (!(config.omega > 0.0)) throw std::invalid_argument("omega must be positive");
  check_steps(config.steps);
  const int sectors = config.sectors;
  const double tau = config.tau_omega / config.omega;

  HamiltonianFamily family = multi_sector_family(sectors, config.omega, config.schedule);
  if (gate) family = rotate_family(family, place_on_outputs(*gate, sectors));
  if (config.mode == Mode::superadiabatic) {
    family = superadiabatic_family(family, tau);
  } else {
    HamiltonianFamily::Parts parts = family.parts();
    parts.tau = tau;  // evolution time for the adiabatic run
    family = HamiltonianFamily(std::move(parts));
  }
  const StateVector in = psi_in / psi_in.norm();
  const StateVector psi0 = initial_state(in, sectors, gate);
  const StateVector target = target_state(in, sectors, gate);

  RunRecord record;
  record.sectors = sectors;
  record.schedule = config.schedule.name();
  record.tau_omega = config.tau_omega;
  record.omega = config.omega;
  record.mode = config.mode;
  record.gate = config.gate_name;

  int steps = config.steps;
  Attempt coarse = attempt(family, psi0, target, steps);
  Attempt fine;
  double defect = 0.0;
  for (int d = 0; d <= config.max_doublings; ++d) {
    fine = attempt(family, psi0, target, 2 * steps);
    steps *= 2;
    defect = std::abs(fine.fidelity - coarse.fidelity);
    if (defect <= kConvergenceTolerance) break;
    coarse = std::move(fine);
  }
  record.fidelity = fine.fidelity;
  record.ground_overlap_trace = std::move(fine.trace);
  record.step_count = steps;
  record.convergence_defect = defect;
  record.converged = defect <= kConvergenceTolerance;
  record.parity_drift = fine.parity_drift;
  record.norm_defect = fine.norm_defect;
  return record;
}

}  // namespace

RunRecord run_state_teleport(const RunConfig& config, const StateVector& psi_in) { return run(std::nullopt, config, psi_in); }

RunRecord run_gate_teleport(const Operator& gate, const RunConfig& config, const StateVector& psi_in) {
  if (gate.rows() != gate.cols()) throw std::invalid_argument("gate is not square");
  if (qubit_count(gate.rows()) != config.sectors) throw std::invalid_argument("gate arity does not match the sector count");
  const double defect = unitarity_defect(gate);
  if (defect > 1e-8) throw std::invalid_argument("gate is not unitary (defect " + std::to_string(defect) + ")");
  return run(gate, config, psi_in);
}

std::vector<RunRecord> run_batch(std::span<const RunJob> jobs) {
  std::vector<RunRecord> out(jobs.size());
  const auto count = static_cast<std::int64_t>(jobs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const RunJob& job = jobs[i];
    try {
      out[i] = job.gate ? run_gate_teleport(*job.gate, job.config, job.psi_in) : run_state_teleport(job.config, job.psi_in);
    } catch (...) {
#pragma omp critical(sagt_run_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<RunRecord> run_batch_serial(std::span<const RunJob> jobs) {
  std::vector<RunRecord> out;
  out.reserve(jobs.size());
  for (const RunJob& job : jobs) {
    out.push_back(job.gate ? run_gate_teleport(*job.gate, job.config, job.psi_in) : run_state_teleport(job.config, job.psi_in));
  }
  return out;
}

}  // namespace sagt
