#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sagt/model.hpp"

namespace sagt {

/// Called with s and the state in the family's unrotated frame (G^dagger psi),
/// once at s = 0 and after every step.
using StepObserver = std::function<void(double s, const StateVector& frame_state)>;

/// Midpoint piecewise-exponential propagation over `steps` equal steps:
///   psi <- exp(-i H((k + 1/2)/steps) dt) psi,  dt = duration/steps.
/// Each step exponentiates the 4x4 parity block and applies the resulting 8x8
/// sector unitary to every sector; a rotation G is applied once on each side.
/// `duration` defaults to the family's tau and is required for adiabatic families.
StateVector propagate(const HamiltonianFamily& family, const StateVector& psi0, int steps,
                      std::optional<double> duration = std::nullopt, const StepObserver& observer = {});

/// Same midpoint rule on the dense full-register operator via unitary_step.
StateVector propagate_reference(const std::function<Operator(double)>& hamiltonian, double duration,
                                const StateVector& psi0, int steps);

/// |<phi|psi>|^2.
double fidelity(const StateVector& psi, const StateVector& phi);

/// <psi|P_0(s)|psi> with P_0 the ground-manifold projector of the adiabatic
/// Hamiltonian; `frame_state` is in the unrotated frame.
double ground_manifold_overlap(const Schedule& schedule, int sectors, double s, const StateVector& frame_state);

/// Instantaneous ground-manifold state reached from initial_state(psi_in) under
/// perfectly adiabatic transport, including the dynamical phase
/// exp(-i duration * int_0^s E_0). Single-sector families only.
StateVector adiabatic_reference(const HamiltonianFamily& family, const StateVector& psi_in, double s,
                                std::optional<double> duration = std::nullopt);

struct RunConfig {
  int sectors = 1;
  Schedule schedule = builtin_schedule(ScheduleKind::linear);
  double tau_omega = 1.0;
  double omega = 1.0;
  Mode mode = Mode::superadiabatic;
  int steps = 2000;
  int max_doublings = 6;
  std::string gate_name;
};

struct RunRecord {
  // config echo
  int sectors = 1;
  std::string schedule;
  double tau_omega = 0.0;
  double omega = 1.0;
  Mode mode = Mode::superadiabatic;
  std::string gate;

  double fidelity = 0.0;
  std::vector<std::pair<double, double>> ground_overlap_trace;
  int step_count = 0;
  double convergence_defect = 0.0;
  bool converged = false;
  /// max over the trajectory and over the global and per-sector Z parities of |<Pi_z>(s) - <Pi_z>(0)|.
  double parity_drift = 0.0;
  double norm_defect = 0.0;
};

/// Accepted runs satisfy |F(steps) - F(2 steps)| <= this.
inline constexpr double kConvergenceTolerance = 1e-8;

RunRecord run_state_teleport(const RunConfig& config, const StateVector& psi_in);

/// `gate` acts on the n outputs; throws std::invalid_argument if it is not unitary to 1e-8.
RunRecord run_gate_teleport(const Operator& gate, const RunConfig& config, const StateVector& psi_in);

struct RunJob {
  RunConfig config;
  StateVector psi_in;
  std::optional<Operator> gate;
};

/// Independent runs, distributed over OpenMP threads; results in job order.
std::vector<RunRecord> run_batch(std::span<const RunJob> jobs);
std::vector<RunRecord> run_batch_serial(std::span<const RunJob> jobs);

}  // namespace sagt
