// Acceptance checks AC1..AC10. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "sagt/cost.hpp"
#include "sagt/counterdiabatic.hpp"
#include "sagt/evolution.hpp"
#include "sagt/gates.hpp"
#include "sagt/model.hpp"

using namespace sagt;

namespace {

// Pinned tolerances.
constexpr double kSpectrumTol = 1e-8;
constexpr double kCommutatorTol = 1e-8;
constexpr double kCovarianceTol = 1e-8;
constexpr double kFidelityFloor = 1.0 - 1e-6;
constexpr double kStepHalvingTol = 1e-8;
constexpr double kAdiabaticFastCeiling = 0.99;
constexpr double kAdiabaticSlowFloor = 1.0 - 1e-3;
constexpr double kClosedFormRelTol = 1e-6;
constexpr double kTrigAdiabaticRelTol = 1e-8;
constexpr double kRotationCostTol = 1e-10;
constexpr double kSlowLimitRelTol = 1e-2;
constexpr double kScalingRelTol = 1e-6;
constexpr double kParityTol = 1e-8;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<Schedule> schedules() {
  return {builtin_schedule(ScheduleKind::linear), builtin_schedule(ScheduleKind::trigonometric),
          builtin_schedule(ScheduleKind::exponential)};
}

std::vector<double> s_grid(int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = static_cast<double>(i) / (points - 1);
  return g;
}

double max_abs(const Operator& a) { return a.cwiseAbs().maxCoeff(); }

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << x;
  return os.str();
}

std::string fix(double x, int digits = 10) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

RunConfig run_config(int sectors, const Schedule& schedule, double tau_omega, Mode mode) {
  RunConfig c;
  c.sectors = sectors;
  c.schedule = schedule;
  c.tau_omega = tau_omega;
  c.mode = mode;
  return c;
}

Outcome ac1_spectrum() {
  double worst = 0.0;
  for (double omega : {1.0, 1.7}) {
    for (const Schedule& sch : schedules()) {
      const HamiltonianFamily h = single_sector_family(omega, sch);
      for (double s : s_grid(101)) {
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Operator>(h(s), Eigen::EigenvaluesOnly).eigenvalues();
        const double e = 2.0 * omega * chi(sch, s);
        const double expected[8] = {-e, -e, 0, 0, 0, 0, e, e};
        for (int k = 0; k < 8; ++k) worst = std::max(worst, std::abs(ev(k) - expected[k]));
      }
    }
  }
  return {worst <= kSpectrumTol, "max |eig - law| = " + sci(worst)};
}

Outcome ac2_parity_commutators() {
  const Operator pz = pauli_string("ZZZ");
  const Operator px = pauli_string("XXX");
  double worst = 0.0;
  for (const Schedule& sch : schedules()) {
    for (double tw : {0.1, 1.0, 10.0}) {
      const HamiltonianFamily sa = superadiabatic_family(single_sector_family(1.0, sch), tw);
      for (double s : s_grid(51)) {
        const Operator h = sa(s);
        worst = std::max({worst, frobenius_norm(commutator(h, pz)), frobenius_norm(commutator(h, px))});
      }
    }
  }
  return {worst <= kCommutatorTol, "max commutator norm = " + sci(worst)};
}

Outcome ac3_rotation_covariance() {
  // Two independent routes per unitary: the rotated family's H_SA against
  // G H_SA G^dagger, and against H_0(s, G) plus the counter-diabatic term
  // differentiated directly from the rotated eigenframe.
  const auto all = schedules();
  double conj = 0.0;
  double frame = 0.0;
  for (int r = 0; r < 10; ++r) {
    const int sectors = r < 5 ? 1 : 2;
    const Operator g = place_on_outputs(random_unitary(Eigen::Index{1} << sectors, 9000 + r), sectors);
    const Schedule& sch = all[r % 3];
    const double tau = r % 2 == 0 ? 0.3 : 3.0;
    const HamiltonianFamily base = multi_sector_family(sectors, 1.0, sch);
    const HamiltonianFamily rotated = rotate_family(base, g);
    const HamiltonianFamily from_rotated = superadiabatic_family(rotated, tau);
    const HamiltonianFamily plain = superadiabatic_family(base, tau);
    auto rotated_frame = [&](double x) -> Operator { return g * register_frame(sch, x, sectors); };
    for (double s : s_grid(sectors == 1 ? 21 : 6)) {
      const Operator a = from_rotated(s);
      conj = std::max(conj, max_abs(a - g * plain(s) * g.adjoint()));
      frame = std::max(frame, max_abs(a - rotated(s) - cd_from_frame(rotated_frame, s, tau)));
    }
  }
  const double worst = std::max(conj, frame);
  return {worst <= kCovarianceTol, "conjugation " + sci(conj) + ", rotated-frame route " + sci(frame)};
}

std::vector<RunRecord> sweep_records;

Outcome ac4_superadiabatic() {
  std::vector<RunJob> jobs;
  for (int n : {1, 2}) {
    for (const Schedule& sch : schedules()) {
      for (double tw : {0.1, 0.5, 1.0, 5.0, 20.0}) {
        for (int k = 0; k < 5; ++k) {
          jobs.push_back({run_config(n, sch, tw, Mode::superadiabatic), random_state(Eigen::Index{1} << n, 100 * n + k), {}});
        }
      }
    }
  }
  sweep_records = run_batch(jobs);
  double worst_f = 1.0;
  double worst_defect = 0.0;
  bool converged = true;
  for (const RunRecord& r : sweep_records) {
    worst_f = std::min(worst_f, r.fidelity);
    worst_defect = std::max(worst_defect, r.convergence_defect);
    converged = converged && r.converged;
  }
  const bool pass = worst_f >= kFidelityFloor && worst_defect <= kStepHalvingTol && converged;
  return {pass, std::to_string(sweep_records.size()) + " runs, min F = " + fix(worst_f, 12) +
                    ", max step-halving defect = " + sci(worst_defect)};
}

Outcome ac5_adiabatic() {
  const Schedule trig = builtin_schedule(ScheduleKind::trigonometric);
  const StateVector psi = random_state(2, 55);
  const double fast = run_state_teleport(run_config(1, trig, 0.5, Mode::adiabatic), psi).fidelity;
  std::vector<double> f;
  bool converged = true;
  for (double tw : {5.0, 20.0, 50.0, 200.0}) {
    const RunRecord r = run_state_teleport(run_config(1, trig, tw, Mode::adiabatic), psi);
    f.push_back(r.fidelity);
    converged = converged && r.converged;
  }
  const bool monotone = std::is_sorted(f.begin(), f.end());
  const bool pass = fast < kAdiabaticFastCeiling && f.back() >= kAdiabaticSlowFloor && monotone && converged;
  return {pass, "F(0.5) = " + fix(fast, 6) + "; F(5, 20, 50, 200) = " + fix(f[0], 6) + ", " + fix(f[1], 6) + ", " +
                    fix(f[2], 6) + ", " + fix(f[3], 6)};
}

Outcome ac6_gates() {
  const Schedule trig = builtin_schedule(ScheduleKind::trigonometric);
  struct Case {
    const char* name;
    Operator gate;
  };
  const std::vector<Case> cases{{"hadamard", hadamard_gate()}, {"t", t_gate()}, {"cnot", cnot_gate()},
                                {"cz", cz_gate()},             {"toffoli", toffoli_gate()}};
  std::string detail;
  bool pass = true;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const int n = qubit_count(cases[i].gate.rows());
    RunConfig c = run_config(n, trig, 1.0, Mode::superadiabatic);
    c.gate_name = cases[i].name;
    const RunRecord r = run_gate_teleport(cases[i].gate, c, random_state(cases[i].gate.rows(), 600 + i));
    pass = pass && r.fidelity >= kFidelityFloor && r.converged;
    detail += std::string(i ? ", " : "") + cases[i].name + " " + fix(r.fidelity, 10);
  }
  return {pass, detail};
}

Outcome ac7_cost_identities() {
  double closed = 0.0;
  for (const Schedule& sch : schedules()) {
    for (double tw : {0.1, 0.5, 1.0, 5.0, 20.0, 100.0}) {
      const double direct = cost_numeric(superadiabatic_family(single_sector_family(1.0, sch), tw)).value;
      const double formula = cost_closed_form(sch, tw, 1.0).value;
      closed = std::max(closed, std::abs(formula - direct) / direct);
    }
  }
  const double trig = cost_numeric(single_sector_family(1.0, builtin_schedule(ScheduleKind::trigonometric))).value;
  const double trig_defect = std::abs(trig - 4.0) / 4.0;

  double rotation = 0.0;
  int seed = 700;
  for (const Schedule& sch : schedules()) {
    for (int sectors : {1, 2}) {
      const Operator g = place_on_outputs(random_unitary(Eigen::Index{1} << sectors, seed++), sectors);
      const HamiltonianFamily base = multi_sector_family(sectors, 1.0, sch);
      const double plain = cost_numeric(superadiabatic_family(base, 0.7)).value;
      const double rotated = cost_numeric(superadiabatic_family(rotate_family(base, g), 0.7)).value;
      rotation = std::max(rotation, std::abs(plain - rotated));
    }
  }
  const bool pass = closed <= kClosedFormRelTol && trig_defect <= kTrigAdiabaticRelTol && rotation <= kRotationCostTol;
  return {pass, "closed vs direct " + sci(closed) + " rel, trig adiabatic " + fix(trig, 12) + ", rotation " + sci(rotation)};
}

Outcome ac8_cost_curves() {
  const auto sch = schedules();
  const std::vector<Mode> modes{Mode::adiabatic, Mode::superadiabatic};
  const auto grid = sweep_grid(0.1, 1000.0, 60, true);
  const auto reports = cost_sweep(sch, grid, modes);
  bool monotone = true;
  bool above = true;
  double worst_slow = 0.0;
  for (std::size_t r = 0; r + 1 < reports.size(); r += 2) {
    const auto& adia = reports[r].grid;
    const auto& sa = reports[r + 1].grid;
    const double floor = adia.front().second;
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (i > 0 && sa[i].second > sa[i - 1].second) monotone = false;
      if (sa[i].second < floor * (1.0 - kCostQuadratureTolerance)) above = false;
    }
    // Grid endpoint is tau*omega = 1000.
    worst_slow = std::max(worst_slow, std::abs(sa.back().second - floor) / floor);
  }
  double crossing = -1.0;
  for (std::size_t i = 0; i < grid.size() && grid[i] <= 1.0; ++i) {
    const double lin = reports[1].grid[i].second;
    const double cheapest = std::min({lin, reports[3].grid[i].second, reports[5].grid[i].second});
    if (cheapest < lin) {
      crossing = grid[i];
      break;
    }
  }
  const bool pass = monotone && above && worst_slow <= kSlowLimitRelTol && crossing > 0.0;
  return {pass, std::string("nonincreasing ") + (monotone ? "yes" : "no") + ", above adiabatic " + (above ? "yes" : "no") +
                    ", max gap at 1e3 " + sci(worst_slow) + ", linear not cheapest from tau*omega = " +
                    (crossing > 0 ? fix(crossing, 4) : std::string("never"))};
}

Outcome ac9_scaling() {
  const Schedule trig = builtin_schedule(ScheduleKind::trigonometric);
  const double single = cost_closed_form(trig, 1.0, 1.0).value;
  const double ratio = cost_multi(2, trig, 1.0, 1.0).value / single;
  const bool g_exact = cost_scaling(1) == 1.0 && cost_scaling(2) == 4.0 && cost_scaling(3) == 8.0 * std::sqrt(3.0);
  const bool pass = std::abs(ratio - 4.0) / 4.0 <= kScalingRelTol && g_exact;
  return {pass, "cost_multi(2)/single = " + fix(ratio, 12) + ", g_2 = " + fix(cost_scaling(2), 12) +
                    ", g_3 = " + fix(cost_scaling(3), 12)};
}

Outcome ac10_parity() {
  if (sweep_records.empty()) return {false, "criterion 4 sweep did not produce records"};
  double worst = 0.0;
  for (const RunRecord& r : sweep_records) worst = std::max(worst, r.parity_drift);
  return {worst <= kParityTol, "max <Pi_z> drift over " + std::to_string(sweep_records.size()) + " trajectories = " + sci(worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> body;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "spectrum law", 1.0, ac1_spectrum},
      {"AC2", "parity commutators of H_SA", 5.0, ac2_parity_commutators},
      {"AC3", "rotation covariance of H_SA", 10.0, ac3_rotation_covariance},
      {"AC4", "superadiabatic state teleportation", 120.0, ac4_superadiabatic},
      {"AC5", "adiabatic contrast", 60.0, ac5_adiabatic},
      {"AC6", "gate teleportation", 300.0, ac6_gates},
      {"AC7", "cost identities", 30.0, ac7_cost_identities},
      {"AC8", "cost curve structure", 60.0, ac8_cost_curves},
      {"AC9", "multi-sector scaling law", 30.0, ac9_scaling},
      {"AC10", "parity conservation", 120.0, ac10_parity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS " : "FAIL ") << std::left << std::setw(5) << c.id << c.title << ": " << o.detail << " ["
              << fix(seconds, 2) << " s / " << fix(c.limit_seconds, 0) << " s" << (in_time ? "" : ", over limit") << "]"
              << std::endl;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
