#include "verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "sagt/cost.hpp"
#include "sagt/counterdiabatic.hpp"
#include "sagt/gates.hpp"
#include "sagt/model.hpp"

namespace sagt::cli {
namespace {

constexpr std::array<double, 3> kTauOmegas{0.1, 1.0, 10.0};

std::vector<Schedule> builtins() {
  return {builtin_schedule(ScheduleKind::linear), builtin_schedule(ScheduleKind::trigonometric),
          builtin_schedule(ScheduleKind::exponential)};
}

std::vector<double> s_grid(int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = points == 1 ? 0.5 : static_cast<double>(i) / (points - 1);
  return g;
}

double max_abs(const Operator& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

CheckResult check(std::string name, double defect, double tol) { return {std::move(name), defect, tol, defect <= tol}; }

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.grid < 2) throw std::invalid_argument("verify grid needs at least 2 points");
  if (!(options.tol > 0.0)) throw std::invalid_argument("verify tolerance must be positive");
  const auto schedules = builtins();
  const auto grid = s_grid(options.grid);
  const Operator pz = pauli_string("ZZZ");
  const Operator px = pauli_string("XXX");

  double spectrum = 0.0;
  double comm_z = 0.0;
  double comm_x = 0.0;
  double trace = 0.0;
  double blocks = 0.0;
  double off_block = 0.0;
  for (const Schedule& schedule : schedules) {
    const HamiltonianFamily base = single_sector_family(1.0, schedule);
    for (double s : grid) {
      const Operator h0 = base(s);
      Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Operator>(h0, Eigen::EigenvaluesOnly).eigenvalues();
      const double e = 2.0 * chi(schedule, s);
      const std::array<double, 8> expected{-e, -e, 0, 0, 0, 0, e, e};
      for (int i = 0; i < 8; ++i) spectrum = std::max(spectrum, std::abs(ev(i) - expected[i]));
    }
    for (double tw : kTauOmegas) {
      const HamiltonianFamily sa = superadiabatic_family(base, tw);
      for (double s : grid) {
        const Operator h = sa(s);
        comm_z = std::max(comm_z, frobenius_norm(commutator(h, pz)));
        comm_x = std::max(comm_x, frobenius_norm(commutator(h, px)));
        trace = std::max(trace, std::abs(h.trace()));
        blocks = std::max(blocks, max_abs(extract_block(h, kPlusBlockBasis) - extract_block(h, kMinusBlockBasis)));
        Operator masked = h;
        for (int i : kPlusBlockBasis)
          for (int j : kPlusBlockBasis) masked(i, j) = 0.0;
        for (int i : kMinusBlockBasis)
          for (int j : kMinusBlockBasis) masked(i, j) = 0.0;
        off_block = std::max(off_block, max_abs(masked));
      }
    }
  }

  // Rotation covariance: three routes to H_SA(s, G).
  double covariance = 0.0;
  double frame_route = 0.0;
  for (int r = 0; r < 10; ++r) {
    const int sectors = r < 5 ? 1 : 2;
    const Operator g = place_on_outputs(random_unitary(Eigen::Index{1} << sectors, options.seed + r), sectors);
    const Schedule& schedule = schedules[r % 3];
    const double tau = kTauOmegas[r % 3];
    const HamiltonianFamily base = multi_sector_family(sectors, 1.0, schedule);
    const HamiltonianFamily sa = superadiabatic_family(base, tau);
    const HamiltonianFamily rotated_sa = superadiabatic_family(rotate_family(base, g), tau);
    const HamiltonianFamily rotated = rotate_family(base, g);
    auto rotated_frame = [&](double x) -> Operator { return g * register_frame(schedule, x, sectors); };
    for (std::size_t i = 0; i < grid.size(); i += (sectors == 1 ? 1 : 5)) {
      const double s = grid[i];
      const Operator a = rotated_sa(s);
      covariance = std::max(covariance, max_abs(a - g * sa(s) * g.adjoint()));
      frame_route = std::max(frame_route, max_abs(a - (rotated(s) + cd_from_frame(rotated_frame, s, tau))));
    }
  }

  const Schedule trig_schedule = builtin_schedule(ScheduleKind::trigonometric);
  const double single = cost_closed_form(trig_schedule, 1.0, 1.0).value;
  const double ratio = cost_multi(2, trig_schedule, 1.0, 1.0).value / single;
  const double g_exact = std::max(std::abs(cost_scaling(2) - 4.0), std::abs(cost_scaling(3) - 8.0 * std::sqrt(3.0)));

  return {
      check("spectrum_law", spectrum, options.tol),
      check("sa_commutes_pi_z", comm_z, options.tol),
      check("sa_commutes_pi_x", comm_x, options.tol),
      check("sa_rotation_covariance", covariance, options.tol),
      check("sa_rotated_frame_cd", frame_route, std::max(options.tol, 1e-8)),
      check("trace_h_sa_zero", trace, options.tol),
      check("block_equality", blocks, options.tol),
      check("off_block_zero", off_block, options.tol),
      check("scaling_law_g2_ratio", std::abs(ratio - 4.0) / 4.0, 1e-6),
      check("scaling_law_g_values", g_exact, 1e-15),
  };
}

}  // namespace sagt::cli
