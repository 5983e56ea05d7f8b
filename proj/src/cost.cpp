#include "sagt/cost.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "sagt/counterdiabatic.hpp"

namespace sagt {
namespace {

void check_quad_points(int quad_points) {
  if (quad_points < 16) throw std::invalid_argument("quad_points must be >= 16");
}

struct PointResult {
  double cost = 0.0;
  int points = 0;
  double defect = 0.0;
};

PointResult sweep_point(const Schedule& schedule, Mode mode, double tau_omega, double omega, int quad_points) {
  if (!(tau_omega > 0.0)) throw std::invalid_argument("sweep grid values must be positive");
  HamiltonianFamily family = single_sector_family(omega, schedule);
  if (mode == Mode::superadiabatic) family = superadiabatic_family(family, tau_omega / omega);
  const QuadratureResult q = cost_numeric(family, quad_points);
  return {q.value / omega, q.points, q.defect};
}

std::vector<CostReport> assemble(std::span<const Schedule> schedules, std::span<const double> tau_omega,
                                 std::span<const Mode> modes, const std::vector<PointResult>& points) {
  std::vector<CostReport> reports;
  std::size_t i = 0;
  for (const Schedule& schedule : schedules) {
    for (Mode mode : modes) {
      CostReport report{schedule.name(), mode, {}, 0, 0.0};
      for (double t : tau_omega) {
        const PointResult& p = points[i++];
        report.grid.emplace_back(t, p.cost);
        report.quadrature_points = std::max(report.quadrature_points, p.points);
        report.quadrature_defect = std::max(report.quadrature_defect, p.defect);
      }
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

}  // namespace

QuadratureResult cost_numeric(const HamiltonianFamily& family, int quad_points) {
  check_quad_points(quad_points);
  return simpson_converged([&](double s) { return frobenius_norm(family(s)); }, 0.0, 1.0, quad_points,
                           kCostQuadratureTolerance);
}

double mu(const Schedule& schedule, double s, int level) {
  if (level < 0 || level > 7) throw std::invalid_argument("level must be in 0..7");
  return block_eigenvector_derivatives(schedule, s).col(level % 4).squaredNorm();
}

QuadratureResult cost_closed_form(const Schedule& schedule, std::optional<double> tau, double omega, int quad_points) {
  check_quad_points(quad_points);
  if (tau && !(*tau > 0.0)) throw std::invalid_argument("tau must be positive");
  const double inv_tau2 = tau ? 1.0 / (*tau * *tau) : 0.0;
  auto integrand = [&](double s) {
    const auto energies = block_energies(schedule, s, omega);
    const BlockMatrix dv = block_eigenvector_derivatives(schedule, s);
    double sum = 0.0;
    for (int m = 0; m < 4; ++m) sum += energies[m] * energies[m] + dv.col(m).squaredNorm() * inv_tau2;
    return std::sqrt(2.0 * sum);  // two identical parity blocks
  };
  return simpson_converged(integrand, 0.0, 1.0, quad_points, kCostQuadratureTolerance);
}

double cost_scaling(int sectors) {
  if (sectors < 1) throw std::invalid_argument("sector count must be positive");
  return std::sqrt(std::ldexp(1.0, 3 * (sectors - 1)) * sectors);
}

QuadratureResult cost_multi(int sectors, const Schedule& schedule, double tau, double omega, int quad_points) {
  if (sectors > 3) throw CapacityError("cost_multi: direct check limited to 3 sectors");
  const HamiltonianFamily family = superadiabatic_family(multi_sector_family(sectors, omega, schedule), tau);
  return cost_numeric(family, quad_points);
}

std::vector<CostReport> cost_sweep(std::span<const Schedule> schedules, std::span<const double> tau_omega,
                                   std::span<const Mode> modes, double omega, int quad_points) {
  check_quad_points(quad_points);
  const std::size_t per_schedule = modes.size() * tau_omega.size();
  const auto total = static_cast<std::int64_t>(schedules.size() * per_schedule);
  std::vector<PointResult> points(static_cast<std::size_t>(total));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < total; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);
    const std::size_t sched = idx / per_schedule;
    const std::size_t mode = (idx % per_schedule) / tau_omega.size();
    const std::size_t t = idx % tau_omega.size();
    try {
      points[idx] = sweep_point(schedules[sched], modes[mode], tau_omega[t], omega, quad_points);
    } catch (...) {
#pragma omp critical(sagt_cost_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(schedules, tau_omega, modes, points);
}

std::vector<CostReport> cost_sweep_serial(std::span<const Schedule> schedules, std::span<const double> tau_omega,
                                          std::span<const Mode> modes, double omega, int quad_points) {
  check_quad_points(quad_points);
  std::vector<PointResult> points;
  for (const Schedule& schedule : schedules)
    for (Mode mode : modes)
      for (double t : tau_omega) points.push_back(sweep_point(schedule, mode, t, omega, quad_points));
  return assemble(schedules, tau_omega, modes, points);
}

std::vector<double> sweep_grid(double lo, double hi, int points, bool log) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("grid bounds must satisfy 0 < lo <= hi");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    grid[i] = log ? std::exp(std::log(lo) + f * (std::log(hi) - std::log(lo))) : lo + f * (hi - lo);
  }
  grid.back() = hi;
  return grid;
}

}  // namespace sagt
