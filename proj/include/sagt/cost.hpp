#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sagt/model.hpp"
#include "sagt/quadrature.hpp"

namespace sagt {

/// Relative agreement required between successive Simpson halvings.
inline constexpr double kCostQuadratureTolerance = 1e-8;

/// Sigma = (1/tau) int_0^tau ||H(t)||_F dt = int_0^1 ||H(s)||_F ds, evaluated on
/// the dense family operator. quad_points >= 16 is the starting interval count.
QuadratureResult cost_numeric(const HamiltonianFamily& family, int quad_points = 64);

/// mu_m(s) = <d_s m|d_s m> for the smooth block frame; levels 0..3 are the
/// Pi_z = +1 block, 4..7 the Pi_z = -1 block (identical values).
double mu(const Schedule& schedule, double s, int level);

/// int_0^1 sqrt( sum_m [E_m^2 + mu_m / tau^2] ) ds over the 8 single-sector
/// levels (hbar = 1). With tau = nullopt the mu terms are dropped (adiabatic).
QuadratureResult cost_closed_form(const Schedule& schedule, std::optional<double> tau, double omega, int quad_points = 64);

/// g_n = sqrt(2^{3(n-1)} n).
double cost_scaling(int sectors);

/// Direct Frobenius quadrature on the n-sector superadiabatic family (dense, n <= 3).
QuadratureResult cost_multi(int sectors, const Schedule& schedule, double tau, double omega, int quad_points = 64);

struct CostReport {
  std::string schedule;
  Mode mode = Mode::adiabatic;
  std::vector<std::pair<double, double>> grid;  // (tau_omega, cost / (hbar omega))
  int quadrature_points = 0;                    // largest interval count used
  double quadrature_defect = 0.0;               // largest relative halving change
};

/// One report per (schedule, mode), schedule-major. Points run on OpenMP threads.
std::vector<CostReport> cost_sweep(std::span<const Schedule> schedules, std::span<const double> tau_omega,
                                   std::span<const Mode> modes, double omega = 1.0, int quad_points = 64);
std::vector<CostReport> cost_sweep_serial(std::span<const Schedule> schedules, std::span<const double> tau_omega,
                                          std::span<const Mode> modes, double omega = 1.0, int quad_points = 64);

/// `points` values from lo to hi, geometrically (log = true) or evenly spaced.
std::vector<double> sweep_grid(double lo, double hi, int points, bool log);

}  // namespace sagt
