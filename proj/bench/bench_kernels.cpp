// Serial vs OpenMP timings for the state-vector kernels, the cost sweep and a
// batch of teleportation runs. Usage: sagt_bench [repetitions]

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <omp.h>

#include "sagt/cost.hpp"
#include "sagt/evolution.hpp"
#include "sagt/gates.hpp"
#include "sagt/kernels.hpp"

using namespace sagt;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, double check) {
  std::cout << std::left << std::setw(34) << name << std::right << std::setw(12) << std::fixed << std::setprecision(4)
            << serial << std::setw(12) << parallel << std::setw(10) << std::setprecision(2) << serial / parallel
            << std::setw(12) << std::scientific << std::setprecision(1) << check << std::defaultfloat << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 200;
  std::cout << "threads: " << omp_get_max_threads() << ", repetitions: " << reps << "\n";
  std::cout << std::left << std::setw(34) << "benchmark" << std::right << std::setw(12) << "serial s" << std::setw(12)
            << "openmp s" << std::setw(10) << "speedup" << std::setw(12) << "max diff" << "\n";

  const kernels::SectorMatrix op = random_unitary(8, 1);
  for (int sectors = 1; sectors <= 3; ++sectors) {
    const Eigen::Index dim = Eigen::Index{1} << (3 * sectors);
    StateVector a = random_state(dim, 2);
    StateVector b = a;
    std::span<Complex> va(a.data(), a.size());
    std::span<Complex> vb(b.data(), b.size());
    const double ts = seconds([&] {
      for (int r = 0; r < reps; ++r) kernels::apply_all_sectors_serial(vb, op, sectors);
    });
    const double tp = seconds([&] {
      for (int r = 0; r < reps; ++r) kernels::apply_all_sectors(va, op, sectors);
    });
    row("apply_all_sectors n=" + std::to_string(sectors), ts, tp, (a - b).cwiseAbs().maxCoeff());

    const std::uint64_t mask = kernels::sector_mask(-1, sectors);
    double ps = 0.0;
    double pp = 0.0;
    const double zs = seconds([&] {
      for (int r = 0; r < reps; ++r) ps += kernels::z_parity_expectation_serial(vb, mask);
    });
    const double zp = seconds([&] {
      for (int r = 0; r < reps; ++r) pp += kernels::z_parity_expectation(va, mask);
    });
    row("z_parity_expectation n=" + std::to_string(sectors), zs, zp, std::abs(ps - pp) / reps);
  }

  const std::vector<Schedule> schedules{builtin_schedule(ScheduleKind::linear), builtin_schedule(ScheduleKind::trigonometric),
                                        builtin_schedule(ScheduleKind::exponential)};
  const std::vector<Mode> modes{Mode::adiabatic, Mode::superadiabatic};
  const auto grid = sweep_grid(0.1, 1000.0, 60, true);
  std::vector<CostReport> rs;
  std::vector<CostReport> rp;
  const double cs = seconds([&] { rs = cost_sweep_serial(schedules, grid, modes); });
  const double cp = seconds([&] { rp = cost_sweep(schedules, grid, modes); });
  double cdiff = 0.0;
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (std::size_t i = 0; i < grid.size(); ++i) cdiff = std::max(cdiff, std::abs(rs[r].grid[i].second - rp[r].grid[i].second));
  row("cost_sweep 60 x 3 x 2", cs, cp, cdiff);

  std::vector<RunJob> jobs;
  for (const Schedule& s : schedules) {
    for (double tw : {0.1, 1.0, 5.0}) {
      RunConfig c;
      c.sectors = 2;
      c.schedule = s;
      c.tau_omega = tw;
      jobs.push_back({c, random_state(4, jobs.size()), {}});
    }
  }
  std::vector<RunRecord> bs;
  std::vector<RunRecord> bp;
  const double rs_t = seconds([&] { bs = run_batch_serial(jobs); });
  const double rp_t = seconds([&] { bp = run_batch(jobs); });
  double fdiff = 0.0;
  for (std::size_t i = 0; i < jobs.size(); ++i) fdiff = std::max(fdiff, std::abs(bs[i].fidelity - bp[i].fidelity));
  row("run_batch 9 runs n=2", rs_t, rp_t, fdiff);
  return 0;
}
