#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sagt/cost.hpp"
#include "sagt/evolution.hpp"
#include "sagt/gates.hpp"
#include "verify.hpp"

namespace sagt::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = SAGT_VERSION;
constexpr double kUnitaryTolerance = 1e-8;
constexpr double kSuperadiabaticFidelityFloor = 1.0 - 1e-6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string subcommand;
  int n = 1;
  std::string schedule = "trig";
  std::vector<std::string> schedules{"linear", "trig", "exp"};
  std::vector<std::string> modes{"adiabatic", "superadiabatic"};
  double tau = 1.0;
  double tau_min = 0.1;
  double tau_max = 1000.0;
  int points = 60;
  bool log = true;
  double omega = 1.0;
  int steps = 2000;
  std::string mode = "superadiabatic";
  std::string gate;
  std::string amp;
  bool random = false;
  std::uint64_t seed = 1;
  std::string out;
  int quad_points = 64;
  int grid = 51;
  double tol = 1e-8;
};

std::string format_double(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(15) << x;
  return os.str();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, const std::string& context) {
  std::istringstream is(trim(text));
  is.imbue(std::locale::classic());
  double v = 0.0;
  if (!(is >> v) || !is.eof()) throw std::runtime_error("cannot parse number '" + text + "' in " + context);
  return v;
}

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    f << content;
    if (!f) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::filesystem::rename(tmp, target);
}

void emit(const ExperimentConfig& config, const std::string& content, std::ostream& out) {
  if (config.out.empty()) {
    out << content;
  } else {
    write_atomically(config.out, content);
  }
}

Json config_json(const ExperimentConfig& c) {
  Json j;
  j["subcommand"] = c.subcommand;
  if (c.subcommand == "state-teleport" || c.subcommand == "gate-teleport") {
    j["n"] = c.n;
    j["schedule"] = c.schedule;
    j["tau_omega"] = c.tau;
    j["omega"] = c.omega;
    j["mode"] = c.mode;
    j["steps"] = c.steps;
    if (c.subcommand == "gate-teleport") j["gate"] = c.gate;
    j["input_state"] = !c.amp.empty() ? Json(c.amp) : Json(c.random ? "random" : "zero");
    j["seed"] = c.seed;
  } else if (c.subcommand == "cost-sweep") {
    j["schedules"] = c.schedules;
    j["modes"] = c.modes;
    j["tau_min"] = c.tau_min;
    j["tau_max"] = c.tau_max;
    j["points"] = c.points;
    j["log"] = c.log;
    j["omega"] = c.omega;
    j["quad_points"] = c.quad_points;
  } else if (c.subcommand == "verify") {
    j["grid"] = c.grid;
    j["tol"] = c.tol;
    j["seed"] = c.seed;
  }
  j["out"] = c.out;
  return j;
}

StateVector resolve_input(const ExperimentConfig& c, int qubits, std::ostream& err) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  StateVector psi;
  if (!c.amp.empty()) {
    psi = parse_amplitudes(c.amp);
    if (psi.size() != dim) {
      throw UsageError("--amp has " + std::to_string(psi.size()) + " amplitudes; " + std::to_string(dim) + " expected");
    }
  } else if (c.random) {
    psi = random_state(dim, c.seed);
  } else {
    psi = StateVector::Zero(dim);
    psi(0) = 1.0;
  }
  const double norm = psi.norm();
  if (!(norm > 0.0)) throw UsageError("input state has zero norm");
  if (std::abs(norm - 1.0) > 1e-6) err << "warning: input state renormalized (norm was " << format_double(norm) << ")\n";
  return psi / norm;
}

Operator resolve_gate(const ExperimentConfig& c) {
  if (c.gate.empty()) throw UsageError("--gate is required");
  if (c.gate == "random-su") {
    if (c.n < 1) throw UsageError("--n must be positive");
    return random_unitary(Eigen::Index{1} << c.n, c.seed + 1);
  }
  if (auto g = named_gate(c.gate)) return *g;
  if (std::filesystem::exists(c.gate)) return load_unitary(c.gate);
  throw UsageError("unknown gate '" + c.gate + "' (named: hadamard, t, x, z, cnot, cz, toffoli, random-su; or a file path)");
}

Json record_json(const RunRecord& r, const ExperimentConfig& c) {
  Json j;
  j["version"] = kVersion;
  j["config"] = config_json(c);
  j["n"] = r.sectors;
  j["schedule"] = r.schedule;
  j["tau_omega"] = r.tau_omega;
  j["omega"] = r.omega;
  j["mode"] = std::string(mode_label(r.mode));
  j["gate"] = r.gate;
  j["fidelity"] = r.fidelity;
  j["step_count"] = r.step_count;
  j["convergence_defect"] = r.convergence_defect;
  j["converged"] = r.converged;
  j["parity_drift"] = r.parity_drift;
  j["norm_defect"] = r.norm_defect;
  Json trace = Json::array();
  for (const auto& [s, overlap] : r.ground_overlap_trace) trace.push_back({s, overlap});
  j["ground_overlap_trace"] = std::move(trace);
  return j;
}

int finish_run(const RunRecord& record, const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  emit(c, record_json(record, c).dump(2) + "\n", out);
  std::ostream& summary = c.out.empty() ? err : out;
  summary << c.subcommand << ": n=" << record.sectors << " schedule=" << record.schedule
          << " tau_omega=" << format_double(record.tau_omega) << " mode=" << mode_label(record.mode)
          << " fidelity=" << std::setprecision(12) << record.fidelity << " steps=" << record.step_count
          << " defect=" << std::setprecision(3) << record.convergence_defect << "\n";
  if (!record.converged) return kExitVerification;
  if (record.mode == Mode::superadiabatic && record.fidelity < kSuperadiabaticFidelityFloor) return kExitVerification;
  return kExitOk;
}

RunConfig run_config(const ExperimentConfig& c, int sectors) {
  RunConfig rc;
  rc.sectors = sectors;
  rc.schedule = builtin_schedule(c.schedule);
  rc.tau_omega = c.tau;
  rc.omega = c.omega;
  rc.mode = parse_mode(c.mode);
  rc.steps = c.steps;
  rc.gate_name = c.gate;
  return rc;
}

int state_teleport(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const RunConfig rc = run_config(c, c.n);
  const StateVector psi = resolve_input(c, c.n, err);
  return finish_run(run_state_teleport(rc, psi), c, out, err);
}

int gate_teleport(ExperimentConfig c, std::ostream& out, std::ostream& err) {
  const Operator gate = resolve_gate(c);
  c.n = qubit_count(gate.rows());
  const RunConfig rc = run_config(c, c.n);
  const StateVector psi = resolve_input(c, c.n, err);
  return finish_run(run_gate_teleport(gate, rc, psi), c, out, err);
}

int cost_sweep_command(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<Schedule> schedules;
  for (const auto& name : c.schedules) schedules.push_back(builtin_schedule(name));
  std::vector<Mode> modes;
  for (const auto& name : c.modes) modes.push_back(parse_mode(name));
  const auto grid = sweep_grid(c.tau_min, c.tau_max, c.points, c.log);
  const auto reports = cost_sweep(schedules, grid, modes, c.omega, c.quad_points);

  std::ostringstream csv;
  csv << "# sagt " << kVersion << "\n";
  csv << "# config " << config_json(c).dump() << "\n";
  csv << "schedule,mode,tau_omega,cost_over_homega\n";
  std::size_t rows = 0;
  double worst_defect = 0.0;
  for (const auto& report : reports) {
    worst_defect = std::max(worst_defect, report.quadrature_defect);
    for (const auto& [tw, cost] : report.grid) {
      csv << report.schedule << ',' << mode_label(report.mode) << ',' << format_double(tw) << ',' << format_double(cost)
          << '\n';
      ++rows;
    }
  }
  emit(c, csv.str(), out);
  std::ostream& summary = c.out.empty() ? err : out;
  summary << "cost-sweep: " << rows << " rows, " << reports.size() << " curves, max quadrature defect "
          << std::setprecision(3) << worst_defect << "\n";
  return worst_defect <= kCostQuadratureTolerance ? kExitOk : kExitVerification;
}

int verify_command(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const auto results = run_verification({c.grid, c.tol, c.seed});
  std::ostringstream table;
  bool all = true;
  table << std::left << std::setw(32) << "check" << std::setw(14) << "max_defect" << std::setw(12) << "tolerance"
        << "result\n";
  Json checks = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    table << std::left << std::setw(32) << r.name << std::setw(14) << std::setprecision(3) << r.max_defect << std::setw(12)
          << r.tolerance << (r.passed ? "PASS" : "FAIL") << "\n";
    checks.push_back({{"name", r.name}, {"max_defect", r.max_defect}, {"tolerance", r.tolerance}, {"passed", r.passed}});
  }
  out << table.str();
  if (!c.out.empty()) {
    Json j;
    j["version"] = kVersion;
    j["config"] = config_json(c);
    j["checks"] = std::move(checks);
    j["passed"] = all;
    write_atomically(c.out, j.dump(2) + "\n");
  }
  out << "verify: " << (all ? "all checks passed" : "FAILED") << "\n";
  (void)err;
  return all ? kExitOk : kExitVerification;
}

}  // namespace

StateVector parse_amplitudes(const std::string& text) {
  std::vector<Complex> amps;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const auto colon = cell.find(':');
    if (colon == std::string::npos) {
      amps.emplace_back(parse_number(cell, "--amp"), 0.0);
    } else {
      amps.emplace_back(parse_number(cell.substr(0, colon), "--amp"), parse_number(cell.substr(colon + 1), "--amp"));
    }
  }
  if (amps.empty()) throw UsageError("--amp is empty");
  StateVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = amps[i];
  return v;
}

Operator load_unitary(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read gate file '" + path + "'");
  std::vector<std::vector<Complex>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::vector<Complex> row;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      std::istringstream cs(trim(cell));
      cs.imbue(std::locale::classic());
      double re = 0.0;
      double im = 0.0;
      if (!(cs >> re >> im) || !(cs >> std::ws).eof()) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ": expected cells of the form 're im', got '" + cell + "'");
      }
      row.emplace_back(re, im);
    }
    rows.push_back(std::move(row));
  }
  const auto dim = static_cast<Eigen::Index>(rows.size());
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::runtime_error(path + ": matrix has " + std::to_string(dim) + " rows; a power of two >= 2 is required");
  }
  Operator u(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != dim) {
      throw std::runtime_error(path + ": row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                               " cells; expected " + std::to_string(dim));
    }
    for (Eigen::Index j = 0; j < dim; ++j) u(i, j) = rows[i][j];
  }
  const double defect = unitarity_defect(u);
  if (defect > kUnitaryTolerance) {
    std::ostringstream msg;
    msg << path << ": matrix is not unitary (||U^dagger U - I||_F = " << std::setprecision(6) << defect << ")";
    throw std::runtime_error(msg.str());
  }
  return u;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superadiabatic gate-teleportation simulator", "sagt"};
  app.set_version_flag("--version", std::string("sagt ") + kVersion);
  app.require_subcommand(1);
  ExperimentConfig c;

  auto add_run_flags = [&c](CLI::App* sub) {
    sub->add_option("--schedule", c.schedule, "linear, trig or exp")->capture_default_str();
    sub->add_option("--tau", c.tau, "evolution time in units of 1/omega (tau*omega)")->capture_default_str();
    sub->add_option("--omega", c.omega, "energy scale")->capture_default_str();
    sub->add_option("--steps", c.steps, "initial step count (doubled until converged)")->capture_default_str();
    sub->add_option("--mode", c.mode, "adiabatic or superadiabatic")->capture_default_str();
    sub->add_option("--amp", c.amp, "input amplitudes 're:im,re:im,...'");
    sub->add_flag("--random", c.random, "random input state from --seed");
    sub->add_option("--seed", c.seed, "seed for random states and gates")->capture_default_str();
    sub->add_option("--out", c.out, "output JSON path (stdout if omitted)");
  };

  auto* state = app.add_subcommand("state-teleport", "teleport an n-qubit state");
  add_run_flags(state);
  state->add_option("--n", c.n, "number of sectors (qubits teleported)")->capture_default_str();

  auto* gate = app.add_subcommand("gate-teleport", "teleport a gate applied to an n-qubit state");
  add_run_flags(gate);
  gate->add_option("--gate", c.gate, "hadamard, t, x, z, cnot, cz, toffoli, random-su, or a matrix file")->required();
  gate->add_option("--n", c.n, "qubits for random-su")->capture_default_str();

  auto* sweep = app.add_subcommand("cost-sweep", "energetic cost versus tau*omega");
  sweep->add_option("--schedules", c.schedules, "comma-separated schedules")->delimiter(',')->capture_default_str();
  sweep->add_option("--modes", c.modes, "comma-separated modes")->delimiter(',')->capture_default_str();
  sweep->add_option("--tau-min", c.tau_min)->capture_default_str();
  sweep->add_option("--tau-max", c.tau_max)->capture_default_str();
  sweep->add_option("--points", c.points)->capture_default_str();
  sweep->add_flag("--log,!--linear", c.log, "logarithmic (default) or linear grid spacing");
  sweep->add_option("--omega", c.omega)->capture_default_str();
  sweep->add_option("--quad-points", c.quad_points, "initial Simpson interval count")->capture_default_str();
  sweep->add_option("--out", c.out, "output CSV path (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "run the symmetry and cost identity checks");
  verify->add_option("--grid", c.grid, "s-grid points")->capture_default_str();
  verify->add_option("--tol", c.tol, "tolerance for commutator and equality checks")->capture_default_str();
  verify->add_option("--seed", c.seed, "seed for random rotations")->capture_default_str();
  verify->add_option("--out", c.out, "optional JSON report path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (state->parsed()) {
      c.subcommand = "state-teleport";
      return state_teleport(c, out, err);
    }
    if (gate->parsed()) {
      c.subcommand = "gate-teleport";
      return gate_teleport(c, out, err);
    }
    if (sweep->parsed()) {
      c.subcommand = "cost-sweep";
      return cost_sweep_command(c, out, err);
    }
    c.subcommand = "verify";
    return verify_command(c, out, err);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sagt::cli
