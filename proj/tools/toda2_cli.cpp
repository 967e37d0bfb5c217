#include "toda2/algebra_io.hpp"
#include "toda2/checks.hpp"
#include "toda2/errors.hpp"
#include "toda2/flows.hpp"
#include "toda2/phase_space.hpp"
#include "toda2/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

toda2::Algebra build(const std::string& type, int n) {
  if (type == "sl") return toda2::Algebra::build_sl(n);
  if (type == "gl") return toda2::Algebra::build_gl(n);
  throw toda2::PreconditionError("unknown algebra type '" + type + "' (expected sl or gl)");
}

toda2::PairPoint seeded_start(const toda2::Algebra& alg, std::uint64_t seed) {
  toda2::Rng rng(seed);
  return toda2::PairPoint::from_flat(toda2::two_toda_space(alg).random_point(rng), alg.dim());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-Toda lattice laboratory: algebra specs, verification checks and flows"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  int samples = 20;
  std::optional<double> tol;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--samples", samples, "samples per check")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "override every residual tolerance");

  // algebra build | validate
  auto* algebra = app.add_subcommand("algebra", "build or validate algebra specs");
  algebra->require_subcommand(1);
  std::string type = "sl", out_path;
  int n = 3;
  auto* build_cmd = algebra->add_subcommand("build", "write a built-in algebra spec");
  build_cmd->add_option("--type", type, "sl or gl")->check(CLI::IsMember({"sl", "gl"}));
  build_cmd->add_option("--n", n, "matrix order")->required();
  build_cmd->add_option("--out", out_path, "output file")->required();
  std::string spec_path;
  auto* validate_cmd = algebra->add_subcommand("validate", "load a spec and check its invariants");
  validate_cmd->add_option("spec", spec_path, "algebra spec file")->required();

  // check <name>
  auto* check = app.add_subcommand("check", "run verification checks");
  std::string check_name, format = "text";
  std::string check_spec;
  std::string names = "all";
  for (const auto& c : toda2::check_names()) names += ", " + c;
  check->add_option("name", check_name, names)->required();
  check->add_option("--algebra", check_spec, "algebra spec file")->required();
  check->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--seed", seed, "random seed");
  check->add_option("--samples", samples, "samples per check")->check(CLI::PositiveNumber);
  check->add_option("--tol", tol, "override every residual tolerance");

  // flow run | commutation
  auto* flow = app.add_subcommand("flow", "integrate flows");
  flow->require_subcommand(1);
  std::string flow_spec, field = "t", csv_path;
  toda2::FlowConfig fcfg;
  auto* run_cmd = flow->add_subcommand("run", "integrate one field with RK4 and write a CSV trajectory");
  run_cmd->add_option("--algebra", flow_spec, "algebra spec file")->required();
  run_cmd->add_option("--field", field, "t, s, toda, quadratic or linear")
      ->check(CLI::IsMember({"t", "s", "toda", "quadratic", "linear"}));
  run_cmd->add_option("--i", fcfg.i, "generator exponent for quadratic/linear fields");
  run_cmd->add_option("--lambda", fcfg.lambda, "pencil parameter for quadratic/linear fields");
  run_cmd->add_option("--dt", fcfg.dt, "time step")->capture_default_str();
  run_cmd->add_option("--T", fcfg.horizon, "horizon")->capture_default_str();
  run_cmd->add_option("--out", csv_path, "CSV output file")->required();
  run_cmd->add_option("--seed", seed, "random seed for the start point");
  double comm_dt = 1e-3;
  int comm_steps = 100;
  auto* comm_cmd = flow->add_subcommand("commutation", "defect between t-then-s and s-then-t flows");
  comm_cmd->add_option("--algebra", flow_spec, "algebra spec file")->required();
  comm_cmd->add_option("--dt", comm_dt, "time step")->capture_default_str();
  comm_cmd->add_option("--steps", comm_steps, "steps per flow")->capture_default_str();
  comm_cmd->add_option("--seed", seed, "random seed for the start point");
  comm_cmd->add_option("--tol", tol, "pass threshold (default 1e-6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*build_cmd) {
      toda2::save_spec(build(type, n), out_path);
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }
    if (*validate_cmd) {
      const auto alg = toda2::load_spec(spec_path);
      std::cout << alg.name() << ": valid (dim " << alg.dim() << ", rank " << alg.rank() << ")\n";
      return 0;
    }
    if (*check) {
      const auto alg = toda2::load_spec(check_spec);
      const auto reports = toda2::run_check(check_name, alg, toda2::CheckOptions{seed, samples, tol});
      std::cout << toda2::emit_report(reports, format == "json" ? toda2::ReportFormat::Json : toda2::ReportFormat::Text);
      return toda2::all_pass(reports) ? 0 : kExitFail;
    }
    if (*run_cmd) {
      const auto alg = toda2::load_spec(flow_spec);
      fcfg.field = toda2::parse_field_kind(field);
      const auto traj = toda2::integrate(alg, fcfg, seeded_start(alg, seed));
      std::ofstream out(csv_path);
      if (!out) throw toda2::Error("cannot write " + csv_path);
      toda2::write_csv(out, traj);
      if (traj.truncated) {
        std::cerr << "trajectory truncated: " << traj.diagnostic << "\n";
        return kExitFail;
      }
      std::cout << "wrote " << traj.states.size() << " states to " << csv_path << "\n";
      return 0;
    }
    if (*comm_cmd) {
      const auto alg = toda2::load_spec(flow_spec);
      const double defect = toda2::flow_commutation(alg, seeded_start(alg, seed), comm_dt, comm_steps);
      toda2::RunInfo run{alg.name(), "linear", 1, seed};
      const auto report = toda2::CheckReport::residual("flow.commutation", "t- and s-flows commute", run, defect,
                                                       tol.value_or(1e-6));
      std::cout << toda2::emit_report({report}, toda2::ReportFormat::Text);
      return report.pass ? 0 : kExitFail;
    }
  } catch (const toda2::ValidationError& e) {
    std::cerr << "invalid algebra spec: " << e.invariant() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const toda2::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
