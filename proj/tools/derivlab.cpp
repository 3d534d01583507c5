#include <CLI11.hpp>

#include <iostream>

#include "derivlab/cli/commands.hpp"
#include "derivlab/errors.hpp"

namespace cli = derivlab::cli;

namespace {

void add_algebra_options(CLI::App& cmd, cli::AlgebraChoice& choice) {
  cmd.add_option("--algebra", choice.expr, "Algebra expression: tn, mn, tnN, mnN, quat, ring, diagN, poly:D:E, tensor:E,F");
  cmd.add_option("--n", choice.n, "Order for bare tn / mn");
  cmd.add_option("--algebra-file", choice.file, "Inline algebra JSON document");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solution spaces of derivation-type identities on structure-constant algebras"};
  app.require_subcommand(1);

  std::string config_path;
  std::string ring_text;
  app.add_option("--config", config_path, "JSON config with default ring and output_dir");
  app.add_option("--ring", ring_text, "Coefficient ring: q, z5, zmod:7, Z/3");

  cli::SolveOptions solve;
  std::string solve_ring;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the solution space of an identity");
  add_algebra_options(*solve_cmd, solve.algebra);
  solve_cmd->add_option("--kind", solve.kind, "Identity kind, e.g. jordan-left-gh")->required();
  solve_cmd->add_option("--ring", solve_ring, "Coefficient ring");
  solve_cmd->add_flag("--g-eq-h", solve.g_eq_h, "Add the constraint g = h");
  solve_cmd->add_flag("--f-zero", solve.f_zero, "Add the constraint f = 0");
  solve_cmd->add_flag("--emit-system", solve.emit_system, "Print the linear system instead of solving it");
  solve_cmd->add_flag("--verify", solve.verify, "Attach independent verification results");

  cli::CheckOptions check;
  std::string check_ring;
  auto* check_cmd = app.add_subcommand("check", "Check a triple document against an identity");
  check_cmd->add_option("--triple", check.triple_file, "Triple JSON document")->required()->check(CLI::ExistingFile);
  check_cmd->add_option("--kind", check.kind, "Identity kind")->required();
  check_cmd->add_option("--ring", check_ring, "Coefficient ring for documents without one");
  add_algebra_options(*check_cmd, check.algebra);

  bool catalog_json = false;
  auto* catalog_cmd = app.add_subcommand("catalog", "List verification entries");
  catalog_cmd->add_flag("--json", catalog_json, "Machine-readable output");

  cli::VerifyOptions verify;
  std::string verify_ring;
  bool no_timings = false;
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the verification catalog");
  verify_cmd->add_option("--filter", verify.filter, "Comma-separated ids; trailing * matches a prefix");
  verify_cmd->add_flag("--json", verify.json, "Machine-readable report");
  verify_cmd->add_flag("--no-timings", no_timings, "Omit timings from the JSON report");
  verify_cmd->add_option("--ring", verify_ring, "Ring for ring-generic entries");
  verify_cmd->add_option("--trace", verify.trace_path, "Write a traceability table (markdown)");

  cli::ExportOptions exp;
  std::string export_dir;
  std::string export_ring;
  auto* export_cmd = app.add_subcommand("export", "Write built-in algebras and example triples as JSON");
  export_cmd->add_option("--out", export_dir, "Output directory");
  export_cmd->add_option("--ring", export_ring, "Ring for the exported algebras");

  CLI11_PARSE(app, argc, argv);

  try {
    cli::Config config;
    if (!config_path.empty()) config = cli::load_config(config_path);
    auto pick_ring = [&](const std::string& local) {
      if (!local.empty()) return derivlab::parse_ring(local);
      if (!ring_text.empty()) return derivlab::parse_ring(ring_text);
      return config.ring.value_or(derivlab::RingSpec::rationals());
    };

    if (*solve_cmd) {
      solve.ring = pick_ring(solve_ring);
      return cli::cmd_solve(solve, std::cout, std::cerr);
    }
    if (*check_cmd) {
      check.ring = pick_ring(check_ring);
      return cli::cmd_check(check, std::cout, std::cerr);
    }
    if (*catalog_cmd) return cli::cmd_catalog(catalog_json, std::cout);
    if (*verify_cmd) {
      verify.ring = pick_ring(verify_ring);
      verify.timings = !no_timings;
      return cli::cmd_verify_paper(verify, std::cout, std::cerr);
    }
    if (*export_cmd) {
      exp.ring = pick_ring(export_ring);
      if (!export_dir.empty()) {
        exp.out_dir = export_dir;
      } else if (config.output_dir) {
        exp.out_dir = *config.output_dir;
      } else {
        exp.out_dir = "derivlab-export";
      }
      return cli::cmd_export(exp, std::cout, std::cerr);
    }
  } catch (const derivlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
