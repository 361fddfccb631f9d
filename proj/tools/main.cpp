#include <CLI11.hpp>
#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace antsel::cli;

  CLI::App app{"Antenna selection for two-user MIMO-NOMA: simulation and closed-form analysis"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string out_path;
  std::string format;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "Scenario/sweep config file (INI)");
    sub->add_option("--out", out_path, "Output path (default: stdout)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Campaign master seed");
    sub->add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::Range(1, 10'000'000));
  };

  auto* simulate = app.add_subcommand("simulate", "Run the Monte Carlo sweep");
  add_common(simulate);
  simulate->add_option("--gnuplot", opts.gnuplot_path, "Also write a gnuplot script for the CSV");
  auto* analyze = app.add_subcommand("analyze", "Evaluate closed forms against quadrature");
  add_common(analyze);
  auto* validate = app.add_subcommand("validate", "Run the built-in numerical checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  if (*validate) return cmd_validate(std::cout, std::cerr);

  auto* active = app.get_subcommands().front();
  if (active->count("--out")) opts.out_path = out_path;
  if (active->count("--format")) opts.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (active->count("--seed")) opts.seed = seed;
  if (active->count("--trials")) opts.trials = trials;

  if (*simulate) return cmd_simulate(opts, std::cout, std::cerr);
  if (*analyze) return cmd_analyze(opts, std::cout, std::cerr);
  return kExitConfigError;
}
