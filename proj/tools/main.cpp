#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "otsfc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Oblivious transfer and secure two-party computation over erasure "
      "sources/channels: rate analysis, Monte Carlo simulation, exact "
      "privacy audits and annotated demos."};
  app.require_subcommand(1);

  otsfc::cli::ExperimentConfig config;
  if (const char* env_seed = std::getenv("OTSFC_SEED"))
    config.seed = std::strtoull(env_seed, nullptr, 10);

  std::string p_grid;
  double p = -1.0;
  unsigned long long b = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "erasure probability");
    cmd->add_option("--p-grid", p_grid, "probability grid start:stop:step");
    cmd->add_option("--m", config.m, "choices per sample / string count");
    cmd->add_option("--n", config.n, "erasure samples");
    cmd->add_option("--k", config.k, "sample count / string length");
    cmd->add_option("--trials", config.trials, "Monte Carlo trials");
    cmd->add_option("--seed", config.seed, "64-bit experiment seed");
    cmd->add_option("--params", config.params_sets,
                    "branching sequence, e.g. 2,3 (repeatable)");
    cmd->add_option("--model", config.model, "resource model: source|channel");
    cmd->add_option("--protocol", config.protocol,
                    "protocol: swot|boot|gsfc (inferred when omitted)");
    cmd->add_option("--table", config.table_path, "function table file");
    cmd->add_option("--output", config.output_path, "output file (CSV)");
    cmd->add_option("--slack", config.slack, "resource sizing slack");
    cmd->add_option("--max-u", config.max_u, "optimizer depth limit");
    cmd->add_option("--b", b, "receiver selection override");
    cmd->add_option("--atom-cap", config.atom_cap, "enumeration atom cap");
    cmd->add_flag("--single-ot", config.single_ot,
                  "derive Alice's values from Bob's output (g determines f)");
    cmd->add_flag("--pooled", config.pooled,
                  "allocate one upfront sample pool across OT rounds");
    cmd->add_flag("--canary", config.canary,
                  "run the insecure pad-reuse variant (audit regression)");
  };

  for (const char* name : {"rates", "simulate", "audit", "optimize", "demo"})
    add_common(app.add_subcommand(name));

  CLI11_PARSE(app, argc, argv);

  config.subcommand = app.get_subcommands().front()->get_name();
  if (p >= 0.0) config.p = p;
  if (!p_grid.empty()) config.p_grid = p_grid;
  if (b > 0) config.b = static_cast<std::uint32_t>(b);

  return otsfc::cli::run_command(config, std::cout, std::cerr);
}
