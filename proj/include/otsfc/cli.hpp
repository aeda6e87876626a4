#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace otsfc::cli {

struct ExperimentConfig {
  std::string subcommand;  // rates | simulate | audit | optimize | demo

  std::optional<double> p;
  std::optional<std::string> p_grid;  // "start:stop:step"
  int m = 2;
  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::vector<std::string> params_sets;  // branching sequences, e.g. "2,3"
  std::string model = "source";          // source | channel
  std::string protocol;                  // swot | boot | gsfc (inferred)
  std::string table_path;
  std::string output_path;  // CSV/report target; empty = stdout
  double slack = 0.1;
  bool single_ot = false;
  bool pooled = false;
  bool canary = false;
  int max_u = 4;
  std::optional<std::uint32_t> b;  // receiver selection for demo/audit
  std::size_t atom_cap = std::size_t{1} << 24;
};

/// "start:stop:step" with start <= stop, step > 0.
std::vector<double> parse_grid(const std::string& grid);
/// Comma-separated branching sequence, e.g. "2,2,3".
std::vector<std::size_t> parse_branching(const std::string& text);
/// "2x2x3"-style rendering used in CSV output.
std::string format_branching(const std::vector<std::size_t>& branching);

int cmd_rates(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_simulate(const ExperimentConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_audit(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_optimize(const ExperimentConfig& config, std::ostream& out,
                 std::ostream& err);
int cmd_demo(const ExperimentConfig& config, std::ostream& out,
             std::ostream& err);

/// Dispatch on config.subcommand; returns the process exit code.
int run_command(const ExperimentConfig& config, std::ostream& out,
                std::ostream& err);

}  // namespace otsfc::cli
