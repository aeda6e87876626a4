#include "otsfc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "otsfc/audit.hpp"
#include "otsfc/capacity.hpp"
#include "otsfc/sim.hpp"

namespace otsfc::cli {

namespace {

constexpr double kMiTolerance = 1e-12;

[[noreturn]] void usage_error(const std::string& message) {
  throw ParamError(message);
}

struct CsvTarget {
  std::ostream* os;
  std::ofstream file;
};

CsvTarget open_csv(const ExperimentConfig& config, std::ostream& out) {
  CsvTarget target{&out, {}};
  if (!config.output_path.empty()) {
    target.file.open(config.output_path);
    if (!target.file)
      usage_error("cannot open output file: " + config.output_path);
    target.os = &target.file;
  }
  return target;
}

std::string protocol_of(const ExperimentConfig& config) {
  if (!config.protocol.empty()) return config.protocol;
  if (!config.table_path.empty()) return "gsfc";
  if (!config.params_sets.empty()) return "boot";
  return "swot";
}

FunctionSpec load_table(const ExperimentConfig& config) {
  std::ifstream in(config.table_path);
  if (!in) usage_error("cannot open table file: " + config.table_path);
  return parse_function_table(in);
}

ResourceModel model_of(const ExperimentConfig& config) {
  if (config.model == "source") return ResourceModel::source;
  if (config.model == "channel") return ResourceModel::channel;
  usage_error("model must be 'source' or 'channel'");
}

std::vector<std::size_t> single_params_set(const ExperimentConfig& config) {
  if (config.params_sets.size() != 1)
    usage_error("exactly one --params sequence required here");
  return parse_branching(config.params_sets.front());
}

std::shared_ptr<const Protocol> build_protocol(const ExperimentConfig& config,
                                               double p, std::ostream& err) {
  const std::string kind = protocol_of(config);
  if (kind == "swot") {
    if (config.n == 0) usage_error("sample-wise OT needs --n");
    if (config.k * static_cast<std::size_t>(config.m) > config.n)
      err << "warning: k*m > n guarantees an abort on every trial\n";
    return std::make_shared<SwotProtocol>(
        SwotConfig(config.k, static_cast<std::size_t>(config.m), config.n,
                   config.canary));
  }
  if (kind == "boot") {
    BootParams params(config.k, static_cast<std::size_t>(config.m),
                      single_params_set(config));
    std::vector<std::size_t> sizes =
        config.n > 0 ? boot_split_total(p, params, config.n)
                     : boot_level_sizes(p, params, config.slack);
    return std::make_shared<BootProtocol>(
        params, std::move(sizes),
        config.pooled ? BootResourceMode::pooled : BootResourceMode::fresh);
  }
  if (kind == "gsfc") {
    if (config.table_path.empty())
      usage_error("function computation needs --table");
    FunctionSpec spec = load_table(config);
    const GsfcSizes sizes =
        gsfc_direction_sizes(p, spec, config.k, config.slack,
                             config.single_ot);
    return std::make_shared<GsfcProtocol>(GsfcConfig{
        std::move(spec), config.k, sizes.forward, sizes.reverse,
        config.single_ot});
  }
  usage_error("protocol must be swot, boot or gsfc");
}

std::vector<std::vector<Symbol>> all_vectors(Symbol base, std::size_t k) {
  std::vector<std::vector<Symbol>> out;
  std::vector<Symbol> v(k, 1);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < k && v[i] == base) {
      v[i] = 1;
      ++i;
    }
    if (i == k) break;
    ++v[i];
  }
  return out;
}

}  // namespace

std::vector<double> parse_grid(const std::string& grid) {
  double start = 0.0, stop = 0.0, step = 0.0;
  char c1 = 0, c2 = 0;
  std::istringstream in(grid);
  if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':')
    usage_error("grid must read start:stop:step");
  if (!(start <= stop) || !(step > 0.0))
    usage_error("grid needs start <= stop and step > 0");
  const auto count =
      static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
  std::vector<double> values;
  values.reserve(count + 1);
  for (std::size_t i = 0; i <= count; ++i)
    values.push_back(start + static_cast<double>(i) * step);
  return values;
}

std::vector<std::size_t> parse_branching(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) usage_error("empty branching entry");
    std::size_t pos = 0;
    const unsigned long value = std::stoul(token, &pos);
    if (pos != token.size()) usage_error("bad branching entry: " + token);
    out.push_back(static_cast<std::size_t>(value));
  }
  if (out.empty()) usage_error("branching sequence must be nonempty");
  return out;
}

std::string format_branching(const std::vector<std::size_t>& branching) {
  std::string out;
  for (std::size_t i = 0; i < branching.size(); ++i) {
    if (i > 0) out += "x";
    out += std::to_string(branching[i]);
  }
  return out;
}

int cmd_rates(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err) {
  const std::vector<double> grid =
      config.p_grid ? parse_grid(*config.p_grid)
                    : (config.p ? std::vector<double>{*config.p}
                                : parse_grid("0:1:0.01"));

  std::vector<std::vector<std::size_t>> sets;
  const std::vector<std::size_t> swot_curve{
      static_cast<std::size_t>(config.m)};
  for (const auto& text : config.params_sets) {
    auto seq = parse_branching(text);
    BootParams(1, static_cast<std::size_t>(config.m), seq);  // validation
    sets.push_back(std::move(seq));
  }
  const bool use_optimizer = sets.empty();
  if (std::find(sets.begin(), sets.end(), swot_curve) == sets.end())
    sets.insert(sets.begin(), swot_curve);

  CsvTarget target = open_csv(config, out);
  std::ostream& csv = *target.os;
  csv << "p,params,rate\n" << std::setprecision(17);
  for (double p : grid) {
    std::vector<std::vector<std::size_t>> row_sets = sets;
    if (use_optimizer) {
      auto best = optimize_boot_params(p, config.m, config.max_u);
      if (std::find(row_sets.begin(), row_sets.end(), best.branching) ==
          row_sets.end())
        row_sets.push_back(std::move(best.branching));
    }
    for (const auto& seq : row_sets)
      csv << p << "," << format_branching(seq) << "," << rate_boot(p, seq)
          << "\n";
  }
  if (!config.output_path.empty())
    err << "wrote rate curves to " << config.output_path << "\n";
  return 0;
}

int cmd_simulate(const ExperimentConfig& config, std::ostream& out,
                 std::ostream& err) {
  const double p = config.p.value_or(0.5);
  SimulationTask task;
  task.protocol = build_protocol(config, p, err);
  task.p = p;
  task.model = model_of(config);
  task.trials = config.trials;
  task.seed = config.seed;

  const SimulationSummary summary = run_simulation(task);
  const double exact = summary.exact_abort_probability;
  const double se =
      std::sqrt(exact * (1.0 - exact) / static_cast<double>(summary.trials));
  const double deviation = std::abs(summary.abort_rate - exact);

  out << std::setprecision(12);
  out << "protocol=" << task.protocol->name() << " p=" << p
      << " k=" << task.protocol->sample_count()
      << " trials=" << summary.trials << " seed=" << config.seed
      << " model=" << config.model << "\n";
  out << "resource_per_trial=" << summary.resource_per_trial << "\n";
  out << "abort_rate=" << summary.abort_rate << " exact=" << exact
      << " se=" << se << " deviation=" << deviation << "\n";
  out << "alice_error_rate="
      << static_cast<double>(summary.alice_errors) /
             static_cast<double>(summary.trials)
      << " bob_error_rate="
      << static_cast<double>(summary.bob_errors) /
             static_cast<double>(summary.trials)
      << "\n";
  out << "incorrect_non_aborted=" << summary.incorrect_non_aborted
      << " abort_mismatches=" << summary.abort_mismatches << "\n";

  bool failed = false;
  if (se == 0.0 ? deviation != 0.0 : deviation > 4.0 * se) {
    err << "regression: abort rate deviates beyond 4 standard errors\n";
    failed = true;
  }
  if (summary.incorrect_non_aborted > 0) {
    err << "regression: non-aborted session with wrong output\n";
    failed = true;
  }
  if (summary.abort_mismatches > 0) {
    err << "regression: abort flag disagrees with erasure counts\n";
    failed = true;
  }
  out << "result: " << (failed ? "FAIL" : "PASS") << "\n";
  return failed ? 1 : 0;
}

namespace {

struct MiFinding {
  std::string label;
  double mi_bits;
};

void audit_swot_forms(const ExperimentConfig& config, double p,
                      std::vector<MiFinding>& findings, std::ostream& out) {
  const auto m = static_cast<std::size_t>(config.m);
  const std::size_t n = config.n > 0 ? config.n : 4;
  const auto m_a = Symbol{1} << m;

  SwotProtocol protocol(SwotConfig(config.k, m, n, config.canary));
  MiAuditSetup setup;
  setup.protocol = &protocol;
  setup.p = p;
  setup.atom_cap = config.atom_cap;

  // Secrecy of Alice's samples against Bob, for every fixed B realization
  // and under the jointly uniform sources.
  setup.form = PrivacyForm::alice_secret;
  for (const auto& b_vec : all_vectors(static_cast<Symbol>(m), config.k)) {
    setup.source_dist = enumerate_sources(m_a, static_cast<Symbol>(m),
                                          config.k, std::nullopt, b_vec, false);
    const auto result = audit_exact_mi(setup);
    std::ostringstream label;
    label << "alice-secret fixed-b=";
    for (Symbol b : b_vec) label << b;
    findings.push_back({label.str(), result.mi_bits});
    out << "mi " << label.str() << " mi_bits=" << result.mi_bits << "\n";
  }
  setup.source_dist = enumerate_sources(m_a, static_cast<Symbol>(m), config.k,
                                        std::nullopt, std::nullopt, false);
  auto joint = audit_exact_mi(setup);
  findings.push_back({"alice-secret uniform", joint.mi_bits});
  out << "mi alice-secret uniform mi_bits=" << joint.mi_bits << "\n";

  // Secrecy of Bob's selections against Alice, for every fixed A.
  setup.form = PrivacyForm::bob_secret;
  for (const auto& a_vec : all_vectors(m_a, config.k)) {
    setup.source_dist = enumerate_sources(m_a, static_cast<Symbol>(m),
                                          config.k, a_vec, std::nullopt, false);
    const auto result = audit_exact_mi(setup);
    std::ostringstream label;
    label << "bob-secret fixed-a=";
    for (Symbol a : a_vec) label << a << ".";
    findings.push_back({label.str(), result.mi_bits});
    out << "mi " << label.str() << " mi_bits=" << result.mi_bits << "\n";
  }
  setup.source_dist = enumerate_sources(m_a, static_cast<Symbol>(m), config.k,
                                        std::nullopt, std::nullopt, false);
  joint = audit_exact_mi(setup);
  findings.push_back({"bob-secret uniform", joint.mi_bits});
  out << "mi bob-secret uniform mi_bits=" << joint.mi_bits << "\n";
}

}  // namespace

int cmd_audit(const ExperimentConfig& config, std::ostream& out,
              std::ostream& err) {
  const double p = config.p.value_or(0.5);
  const std::string kind = protocol_of(config);
  std::vector<MiFinding> findings;
  bool unit_violation = false;

  out << std::setprecision(6) << std::scientific;
  try {
    if (kind == "swot") {
      ExperimentConfig local = config;
      if (config.canary && config.m == 2 && config.k == 1) local.m = 3;
      out << "audit protocol=swot n=" << (local.n > 0 ? local.n : 4)
          << " k=" << local.k << " m=" << local.m << " p=" << p
          << (config.canary ? " variant=reuse-canary" : "") << "\n";
      audit_swot_forms(local, p, findings, out);
    } else if (kind == "boot") {
      const auto branching = single_params_set(config);
      const auto m = static_cast<std::size_t>(config.m);
      BootParams params(config.k, m, branching);
      out << "audit protocol=boot m=" << m
          << " params=" << format_branching(branching) << "\n";
      for (Symbol b = 1; b <= m; ++b) {
        const auto result = audit_disjoint_gf2(params, b);
        out << "gf2 b=" << b << " recoverable={";
        for (std::size_t i = 0; i < result.recoverable_units.size(); ++i)
          out << (i ? "," : "") << result.recoverable_units[i];
        out << "} witnesses=";
        if (result.leak_witnesses.empty()) {
          out << "none";
        } else {
          for (std::size_t w = 0; w < result.leak_witnesses.size(); ++w) {
            out << (w ? " " : "") << "{";
            for (std::size_t i = 0; i < result.leak_witnesses[w].size(); ++i)
              out << (i ? "," : "") << result.leak_witnesses[w][i];
            out << "}";
          }
        }
        out << "\n";
        if (result.recoverable_units != std::vector<std::size_t>{b})
          unit_violation = true;
      }
      if (config.k == 1 && m <= 4) {
        // Per-string exact MI at the smallest feasible sizes.
        std::vector<std::size_t> sizes;
        for (std::size_t s : branching) sizes.push_back(s);
        BootProtocol protocol(params, sizes, BootResourceMode::fresh);
        MiAuditSetup setup;
        setup.protocol = &protocol;
        setup.p = p;
        setup.atom_cap = config.atom_cap;
        setup.form = PrivacyForm::disjoint;
        for (Symbol b = 1; b <= m; ++b) {
          setup.source_dist =
              enumerate_sources(Symbol{1} << m, static_cast<Symbol>(m), 1,
                                std::nullopt, std::vector<Symbol>{b}, true);
          for (Symbol i = 1; i <= m; ++i) {
            setup.disjoint_index = i;
            const auto result = audit_exact_mi(setup);
            std::ostringstream label;
            label << "disjoint b=" << b << " i=" << i;
            findings.push_back({label.str(), result.mi_bits});
            out << "mi " << label.str() << " mi_bits=" << result.mi_bits
                << "\n";
          }
        }
      } else {
        out << "mi disjoint skipped (needs k=1 and m<=4 for enumeration)\n";
      }
    } else if (kind == "gsfc") {
      FunctionSpec spec = load_table(config);
      const std::size_t n_fwd =
          config.k * static_cast<std::size_t>(spec.h_b()) * spec.m_b();
      const std::size_t n_rev =
          config.single_ot
              ? 0
              : config.k * static_cast<std::size_t>(spec.h_a()) * spec.m_a();
      GsfcProtocol protocol(GsfcConfig{spec, config.k, n_fwd, n_rev,
                                       config.single_ot});
      out << "audit protocol=gsfc k=" << config.k << " n_fwd=" << n_fwd
          << " n_rev=" << n_rev << " p=" << p << "\n";
      MiAuditSetup setup;
      setup.protocol = &protocol;
      setup.p = p;
      setup.atom_cap = config.atom_cap;
      setup.form = PrivacyForm::alice_secret;
      for (const auto& b_vec : all_vectors(spec.m_b(), config.k)) {
        setup.source_dist = enumerate_sources(spec.m_a(), spec.m_b(), config.k,
                                              std::nullopt, b_vec, false);
        const auto result = audit_exact_mi(setup);
        std::ostringstream label;
        label << "alice-secret fixed-b=";
        for (Symbol b : b_vec) label << b;
        findings.push_back({label.str(), result.mi_bits});
        out << "mi " << label.str() << " mi_bits=" << result.mi_bits << "\n";
      }
      setup.form = PrivacyForm::bob_secret;
      for (const auto& a_vec : all_vectors(spec.m_a(), config.k)) {
        setup.source_dist = enumerate_sources(spec.m_a(), spec.m_b(), config.k,
                                              a_vec, std::nullopt, false);
        const auto result = audit_exact_mi(setup);
        std::ostringstream label;
        label << "bob-secret fixed-a=";
        for (Symbol a : a_vec) label << a << ".";
        findings.push_back({label.str(), result.mi_bits});
        out << "mi " << label.str() << " mi_bits=" << result.mi_bits << "\n";
      }
    } else {
      usage_error("audit supports swot, boot or gsfc");
    }
  } catch (const EnumerationCapError& e) {
    err << "capacity error: " << e.what() << " (" << e.atoms()
        << " atoms); rerun with smaller n or k\n";
    return 2;
  }

  bool mi_violation = false;
  for (const auto& finding : findings)
    if (finding.mi_bits > kMiTolerance) mi_violation = true;
  if (mi_violation) err << "privacy violation: conditional MI above 1e-12\n";
  if (unit_violation)
    err << "privacy violation: recoverable unselected string\n";
  const bool fail = mi_violation || unit_violation;
  out << "result: " << (fail ? "FAIL" : "PASS") << "\n";
  return fail ? 1 : 0;
}

int cmd_optimize(const ExperimentConfig& config, std::ostream& out,
                 std::ostream& err) {
  const std::vector<double> grid =
      config.p_grid ? parse_grid(*config.p_grid)
                    : std::vector<double>{config.p.value_or(0.5)};
  CsvTarget target = open_csv(config, out);
  std::ostream& csv = *target.os;
  csv << "p,params,rate\n" << std::setprecision(17);
  for (double p : grid) {
    const auto best = optimize_boot_params(p, config.m, config.max_u);
    csv << p << "," << format_branching(best.branching) << "," << best.rate
        << "\n";
  }
  if (!config.output_path.empty())
    err << "wrote optimizer results to " << config.output_path << "\n";
  return 0;
}

int cmd_demo(const ExperimentConfig& config, std::ostream& out,
             std::ostream& err) {
  const double p = config.p.value_or(0.5);
  auto protocol = build_protocol(config, p, err);
  const ErasureParams params(p);

  RandomnessStream source_rng(config.seed, "demo/source");
  RandomnessStream noise_rng(config.seed, "demo/noise");
  RandomnessStream alice_rng(config.seed, "demo/alice");
  RandomnessStream bob_rng(config.seed, "demo/bob");

  SourceSamples inputs = sample_inputs(*protocol, source_rng);
  if (config.b) {
    for (auto& b : inputs.b_samples) b = *config.b;
  }
  const ResourceDemand demand = protocol->resource_demand();
  const ResourceModel model = model_of(config);
  ErasureSequence forward =
      make_resource(model, params, demand.forward, alice_rng, noise_rng);
  ErasureSequence reverse =
      make_resource(model, params, demand.reverse, bob_rng, noise_rng);

  out << "demo protocol=" << protocol->name() << " p=" << p
      << " k=" << protocol->sample_count() << " seed=" << config.seed
      << " model=" << config.model << "\n";
  out << "alice samples:";
  for (Symbol a : inputs.a_samples) out << " " << a;
  out << "\nbob selections:";
  for (Symbol b : inputs.b_samples) out << " " << b;
  out << "\n";

  if (const auto* boot = dynamic_cast<const BootProtocol*>(protocol.get());
      boot != nullptr && boot->params().levels() > 1) {
    out << "encoding tree (string -> mask per level):\n";
    const auto assignment = boot_assign(boot->params());
    for (std::size_t j = 1; j <= boot->params().m; ++j) {
      out << "  string " << j << " -> (";
      for (std::size_t level = 1; level <= boot->params().levels(); ++level)
        out << (level > 1 ? "," : "") << assignment.digit(j, level);
      out << ")\n";
    }
  }

  const IndexPartition part = partition_indices(forward);
  out << "forward resource: n=" << demand.forward << " |S|="
      << part.non_erased.size() << " |S_e|=" << part.erased.size() << "\n";
  if (demand.reverse > 0) {
    const IndexPartition rev = partition_indices(reverse);
    out << "reverse resource: n=" << demand.reverse << " |S|="
        << rev.non_erased.size() << " |S_e|=" << rev.erased.size() << "\n";
  }

  const SessionResult result = run_session(*protocol, inputs, std::move(forward),
                                           std::move(reverse), alice_rng,
                                           bob_rng);
  out << "transcript:\n" << export_transcript(result.transcript);
  if (result.transcript.aborted) {
    out << "session aborted; estimates zeroed\n";
    return 0;
  }

  const FunctionOutputs truth = eval_functions(protocol->function_spec(), inputs);
  const CorrectnessFlags flags = check_correctness(result, truth);
  out << "bob decoded:";
  for (RangeValue v : result.outputs.g_est) out << " " << v;
  out << "\ntruth:";
  for (RangeValue v : truth.g_true) out << " " << v;
  out << "\nalice decoded:";
  for (RangeValue v : result.outputs.f_est) out << " " << v;
  out << "\ncorrect: alice=" << (flags.alice_correct ? "yes" : "no")
      << " bob=" << (flags.bob_correct ? "yes" : "no") << "\n";
  return 0;
}

int run_command(const ExperimentConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    if (config.subcommand == "rates") return cmd_rates(config, out, err);
    if (config.subcommand == "simulate") return cmd_simulate(config, out, err);
    if (config.subcommand == "audit") return cmd_audit(config, out, err);
    if (config.subcommand == "optimize") return cmd_optimize(config, out, err);
    if (config.subcommand == "demo") return cmd_demo(config, out, err);
    err << "unknown subcommand: " << config.subcommand << "\n";
    return 2;
  } catch (const ParamError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace otsfc::cli
