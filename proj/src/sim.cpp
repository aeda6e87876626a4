#include "otsfc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

namespace otsfc {

ErasureSequence make_resource(ResourceModel model, const ErasureParams& params,
                              std::size_t n, RandomSource& feeder_rng,
                              RandomSource& noise_rng) {
  if (model == ResourceModel::source) return sample_bes(params, n, noise_rng);
  std::vector<std::uint8_t> inputs(n);
  for (auto& b : inputs) b = feeder_rng.bit();
  return simulate_bec_transmission(params, inputs, noise_rng);
}

SourceSamples sample_inputs(const Protocol& protocol, RandomSource& rng) {
  const FunctionSpec spec = protocol.function_spec();
  const std::size_t k = protocol.sample_count();
  SourceSamples inputs;
  inputs.a_samples.reserve(k);
  inputs.b_samples.reserve(k);
  const bool constant_b = dynamic_cast<const BootProtocol*>(&protocol) != nullptr;
  const Symbol fixed_b = 1 + rng.uniform_index(spec.m_b());
  for (std::size_t i = 0; i < k; ++i) {
    inputs.a_samples.push_back(1 + rng.uniform_index(spec.m_a()));
    inputs.b_samples.push_back(constant_b ? fixed_b
                                          : 1 + rng.uniform_index(spec.m_b()));
  }
  return inputs;
}

double exact_abort_probability(const Protocol& protocol, double p) {
  if (const auto* swot = dynamic_cast<const SwotProtocol*>(&protocol)) {
    const SwotConfig& cfg = swot->config();
    return abort_probability_exact(p, cfg.n, cfg.k,
                                   static_cast<int>(cfg.m));
  }
  if (const auto* boot = dynamic_cast<const BootProtocol*>(&protocol)) {
    const BootParams& params = boot->params();
    if (params.levels() == 1)
      return abort_probability_exact(p, boot->level_sizes().front(), params.k,
                                     static_cast<int>(params.branching.front()));
    // Pooled mode aborts exactly when the combined needs exceed the one
    // partition; fresh mode needs every independent slice to suffice.
    std::size_t total_n = 0;
    std::size_t need_non_erased = 0;
    std::size_t need_erased = 0;
    double no_abort = 1.0;
    for (std::size_t i = 0; i < params.levels(); ++i) {
      const std::size_t n_i = boot->level_sizes()[i];
      total_n += n_i;
      need_non_erased += params.k;
      need_erased += params.k * (params.branching[i] - 1);
      no_abort *= 1.0 - abort_probability_exact(
                            p, n_i, params.k,
                            static_cast<int>(params.branching[i]));
    }
    if (boot->resource_mode() == BootResourceMode::pooled)
      return abort_probability_window(p, total_n, need_non_erased, need_erased);
    return 1.0 - no_abort;
  }
  if (const auto* gsfc = dynamic_cast<const GsfcProtocol*>(&protocol)) {
    const GsfcConfig& cfg = gsfc->config();
    const ResourceDemand demand = gsfc->resource_demand();
    double no_abort = 1.0;
    if (demand.forward > 0)
      no_abort *= 1.0 - abort_probability_exact(
                            p, demand.forward,
                            cfg.k * static_cast<std::size_t>(cfg.spec.h_b()),
                            static_cast<int>(cfg.spec.m_b()));
    if (demand.reverse > 0)
      no_abort *= 1.0 - abort_probability_exact(
                            p, demand.reverse,
                            cfg.k * static_cast<std::size_t>(cfg.spec.h_a()),
                            static_cast<int>(cfg.spec.m_a()));
    return 1.0 - no_abort;
  }
  throw ParamError("no exact abort computation for this protocol");
}

namespace {

struct TrialOutcome {
  bool aborted = false;
  bool alice_error = false;
  bool bob_error = false;
  bool incorrect_non_aborted = false;
  bool abort_mismatch = false;
};

TrialOutcome run_trial(const Protocol& protocol, const ErasureParams& params,
                       ResourceModel model, std::uint64_t seed,
                       std::size_t trial) {
  const std::string label = "trial/" + std::to_string(trial);
  RandomnessStream source_rng(seed, label + "/source");
  RandomnessStream noise_rng(seed, label + "/noise");
  RandomnessStream alice_rng(seed, label + "/alice");
  RandomnessStream bob_rng(seed, label + "/bob");

  const SourceSamples inputs = sample_inputs(protocol, source_rng);
  const ResourceDemand demand = protocol.resource_demand();
  ErasureSequence forward =
      make_resource(model, params, demand.forward, alice_rng, noise_rng);
  // Reverse direction: Bob feeds the channel.
  ErasureSequence reverse =
      make_resource(model, params, demand.reverse, bob_rng, noise_rng);

  std::optional<bool> predicted;
  if (const auto* swot = dynamic_cast<const SwotProtocol*>(&protocol)) {
    const IndexPartition part = partition_indices(forward);
    predicted = swot_abort_predicted(part.non_erased.size(),
                                     part.erased.size(), swot->config().k,
                                     swot->config().m);
  }

  const SessionResult result = run_session(protocol, inputs, std::move(forward),
                                           std::move(reverse), alice_rng,
                                           bob_rng);
  const FunctionOutputs truth =
      eval_functions(protocol.function_spec(), inputs);
  const CorrectnessFlags flags = check_correctness(result, truth);

  TrialOutcome outcome;
  outcome.aborted = result.transcript.aborted;
  outcome.alice_error = !flags.alice_correct;
  outcome.bob_error = !flags.bob_correct;
  outcome.incorrect_non_aborted =
      !result.transcript.aborted && (!flags.alice_correct || !flags.bob_correct);
  outcome.abort_mismatch =
      predicted.has_value() && *predicted != result.transcript.aborted;
  return outcome;
}

}  // namespace

SimulationSummary run_simulation(const SimulationTask& task) {
  if (!task.protocol) throw ParamError("simulation needs a protocol");
  if (task.trials == 0) throw ParamError("simulation needs trials >= 1");
  const Protocol& protocol = *task.protocol;
  const ErasureParams params(task.p);

  std::vector<TrialOutcome> outcomes(task.trials);
  unsigned workers = task.workers != 0 ? task.workers
                                       : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, 32));
  if (workers == 1 || task.trials < 64) {
    for (std::size_t t = 0; t < task.trials; ++t)
      outcomes[t] = run_trial(protocol, params, task.model, task.seed, t);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < task.trials; t += workers)
            outcomes[t] = run_trial(protocol, params, task.model, task.seed, t);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  SimulationSummary summary;
  summary.trials = task.trials;
  for (const TrialOutcome& o : outcomes) {
    summary.aborts += o.aborted;
    summary.alice_errors += o.alice_error;
    summary.bob_errors += o.bob_error;
    summary.incorrect_non_aborted += o.incorrect_non_aborted;
    summary.abort_mismatches += o.abort_mismatch;
  }
  summary.abort_rate = static_cast<double>(summary.aborts) /
                       static_cast<double>(summary.trials);
  summary.exact_abort_probability = exact_abort_probability(protocol, task.p);
  const ResourceDemand demand = protocol.resource_demand();
  summary.resource_per_trial = demand.forward + demand.reverse;
  return summary;
}

}  // namespace otsfc
