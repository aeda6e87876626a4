#pragma once

#include <memory>

#include "otsfc/boot.hpp"
#include "otsfc/gsfc.hpp"
#include "otsfc/rates.hpp"
#include "otsfc/swot.hpp"

namespace otsfc {

enum class ResourceModel { source, channel };

/// Realizes the correlated randomness: source model samples the joint
/// directly; channel model has the feeding party push its own uniform bits
/// through the erasure channel. The two produce identical distributions.
ErasureSequence make_resource(ResourceModel model, const ErasureParams& params,
                              std::size_t n, RandomSource& feeder_rng,
                              RandomSource& noise_rng);

/// Uniform iid inputs over the protocol's alphabets; string-OT protocols get
/// a constant selection.
SourceSamples sample_inputs(const Protocol& protocol, RandomSource& rng);

struct SimulationTask {
  std::shared_ptr<const Protocol> protocol;
  double p = 0.5;
  ResourceModel model = ResourceModel::source;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 0;  // 0 = hardware concurrency
};

struct SimulationSummary {
  std::size_t trials = 0;
  std::size_t aborts = 0;
  std::size_t alice_errors = 0;
  std::size_t bob_errors = 0;
  /// Correctness violations outside aborts; the protocols guarantee zero.
  std::size_t incorrect_non_aborted = 0;
  /// Sessions where the abort flag disagreed with the erasure-count
  /// predicate (sample-wise OT only); must be zero.
  std::size_t abort_mismatches = 0;
  double abort_rate = 0.0;
  double exact_abort_probability = 0.0;
  std::size_t resource_per_trial = 0;
};

/// Runs seeded trials (fanned across workers, aggregated in a fixed order,
/// so the summary is reproducible) and compares the abort frequency against
/// the exact binomial computation.
SimulationSummary run_simulation(const SimulationTask& task);

/// Exact abort probability of a protocol instance at erasure probability p.
double exact_abort_probability(const Protocol& protocol, double p);

}  // namespace otsfc
