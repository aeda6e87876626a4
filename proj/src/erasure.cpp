#include "otsfc/erasure.hpp"

#include <algorithm>

namespace otsfc {

ErasureSequence sample_bes(const ErasureParams& params, std::size_t n,
                           RandomSource& rng) {
  std::vector<std::uint8_t> inputs(n);
  for (auto& b : inputs) b = rng.bit();
  return simulate_bec_transmission(params, inputs, rng);
}

ErasureSequence simulate_bec_transmission(const ErasureParams& params,
                                          std::span<const std::uint8_t> inputs,
                                          RandomSource& rng) {
  ErasureSequence seq;
  seq.x.assign(inputs.begin(), inputs.end());
  seq.y.reserve(inputs.size());
  for (std::uint8_t b : inputs) {
    if (b > 1) throw DomainError("channel inputs must be binary");
    seq.y.push_back(rng.bernoulli(params.p) ? ErasedBit::erased
                                            : static_cast<ErasedBit>(b));
  }
  return seq;
}

IndexPartition partition_indices(const ErasureSequence& seq) {
  return partition_indices(std::span<const ErasedBit>(seq.y));
}

IndexPartition partition_indices(std::span<const ErasedBit> y) {
  IndexPartition part;
  for (std::size_t i = 0; i < y.size(); ++i) {
    auto index = static_cast<std::uint32_t>(i + 1);
    if (is_erased(y[i]))
      part.erased.push_back(index);
    else
      part.non_erased.push_back(index);
  }
  return part;
}

std::vector<std::uint32_t> draw_without_replacement(
    std::span<const std::uint32_t> pool, std::size_t count,
    RandomSource& rng) {
  if (count > pool.size())
    throw InsufficientPoolError("draw requested more elements than pool holds");
  std::vector<std::uint32_t> scratch(pool.begin(), pool.end());
  std::vector<std::uint32_t> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t j =
        t + rng.uniform_index(static_cast<std::uint32_t>(scratch.size() - t));
    std::swap(scratch[t], scratch[j]);
    out.push_back(scratch[t]);
  }
  return out;
}

}  // namespace otsfc
