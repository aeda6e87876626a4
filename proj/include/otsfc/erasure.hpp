#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "otsfc/errors.hpp"
#include "otsfc/random.hpp"

namespace otsfc {

/// Symbol alphabet on the receiving side of the erasure source/channel:
/// 0, 1, or the erasure mark. The mark is its own alphabet value, never an
/// in-band bit encoding.
enum class ErasedBit : std::uint8_t { zero = 0, one = 1, erased = 2 };

inline bool is_erased(ErasedBit s) { return s == ErasedBit::erased; }
inline std::uint8_t bit_value(ErasedBit s) {
  if (is_erased(s)) throw DomainError("erased symbol carries no bit value");
  return static_cast<std::uint8_t>(s);
}

struct ErasureParams {
  double p;  // probability of erasure

  explicit ErasureParams(double p_) : p(p_) {
    if (!(p >= 0.0 && p <= 1.0))
      throw ParamError("erasure probability must lie in [0,1]");
  }
};

/// Paired realization of the correlated-randomness resource: Alice holds the
/// inputs X^n, Bob the outputs Y^n where each Y_i is X_i or erased.
struct ErasureSequence {
  std::vector<std::uint8_t> x;  // sender side, bits
  std::vector<ErasedBit> y;     // receiver side

  std::size_t size() const { return x.size(); }
  bool operator==(const ErasureSequence&) const = default;
};

/// Locations of non-erasures S and erasures S_e, each sorted ascending,
/// 1-based, partitioning {1..n}.
struct IndexPartition {
  std::vector<std::uint32_t> non_erased;
  std::vector<std::uint32_t> erased;
};

/// n iid samples of the binary erasure source: X uniform bits, each output
/// independently erased with probability p.
ErasureSequence sample_bes(const ErasureParams& params, std::size_t n,
                           RandomSource& rng);

/// Sends caller-chosen inputs through the binary erasure channel.
ErasureSequence simulate_bec_transmission(const ErasureParams& params,
                                          std::span<const std::uint8_t> inputs,
                                          RandomSource& rng);

/// Splits {1..n} by erasure status of the receiver side.
IndexPartition partition_indices(const ErasureSequence& seq);
IndexPartition partition_indices(std::span<const ErasedBit> y);

/// Uniformly random ordered arrangement of `count` distinct elements of
/// `pool` (a partial Fisher-Yates draw).
std::vector<std::uint32_t> draw_without_replacement(
    std::span<const std::uint32_t> pool, std::size_t count, RandomSource& rng);

}  // namespace otsfc
