#pragma once

#include <optional>
#include <span>

#include "otsfc/session.hpp"

namespace otsfc {

/// 1-out-of-m sample-wise OT over k samples, fed by n erasure samples.
struct SwotConfig {
  std::size_t k;
  std::size_t m;
  std::size_t n;
  /// Insecure variant: concealed pad indices drawn with replacement, so one
  /// erased bit can pad two concealed positions. Kept as a regression canary
  /// for the privacy auditor.
  bool concealed_with_replacement = false;

  SwotConfig(std::size_t k_, std::size_t m_, std::size_t n_,
             bool with_replacement = false)
      : k(k_), m(m_), n(n_), concealed_with_replacement(with_replacement) {
    if (m < 2 || k < 1 || n < 1)
      throw ParamError("sample-wise OT needs m >= 2, k >= 1, n >= 1");
  }
};

using SelectionMatrix = SelectionMatrixPayload;

/// Index pools the receiver draws from; ascending 1-based positions into the
/// resource. Separate pools keep the revealed and concealed draws
/// independent, and global distinctness of all k*m entries follows from
/// drawing without replacement from disjoint pools.
struct OtPools {
  std::vector<std::uint32_t> non_erased;
  std::vector<std::uint32_t> erased;
};

/// Receiver's arrangement step: abort (nullopt) when k > |S| or
/// k(m-1) > |S_e|; otherwise place a without-replacement draw from S at the
/// selected positions (row-major) and one from S_e at the rest (row-major).
std::optional<SelectionMatrix> swot_bob_build_selection(
    const IndexPartition& partition, std::span<const Symbol> b_samples,
    const SwotConfig& cfg, RandomSource& rng);

/// Sender's step: C(i,j) = A(i,j) xor X_{U(i,j)}.
BitMatrix swot_alice_encrypt(const BitMatrix& a_matrix,
                             const SelectionMatrix& u,
                             std::span<const std::uint8_t> x);

/// Receiver's step: estimate_i = C(i,B_i) xor Y_{U(i,B_i)}. An erased symbol
/// at a selected index violates the arrangement's construction and raises.
std::vector<Bit> swot_bob_decode(const BitMatrix& c, const SelectionMatrix& u,
                                 std::span<const ErasedBit> y,
                                 std::span<const Symbol> b_samples);

enum class ResourceDir { forward, reverse };

/// Runs one complete sample-wise OT exchange inside an existing session:
/// selection message from the receiver, cipher message back, local decode.
/// Draws come from `pools` (used entries are removed, so several exchanges
/// can share one partition). Returns the decoded bits, or nullopt after
/// sending the abort notice.
std::optional<std::vector<Bit>> ot_exchange(Session& session, Party sender,
                                            const SwotConfig& cfg,
                                            ResourceDir dir,
                                            const BitMatrix& sender_matrix,
                                            std::span<const Symbol> selections,
                                            OtPools& pools);

/// The full protocol: Alice holds k samples of m-bit tuples (as alphabet
/// symbols), Bob selects one coordinate per sample and learns exactly those
/// bits; Alice's function is constant 0.
class SwotProtocol final : public Protocol {
 public:
  explicit SwotProtocol(SwotConfig cfg) : cfg_(cfg) {}

  std::string name() const override { return "swot"; }
  std::size_t sample_count() const override { return cfg_.k; }
  ResourceDemand resource_demand() const override { return {cfg_.n, 0}; }
  FunctionSpec function_spec() const override {
    return FunctionSpec::selection(static_cast<int>(cfg_.m));
  }
  void execute(Session& session) const override;

  const SwotConfig& config() const { return cfg_; }

 private:
  SwotConfig cfg_;
};

/// One-call session runner.
SessionResult swot_full(const SourceSamples& inputs, ErasureSequence resource,
                        const SwotConfig& cfg, RandomSource& alice_rng,
                        RandomSource& bob_rng);

/// The abort event depends on the erasure pattern alone.
inline bool swot_abort_predicted(std::size_t non_erased_count,
                                 std::size_t erased_count, std::size_t k,
                                 std::size_t m) {
  return k > non_erased_count || k * (m - 1) > erased_count;
}

}  // namespace otsfc
