#pragma once

#include <span>

#include "otsfc/gf2.hpp"
#include "otsfc/swot.hpp"

namespace otsfc {

/// Parameters of the bootstrapped 1-out-of-m string OT: a branching sequence
/// s_1..s_u over tree levels whose leaf count covers the m strings.
struct BootParams {
  std::size_t k;                      // string length in bits
  std::size_t m;                      // number of strings
  std::vector<std::size_t> branching;  // s_1..s_u, each in {2..m}

  BootParams(std::size_t k_, std::size_t m_, std::vector<std::size_t> s)
      : k(k_), m(m_), branching(std::move(s)) {
    if (k < 1 || m < 2) throw ParamError("need k >= 1 and m >= 2");
    if (branching.empty()) throw ParamError("branching sequence must be nonempty");
    std::size_t product = 1;
    for (std::size_t s_i : branching) {
      if (s_i < 2 || s_i > m) throw ParamError("branching values must lie in {2..m}");
      product *= s_i;
    }
    if (product < m)
      throw ParamError("branching product must cover the string count");
  }

  std::size_t levels() const { return branching.size(); }
};

/// Which mask each string takes at each level: digits(j) is the mixed-radix
/// expansion of j-1 over radices s_1..s_u, most significant level first,
/// shifted to 1-based digits. Injective over {1..m}; leaf combinations past
/// m carry no string.
struct EncodingAssignment {
  std::vector<std::size_t> radices;
  std::vector<std::vector<Symbol>> digits;  // digits[j-1][i-1] in {1..s_i}

  Symbol digit(std::size_t j, std::size_t level) const {
    return digits[j - 1][level - 1];
  }
};

EncodingAssignment boot_assign(const BootParams& params);

/// Per-level mask strings Z_{i,1}..Z_{i,s_i}, each k iid fair bits.
struct MaskTable {
  std::vector<std::vector<BitString>> masks;  // [level][option]

  const BitString& mask(std::size_t level, Symbol option) const {
    return masks[level - 1][option - 1];
  }
};

MaskTable boot_generate_masks(const BootParams& params, RandomSource& rng);

/// Encoded strings: cipher_j = string_j xor (its assigned mask per level).
std::vector<BitString> boot_encode(const std::vector<BitString>& a_strings,
                                   const MaskTable& masks,
                                   const EncodingAssignment& assignment);

/// Everything Bob can derive linearly over GF(2) about the strings after the
/// protocol, with mask variables eliminated: an RREF basis over string
/// indices (bit j-1 stands for string j).
struct KnowledgeSpan {
  std::size_t m = 0;
  std::vector<std::uint64_t> basis;
};

KnowledgeSpan boot_knowledge_span(const EncodingAssignment& assignment,
                                  Symbol b);

/// How the erasure samples are provisioned across the per-level OTs.
enum class BootResourceMode {
  fresh,   // disjoint slice of the sequence per level
  pooled,  // one pool drawn upfront, erasures/non-erasures allocated on use
};

/// The full protocol. With a single level it is exactly the sample-wise OT
/// on the strings (no masks, same transcript); with more levels it first
/// sends the encoded strings, then runs one small OT per level so Bob
/// collects precisely the masks covering his string.
class BootProtocol final : public Protocol {
 public:
  BootProtocol(BootParams params, std::vector<std::size_t> level_sizes,
               BootResourceMode mode = BootResourceMode::fresh);

  std::string name() const override { return "boot"; }
  std::size_t sample_count() const override { return params_.k; }
  ResourceDemand resource_demand() const override { return {total_n_, 0}; }
  FunctionSpec function_spec() const override {
    return FunctionSpec::selection(static_cast<int>(params_.m));
  }
  void execute(Session& session) const override;

  const BootParams& params() const { return params_; }
  const std::vector<std::size_t>& level_sizes() const { return level_sizes_; }
  BootResourceMode resource_mode() const { return mode_; }

 private:
  BootParams params_;
  std::vector<std::size_t> level_sizes_;
  BootResourceMode mode_;
  std::size_t total_n_;
};

/// Session inputs for string OT: the m k-bit strings as Alice's tuple
/// samples (string j = column j) and Bob's constant selection.
SourceSamples string_ot_inputs(const std::vector<BitString>& strings,
                               Symbol b);

/// Alice's strings from her tuple samples (string j = bit j of each sample).
std::vector<BitString> strings_from_samples(std::span<const Symbol> a_samples,
                                            std::size_t m);

/// Per-level sample budgets n_i = ceil(k / ((1-slack) * R_i)) from the
/// per-level OT rates at erasure probability p.
std::vector<std::size_t> boot_level_sizes(double p, const BootParams& params,
                                          double slack);

/// Splits a fixed total across levels proportionally to each level's
/// inverse rate (largest-remainder rounding).
std::vector<std::size_t> boot_split_total(double p, const BootParams& params,
                                          std::size_t total_n);

}  // namespace otsfc
