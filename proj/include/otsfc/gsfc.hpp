#pragma once

#include <iosfwd>
#include <span>

#include "otsfc/swot.hpp"

namespace otsfc {

/// Reduces general two-party function computation to two opposite-direction
/// sample-wise OTs over precomputed function-value strings.
struct GsfcConfig {
  FunctionSpec spec;
  std::size_t k;
  std::size_t n_forward;  // Alice -> Bob direction (delivers g-values)
  std::size_t n_reverse;  // Bob -> Alice direction (delivers f-values)
  /// Opt-in: when g determines f, Bob derives Alice's values from his own
  /// output and sends them in the clear instead of running the reverse OT.
  bool single_ot = false;
};

enum class TransferDirection { alice_to_bob, bob_to_alice };

/// The selecting party's choice strings: for alice_to_bob, string i holds
/// the h_B-bit encodings of g(A_t, i) for t = 1..k concatenated; for
/// bob_to_alice, string j holds the encodings of f(j, B_t).
std::vector<BitString> gsfc_build_strings(const FunctionSpec& spec,
                                          std::span<const Symbol> own_samples,
                                          TransferDirection direction);

/// Repeats each source sample h times so per-bit selections address whole
/// h-bit output groups.
std::vector<Symbol> gsfc_expand_selection(std::span<const Symbol> samples,
                                          int h);

class GsfcProtocol final : public Protocol {
 public:
  explicit GsfcProtocol(GsfcConfig cfg);

  std::string name() const override { return "gsfc"; }
  std::size_t sample_count() const override { return cfg_.k; }
  ResourceDemand resource_demand() const override;
  FunctionSpec function_spec() const override { return cfg_.spec; }
  void execute(Session& session) const override;

  const GsfcConfig& config() const { return cfg_; }

 private:
  GsfcConfig cfg_;
  std::vector<RangeValue> f_from_g_;  // single-OT derivation map
};

/// One-call session runner.
SessionResult gsfc_full(const SourceSamples& inputs, ErasureSequence forward,
                        ErasureSequence reverse, const GsfcConfig& cfg,
                        RandomSource& alice_rng, RandomSource& bob_rng);

struct GsfcSizes {
  std::size_t forward = 0;
  std::size_t reverse = 0;
};

/// Per-direction sample budgets: ceil(k*h / ((1-slack) * R)) with the OT
/// rate of the direction's selecting alphabet; zero-width directions (and
/// the reverse direction under single-OT mode) need no samples.
GsfcSizes gsfc_direction_sizes(double p, const FunctionSpec& spec,
                               std::size_t k, double slack, bool single_ot);

/// Plain-text function table: first line "m_A m_B |Rf| |Rg|", then one line
/// "a b f(a,b) g(a,b)" per cell with 1-based a, b.
FunctionSpec parse_function_table(std::istream& in);
std::string format_function_table(const FunctionSpec& spec);

}  // namespace otsfc
