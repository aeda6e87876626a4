#pragma once

#include <optional>
#include <string>
#include <vector>

#include "otsfc/erasure.hpp"
#include "otsfc/functions.hpp"
#include "otsfc/message.hpp"
#include "otsfc/random.hpp"

namespace otsfc {

/// One party's side of one resource realization (input bits when it feeds
/// the channel/source, output symbols when it observes them).
struct ResourceSideView {
  std::string label;
  std::vector<std::uint8_t> x;
  std::vector<ErasedBit> y;

  bool operator==(const ResourceSideView&) const = default;
};

/// Everything one party sees during a session; privacy statements are about
/// exactly this tuple. A view never holds the counterpart's inputs or
/// resource side.
struct PartyView {
  Party role = Party::alice;
  std::vector<Symbol> private_inputs;
  std::vector<ResourceSideView> resource_sides;
  std::vector<std::uint64_t> local_randomness_record;
  std::vector<Message> received_messages;
};

struct SessionResult {
  Transcript transcript;
  PartyView alice_view;
  PartyView bob_view;
  FunctionOutputs outputs;
};

struct ResourceDemand {
  std::size_t forward = 0;  // Alice feeds, Bob observes
  std::size_t reverse = 0;  // Bob feeds, Alice observes
};

/// Two-party execution context. Protocol code must touch a party's inputs,
/// resource sides and randomness only through that party's accessors; the
/// recorded views then contain exactly what each party could see.
class Session {
 public:
  Session(const SourceSamples& inputs, ErasureSequence forward,
          ErasureSequence reverse, RandomSource& alice_rng,
          RandomSource& bob_rng);

  std::size_t k() const { return k_; }

  const std::vector<Symbol>& inputs_of(Party p) const {
    return p == Party::alice ? alice_inputs_ : bob_inputs_;
  }
  // Forward resource: Alice holds X, Bob holds Y. Reverse: roles swapped.
  const std::vector<std::uint8_t>& forward_x() const { return forward_.x; }
  const std::vector<ErasedBit>& forward_y() const { return forward_.y; }
  const std::vector<std::uint8_t>& reverse_x() const { return reverse_.x; }
  const std::vector<ErasedBit>& reverse_y() const { return reverse_.y; }

  RandomSource& rng_of(Party p) {
    return p == Party::alice ? alice_recorder_ : bob_recorder_;
  }

  /// Appends a discussion message; stages number from 1 upward.
  void send(Party from, Payload payload);
  /// Abort notice; must be the final message of the session.
  void send_abort(Party from);
  bool aborted() const { return aborted_; }

  const std::vector<Message>& messages() const { return messages_; }

  void set_f_estimate(std::vector<RangeValue> f_est) {
    f_est_ = std::move(f_est);
  }
  void set_g_estimate(std::vector<RangeValue> g_est) {
    g_est_ = std::move(g_est);
  }

  /// Assembles transcript, views and outputs once the protocol returns.
  SessionResult finish(std::size_t resource_usage);

 private:
  std::size_t k_;
  std::vector<Symbol> alice_inputs_;
  std::vector<Symbol> bob_inputs_;
  ErasureSequence forward_;
  ErasureSequence reverse_;
  std::vector<std::uint64_t> alice_record_;
  std::vector<std::uint64_t> bob_record_;
  RecordingSource alice_recorder_;
  RecordingSource bob_recorder_;
  std::vector<Message> messages_;
  bool aborted_ = false;
  std::vector<RangeValue> f_est_;
  std::vector<RangeValue> g_est_;
};

/// A two-party protocol executable by the engine. Implementations drive the
/// whole exchange through the Session so transcripts and views are recorded
/// uniformly.
class Protocol {
 public:
  virtual ~Protocol() = default;
  virtual std::string name() const = 0;
  virtual std::size_t sample_count() const = 0;
  virtual ResourceDemand resource_demand() const = 0;
  /// Function pair computed, for truth evaluation and correctness checks.
  virtual FunctionSpec function_spec() const = 0;
  virtual void execute(Session& session) const = 0;
};

/// Runs one session. Resource lengths must match the protocol's demand;
/// protocol-internal insufficiency surfaces as an abort, never as an error.
SessionResult run_session(const Protocol& protocol, const SourceSamples& inputs,
                          ErasureSequence forward, ErasureSequence reverse,
                          RandomSource& alice_rng, RandomSource& bob_rng);

/// Forward-only convenience overload.
SessionResult run_session(const Protocol& protocol, const SourceSamples& inputs,
                          ErasureSequence forward, RandomSource& alice_rng,
                          RandomSource& bob_rng);

struct CorrectnessFlags {
  bool alice_correct = false;
  bool bob_correct = false;
};

/// Whole-vector equality of estimates against truth values computed by
/// eval_functions on the same inputs.
CorrectnessFlags check_correctness(const SessionResult& result,
                                   const FunctionOutputs& truth);

}  // namespace otsfc
