#include "otsfc/session.hpp"

namespace otsfc {

Session::Session(const SourceSamples& inputs, ErasureSequence forward,
                 ErasureSequence reverse, RandomSource& alice_rng,
                 RandomSource& bob_rng)
    : k_(inputs.k()),
      alice_inputs_(inputs.a_samples),
      bob_inputs_(inputs.b_samples),
      forward_(std::move(forward)),
      reverse_(std::move(reverse)),
      alice_recorder_(alice_rng, alice_record_),
      bob_recorder_(bob_rng, bob_record_) {
  if (inputs.a_samples.size() != inputs.b_samples.size())
    throw DimensionError("source sample sequences must have equal length");
}

void Session::send(Party from, Payload payload) {
  if (aborted_) throw Error("no messages may follow an abort notice");
  messages_.push_back(
      Message{messages_.size() + 1, from, std::move(payload)});
}

void Session::send_abort(Party from) {
  send(from, AbortPayload{});
  aborted_ = true;
}

SessionResult Session::finish(std::size_t resource_usage) {
  SessionResult result;
  result.transcript.messages = messages_;
  result.transcript.resource_usage = resource_usage;
  result.transcript.aborted = aborted_;

  auto build_view = [&](Party role) {
    PartyView view;
    view.role = role;
    view.private_inputs = inputs_of(role);
    if (forward_.size() > 0) {
      ResourceSideView side;
      side.label = "fwd";
      if (role == Party::alice)
        side.x = forward_.x;
      else
        side.y = forward_.y;
      view.resource_sides.push_back(std::move(side));
    }
    if (reverse_.size() > 0) {
      ResourceSideView side;
      side.label = "rev";
      if (role == Party::bob)
        side.x = reverse_.x;
      else
        side.y = reverse_.y;
      view.resource_sides.push_back(std::move(side));
    }
    view.local_randomness_record =
        role == Party::alice ? alice_record_ : bob_record_;
    for (const auto& m : messages_)
      if (m.sender == other(role)) view.received_messages.push_back(m);
    return view;
  };

  result.alice_view = build_view(Party::alice);
  result.bob_view = build_view(Party::bob);
  result.outputs.f_est = f_est_;
  result.outputs.g_est = g_est_;
  return result;
}

SessionResult run_session(const Protocol& protocol, const SourceSamples& inputs,
                          ErasureSequence forward, ErasureSequence reverse,
                          RandomSource& alice_rng, RandomSource& bob_rng) {
  const ResourceDemand demand = protocol.resource_demand();
  if (forward.size() != demand.forward || reverse.size() != demand.reverse)
    throw DimensionError("resource length does not match protocol demand");
  if (inputs.k() != protocol.sample_count())
    throw DimensionError("input length does not match protocol sample count");
  Session session(inputs, std::move(forward), std::move(reverse), alice_rng,
                  bob_rng);
  protocol.execute(session);
  return session.finish(demand.forward + demand.reverse);
}

SessionResult run_session(const Protocol& protocol, const SourceSamples& inputs,
                          ErasureSequence forward, RandomSource& alice_rng,
                          RandomSource& bob_rng) {
  return run_session(protocol, inputs, std::move(forward), ErasureSequence{},
                     alice_rng, bob_rng);
}

CorrectnessFlags check_correctness(const SessionResult& result,
                                   const FunctionOutputs& truth) {
  if (result.outputs.f_est.size() != truth.f_true.size() ||
      result.outputs.g_est.size() != truth.g_true.size())
    throw DimensionError("estimate/truth length mismatch");
  CorrectnessFlags flags;
  flags.alice_correct = result.outputs.f_est == truth.f_true;
  flags.bob_correct = result.outputs.g_est == truth.g_true;
  return flags;
}

}  // namespace otsfc
