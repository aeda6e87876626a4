#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "otsfc/errors.hpp"

namespace otsfc {

/// Source of protocol randomness. Protocols draw exclusively through this
/// interface, which is what lets the exact-enumeration auditor replace the
/// seeded stream with a branch enumerator and walk every outcome.
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Uniform value in [0, bound). bound == 1 consumes no randomness.
  virtual std::uint32_t uniform_index(std::uint32_t bound) = 0;

  /// True with probability p. p in {0,1} consumes no randomness.
  virtual bool bernoulli(double p) = 0;

  /// Fair bit.
  std::uint8_t bit() { return static_cast<std::uint8_t>(uniform_index(2)); }
};

/// Seeded, labeled randomness stream. Identical (seed, stream-id) pairs
/// reproduce identical sequences; distinct labels derived from one master
/// seed give structurally independent streams.
class RandomnessStream final : public RandomSource {
 public:
  RandomnessStream(std::uint64_t seed, std::string_view stream_id);

  /// New stream keyed by (seed, stream-id + "/" + label); independent of any
  /// draws already made from this one.
  RandomnessStream substream(std::string_view label) const;

  std::uint64_t seed() const { return seed_; }
  const std::string& stream_id() const { return id_; }

  std::uint32_t uniform_index(std::uint32_t bound) override;
  bool bernoulli(double p) override;

 private:
  std::uint64_t seed_;
  std::string id_;
  std::mt19937_64 engine_;
};

/// Mixes a seed with a label into a child seed (FNV-1a over the label, then
/// a splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

/// Decorator that logs every drawn value; the log is the party's local
/// randomness record (the Z_A / Z_B component of its view).
class RecordingSource final : public RandomSource {
 public:
  RecordingSource(RandomSource& inner, std::vector<std::uint64_t>& log)
      : inner_(&inner), log_(&log) {}

  std::uint32_t uniform_index(std::uint32_t bound) override {
    std::uint32_t v = inner_->uniform_index(bound);
    log_->push_back(v);
    return v;
  }
  bool bernoulli(double p) override {
    bool v = inner_->bernoulli(p);
    log_->push_back(v ? 1 : 0);
    return v;
  }

 private:
  RandomSource* inner_;
  std::vector<std::uint64_t>* log_;
};

/// Depth-first enumerator over every randomness outcome of a computation.
/// Each uniform_index(b) is a b-way branch of probability 1/b each; each
/// bernoulli(p) a two-way branch of probability {p, 1-p}. Zero-probability
/// branches are pruned.
class TapeSource final : public RandomSource {
 public:
  std::uint32_t uniform_index(std::uint32_t bound) override;
  bool bernoulli(double p) override;

  /// Probability of the current path (product of branch probabilities).
  double path_probability() const;
  /// Restart the computation on the current tape.
  void rewind() { pos_ = 0; }
  /// Advance to the next path; false when the tree is exhausted.
  bool advance();

 private:
  struct Choice {
    std::uint32_t chosen;
    std::uint32_t arity;
    double prob0;   // probability of branch 0
    bool weighted;  // bernoulli branch (prob0, 1-prob0) vs uniform 1/arity
  };

  std::uint32_t take(std::uint32_t arity, double prob0, bool weighted);

  std::vector<Choice> tape_;
  std::size_t pos_ = 0;
};

/// Runs `body(source)` once per randomness path and hands each path's
/// probability (times `weight`) to `sink(prob)` right after the body returns.
/// Throws EnumerationCapError when more than `cap` paths are visited.
template <typename Body, typename Sink>
void enumerate_paths(Body&& body, Sink&& sink, double weight,
                     std::size_t cap) {
  TapeSource tape;
  std::size_t paths = 0;
  do {
    if (++paths > cap)
      throw EnumerationCapError("enumeration exceeds atom cap", paths);
    tape.rewind();
    body(static_cast<RandomSource&>(tape));
    sink(weight * tape.path_probability());
  } while (tape.advance());
}

}  // namespace otsfc
