#include "otsfc/random.hpp"

#include <cmath>
#include <limits>

namespace otsfc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : label) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h));
}

RandomnessStream::RandomnessStream(std::uint64_t seed,
                                   std::string_view stream_id)
    : seed_(seed), id_(stream_id), engine_(derive_seed(seed, stream_id)) {}

RandomnessStream RandomnessStream::substream(std::string_view label) const {
  return RandomnessStream(seed_, id_ + "/" + std::string(label));
}

std::uint32_t RandomnessStream::uniform_index(std::uint32_t bound) {
  if (bound == 0) throw ParamError("uniform_index bound must be >= 1");
  if (bound == 1) return 0;
  // Rejection sampling; mt19937_64 output is fully specified by the
  // standard, so sequences replay identically across platforms.
  const std::uint64_t bucket = std::numeric_limits<std::uint64_t>::max() /
                               static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = bucket * bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return static_cast<std::uint32_t>(r / bucket);
}

bool RandomnessStream::bernoulli(double p) {
  if (p < 0.0 || p > 1.0 || std::isnan(p))
    throw ParamError("bernoulli probability must lie in [0,1]");
  if (p == 0.0) return false;
  if (p == 1.0) return true;
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint32_t TapeSource::take(std::uint32_t arity, double prob0,
                               bool weighted) {
  if (pos_ == tape_.size()) tape_.push_back({0, arity, prob0, weighted});
  const Choice& c = tape_[pos_];
  if (c.arity != arity || c.weighted != weighted)
    throw Error("enumerated computation is not deterministic in its choices");
  ++pos_;
  return c.chosen;
}

std::uint32_t TapeSource::uniform_index(std::uint32_t bound) {
  if (bound == 0) throw ParamError("uniform_index bound must be >= 1");
  if (bound == 1) return 0;
  return take(bound, 0.0, false);
}

bool TapeSource::bernoulli(double p) {
  if (p < 0.0 || p > 1.0 || std::isnan(p))
    throw ParamError("bernoulli probability must lie in [0,1]");
  if (p == 0.0) return false;
  if (p == 1.0) return true;
  // Branch 0 = true so that path order is stable.
  return take(2, p, true) == 0;
}

double TapeSource::path_probability() const {
  double prob = 1.0;
  for (std::size_t i = 0; i < pos_; ++i) {
    const Choice& c = tape_[i];
    if (c.weighted)
      prob *= (c.chosen == 0) ? c.prob0 : 1.0 - c.prob0;
    else
      prob /= static_cast<double>(c.arity);
  }
  return prob;
}

bool TapeSource::advance() {
  // The tape beyond the last replayed position belongs to abandoned deeper
  // paths and must not survive into the next iteration.
  tape_.resize(pos_);
  while (!tape_.empty()) {
    Choice& last = tape_.back();
    if (last.chosen + 1 < last.arity) {
      ++last.chosen;
      return true;
    }
    tape_.pop_back();
  }
  return false;
}

}  // namespace otsfc
