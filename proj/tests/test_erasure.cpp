#include <doctest.h>

#include <cmath>
#include <map>

#include "otsfc/erasure.hpp"

using namespace otsfc;

namespace {

// Independent tail oracle: P(Binomial(n, q) <= lo or >= hi) via lgamma terms.
double binomial_tail_outside(std::size_t n, double q, std::size_t lo,
                             std::size_t hi) {
  double outside = 0.0;
  for (std::size_t s = 0; s <= n; ++s) {
    if (s >= lo && s <= hi) continue;
    const double log_term = std::lgamma(static_cast<double>(n) + 1.0) -
                            std::lgamma(static_cast<double>(s) + 1.0) -
                            std::lgamma(static_cast<double>(n - s) + 1.0) +
                            static_cast<double>(s) * std::log(q) +
                            static_cast<double>(n - s) * std::log1p(-q);
    outside += std::exp(log_term);
  }
  return outside;
}

std::string sequence_key(const ErasureSequence& seq) {
  std::string key;
  for (std::uint8_t b : seq.x) key.push_back(static_cast<char>('0' + b));
  key.push_back('|');
  for (ErasedBit y : seq.y)
    key.push_back(static_cast<char>('0' + static_cast<int>(y)));
  return key;
}

}  // namespace

TEST_CASE("p=0 never erases, p=1 always erases") {
  RandomnessStream rng(1, "erasure/ends");
  const ErasureSequence clean = sample_bes(ErasureParams(0.0), 64, rng);
  for (std::size_t i = 0; i < clean.size(); ++i)
    CHECK(bit_value(clean.y[i]) == clean.x[i]);
  CHECK(partition_indices(clean).erased.empty());

  const ErasureSequence gone = sample_bes(ErasureParams(1.0), 64, rng);
  for (ErasedBit y : gone.y) CHECK(is_erased(y));
  CHECK(partition_indices(gone).non_erased.empty());
}

TEST_CASE("erasure fraction concentrates at p") {
  const std::size_t n = 100000;
  // The oracle says a 0.01 deviation at n=1e5 is a < 1e-9 event.
  const double outside = binomial_tail_outside(
      n, 0.5, static_cast<std::size_t>(n * 0.49),
      static_cast<std::size_t>(n * 0.51));
  CHECK(outside < 1e-9);

  RandomnessStream rng(2, "erasure/conc");
  const ErasureSequence seq = sample_bes(ErasureParams(0.5), n, rng);
  const double fraction =
      static_cast<double>(partition_indices(seq).erased.size()) / n;
  CHECK(std::abs(fraction - 0.5) < 0.01);
}

TEST_CASE("channel transmission echoes inputs and replays by seed") {
  const std::vector<std::uint8_t> inputs{1, 0, 1, 1, 0, 0, 1, 0};
  RandomnessStream a(3, "erasure/replay");
  RandomnessStream b(3, "erasure/replay");
  const ErasureSequence s1 =
      simulate_bec_transmission(ErasureParams(0.3), inputs, a);
  const ErasureSequence s2 =
      simulate_bec_transmission(ErasureParams(0.3), inputs, b);
  CHECK(s1 == s2);
  CHECK(s1.x == inputs);
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (!is_erased(s1.y[i])) CHECK(bit_value(s1.y[i]) == inputs[i]);

  RandomnessStream c(3, "erasure/zero");
  const ErasureSequence clean = simulate_bec_transmission(
      ErasureParams(0.0), std::vector<std::uint8_t>(5, 0), c);
  for (ErasedBit y : clean.y) CHECK(bit_value(y) == 0);
}

TEST_CASE("channel under uniform inputs equals the source model exactly") {
  // Exact distribution comparison over all realizations at n <= 4.
  for (std::size_t n : {1u, 2u, 4u}) {
    for (double p : {0.25, 0.5}) {
      std::map<std::string, double> source_dist, channel_dist;
      ErasureSequence current;
      enumerate_paths(
          [&](RandomSource& rng) {
            current = sample_bes(ErasureParams(p), n, rng);
          },
          [&](double prob) { source_dist[sequence_key(current)] += prob; },
          1.0, 1u << 22);
      enumerate_paths(
          [&](RandomSource& rng) {
            std::vector<std::uint8_t> inputs(n);
            for (auto& b : inputs) b = rng.bit();
            current = simulate_bec_transmission(ErasureParams(p), inputs, rng);
          },
          [&](double prob) { channel_dist[sequence_key(current)] += prob; },
          1.0, 1u << 22);
      REQUIRE(source_dist.size() == channel_dist.size());
      for (const auto& [key, prob] : source_dist)
        CHECK(channel_dist.at(key) == doctest::Approx(prob).epsilon(1e-12));
    }
  }
}

TEST_CASE("erasure pattern distribution does not depend on the inputs") {
  const std::size_t n = 4;
  const double p = 0.375;
  std::map<std::string, double> reference;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    std::vector<std::uint8_t> inputs(n);
    for (std::size_t i = 0; i < n; ++i) inputs[i] = (x >> i) & 1u;
    std::map<std::string, double> pattern_dist;
    ErasureSequence current;
    enumerate_paths(
        [&](RandomSource& rng) {
          current = simulate_bec_transmission(ErasureParams(p), inputs, rng);
        },
        [&](double prob) {
          std::string key;
          for (ErasedBit y : current.y)
            key.push_back(is_erased(y) ? 'e' : '-');
          pattern_dist[key] += prob;
        },
        1.0, 1u << 20);
    if (x == 0) {
      reference = pattern_dist;
    } else {
      REQUIRE(pattern_dist.size() == reference.size());
      for (const auto& [key, prob] : reference)
        CHECK(pattern_dist.at(key) == doctest::Approx(prob).epsilon(1e-12));
    }
  }
}

TEST_CASE("partition reads off erasure locations") {
  ErasureSequence seq;
  seq.x = {0, 1, 1};
  seq.y = {ErasedBit::zero, ErasedBit::erased, ErasedBit::one};
  const IndexPartition part = partition_indices(seq);
  CHECK(part.non_erased == std::vector<std::uint32_t>{1, 3});
  CHECK(part.erased == std::vector<std::uint32_t>{2});
}

TEST_CASE("draws without replacement") {
  RandomnessStream rng(4, "erasure/draw");
  const std::vector<std::uint32_t> singleton{5};
  CHECK(draw_without_replacement(singleton, 1, rng) ==
        std::vector<std::uint32_t>{5});
  CHECK(draw_without_replacement(singleton, 0, rng).empty());
  CHECK_THROWS_AS(draw_without_replacement(singleton, 2, rng),
                  InsufficientPoolError);
}

TEST_CASE("ordered draws are uniform over arrangements") {
  // Exact check by enumeration.
  const std::vector<std::uint32_t> pool{1, 2, 3};
  std::map<std::string, double> arrangement_dist;
  std::string current;
  enumerate_paths(
      [&](RandomSource& rng) {
        const auto draw = draw_without_replacement(pool, 2, rng);
        current.clear();
        for (auto v : draw) current.push_back(static_cast<char>('0' + v));
      },
      [&](double prob) { arrangement_dist[current] += prob; }, 1.0, 1000);
  CHECK(arrangement_dist.size() == 6);
  for (const auto& [key, prob] : arrangement_dist)
    CHECK(prob == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  // Seeded frequency check on the two-element pool.
  RandomnessStream rng(5, "erasure/freq");
  const std::vector<std::uint32_t> two{1, 2};
  int first_leads = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t)
    if (draw_without_replacement(two, 2, rng).front() == 1) ++first_leads;
  const double frequency = static_cast<double>(first_leads) / trials;
  CHECK(std::abs(frequency - 0.5) < 0.02);
}
