#include <doctest.h>

#include <cmath>
#include <map>

#include "otsfc/random.hpp"

using namespace otsfc;

TEST_CASE("identical (seed, stream-id) replays identically") {
  RandomnessStream a(42, "unit");
  RandomnessStream b(42, "unit");
  for (int i = 0; i < 200; ++i) CHECK(a.uniform_index(97) == b.uniform_index(97));
}

TEST_CASE("distinct stream ids diverge") {
  RandomnessStream a(42, "alice");
  RandomnessStream b(42, "bob");
  int differing = 0;
  for (int i = 0; i < 64; ++i)
    if (a.uniform_index(1u << 30) != b.uniform_index(1u << 30)) ++differing;
  CHECK(differing > 32);
}

TEST_CASE("substream derivation is draw-independent") {
  RandomnessStream parent(5, "root");
  RandomnessStream before = parent.substream("child");
  parent.uniform_index(1000);
  RandomnessStream after = parent.substream("child");
  for (int i = 0; i < 50; ++i)
    CHECK(before.uniform_index(31) == after.uniform_index(31));
}

TEST_CASE("uniform_index stays in range and bound 1 consumes nothing") {
  RandomnessStream rng(3, "range");
  for (int i = 0; i < 1000; ++i) CHECK(rng.uniform_index(7) < 7);
  CHECK_THROWS_AS(rng.uniform_index(0), ParamError);

  RandomnessStream with(9, "consume");
  RandomnessStream without(9, "consume");
  CHECK(with.uniform_index(1) == 0);
  CHECK(with.uniform_index(1u << 20) == without.uniform_index(1u << 20));
}

TEST_CASE("bernoulli endpoints are deterministic") {
  RandomnessStream rng(4, "bern");
  for (int i = 0; i < 32; ++i) {
    CHECK(rng.bernoulli(0.0) == false);
    CHECK(rng.bernoulli(1.0) == true);
  }
  CHECK_THROWS_AS(rng.bernoulli(-0.1), ParamError);
  CHECK_THROWS_AS(rng.bernoulli(1.5), ParamError);
}

TEST_CASE("tape enumeration covers the full product space with mass 1") {
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> outcomes;
  double total = 0.0;
  std::pair<std::uint32_t, std::uint32_t> current;
  enumerate_paths(
      [&](RandomSource& rng) {
        current = {rng.uniform_index(2), rng.uniform_index(6)};
      },
      [&](double prob) {
        outcomes[current] += prob;
        total += prob;
      },
      1.0, 1u << 20);
  CHECK(outcomes.size() == 12);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& [key, prob] : outcomes)
    CHECK(prob == doctest::Approx(1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("tape enumeration weights bernoulli branches") {
  double true_mass = 0.0, total = 0.0;
  bool current = false;
  enumerate_paths(
      [&](RandomSource& rng) { current = rng.bernoulli(0.25); },
      [&](double prob) {
        total += prob;
        if (current) true_mass += prob;
      },
      1.0, 100);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(true_mass == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("tape enumeration handles variable-depth paths") {
  // A second draw happens only on one branch; leaf probabilities still sum
  // to 1.
  double total = 0.0;
  int leaves = 0;
  enumerate_paths(
      [&](RandomSource& rng) {
        if (rng.uniform_index(3) == 0) rng.uniform_index(4);
      },
      [&](double prob) {
        total += prob;
        ++leaves;
      },
      1.0, 100);
  CHECK(leaves == 6);  // 4 + 2
  CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("degenerate bernoulli branches are pruned") {
  int leaves = 0;
  enumerate_paths(
      [&](RandomSource& rng) {
        rng.bernoulli(1.0);
        rng.bernoulli(0.0);
        rng.uniform_index(1);
      },
      [&](double) { ++leaves; }, 1.0, 100);
  CHECK(leaves == 1);
}

TEST_CASE("enumeration cap raises a capacity error") {
  CHECK_THROWS_AS(enumerate_paths([&](RandomSource& rng) { rng.uniform_index(64); },
                                  [&](double) {}, 1.0, 10),
                  EnumerationCapError);
}

TEST_CASE("recording source logs drawn values") {
  std::vector<std::uint64_t> log;
  RandomnessStream inner(6, "rec");
  RecordingSource rec(inner, log);
  const auto v0 = rec.uniform_index(10);
  const auto v1 = rec.bit();
  const bool v2 = rec.bernoulli(0.5);
  REQUIRE(log.size() == 3);
  CHECK(log[0] == v0);
  CHECK(log[1] == v1);
  CHECK(log[2] == (v2 ? 1 : 0));
}
