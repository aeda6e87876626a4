#include <doctest.h>

#include "otsfc/bits.hpp"
#include "otsfc/functions.hpp"
#include "otsfc/random.hpp"

using namespace otsfc;

namespace {

BitMatrix make_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.begin()->size();
  BitMatrix m(r, c);
  std::size_t i = 1;
  for (const auto& row : rows) {
    std::size_t j = 1;
    for (int v : row) m.set(i, j++, static_cast<Bit>(v));
    ++i;
  }
  return m;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, RandomSource& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) m.set(i, j, rng.bit());
  return m;
}

}  // namespace

TEST_CASE("xor_matrices on worked example") {
  const BitMatrix a = make_matrix({{1, 0}, {0, 1}});
  const BitMatrix b = make_matrix({{1, 1}, {0, 0}});
  CHECK(xor_matrices(a, b) == make_matrix({{0, 1}, {0, 1}}));
}

TEST_CASE("xor_matrices identity and self-inverse") {
  RandomnessStream rng(7, "core/xor");
  const BitMatrix zero(3, 4);
  for (int trial = 0; trial < 50; ++trial) {
    const BitMatrix a = random_matrix(3, 4, rng);
    CHECK(xor_matrices(a, a) == zero);
    CHECK(xor_matrices(a, zero) == a);
  }
}

TEST_CASE("xor round-trip property") {
  RandomnessStream rng(8, "core/roundtrip");
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng.uniform_index(5);
    const std::size_t cols = 1 + rng.uniform_index(5);
    const BitMatrix a = random_matrix(rows, cols, rng);
    const BitMatrix pad = random_matrix(rows, cols, rng);
    CHECK(xor_matrices(xor_matrices(a, pad), pad) == a);
  }
}

TEST_CASE("xor_matrices rejects shape mismatch") {
  CHECK_THROWS_AS(xor_matrices(BitMatrix(2, 2), BitMatrix(2, 3)),
                  DimensionError);
  CHECK_THROWS_AS(xor_matrices(BitMatrix(1, 2), BitMatrix(2, 2)),
                  DimensionError);
}

TEST_CASE("column extraction") {
  CHECK(column(make_matrix({{1, 0}, {0, 1}}), 1) ==
        BitString(std::vector<Bit>{1, 0}));
  // A k x 1 matrix is its own single column.
  const BitMatrix narrow = make_matrix({{1}, {0}, {1}});
  CHECK(column(narrow, 1) == BitString(std::vector<Bit>{1, 0, 1}));
  CHECK(column(BitMatrix(3, 2), 2) == BitString(3));
  CHECK_THROWS_AS(column(narrow, 2), IndexError);
  CHECK_THROWS_AS(column(narrow, 0), IndexError);
}

TEST_CASE("column/assemble round-trip") {
  RandomnessStream rng(9, "core/columns");
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng.uniform_index(6);
    const std::size_t m = 1 + rng.uniform_index(6);
    std::vector<BitString> columns;
    for (std::size_t j = 0; j < m; ++j) {
      BitString s(k);
      for (std::size_t i = 0; i < k; ++i) s.set(i, rng.bit());
      columns.push_back(std::move(s));
    }
    const BitMatrix assembled = BitMatrix::from_columns(columns);
    for (std::size_t j = 1; j <= m; ++j)
      CHECK(column(assembled, j) == columns[j - 1]);
  }
}

TEST_CASE("selection function evaluates the chosen coordinate") {
  const FunctionSpec spec = FunctionSpec::selection(2);
  // Tuple (1,0) is symbol 3 under the MSB-first encoding.
  CHECK(FunctionSpec::tuple_bit(3, 2, 1) == 1);
  CHECK(FunctionSpec::tuple_bit(3, 2, 2) == 0);
  const SourceSamples sources{{3}, {2}};
  const FunctionOutputs outputs = eval_functions(spec, sources);
  CHECK(outputs.g_true == std::vector<RangeValue>{0});
  CHECK(outputs.f_true == std::vector<RangeValue>{0});
}

TEST_CASE("constant f gives all-zero truth") {
  const FunctionSpec spec = FunctionSpec::selection(3);
  RandomnessStream rng(10, "core/constf");
  SourceSamples sources;
  for (int i = 0; i < 20; ++i) {
    sources.a_samples.push_back(1 + rng.uniform_index(8));
    sources.b_samples.push_back(1 + rng.uniform_index(3));
  }
  const FunctionOutputs outputs = eval_functions(spec, sources);
  CHECK(outputs.f_true == std::vector<RangeValue>(20, 0));
}

TEST_CASE("eval_functions handles the empty case and domain errors") {
  const FunctionSpec spec = FunctionSpec::selection(2);
  const FunctionOutputs empty = eval_functions(spec, SourceSamples{});
  CHECK(empty.f_true.empty());
  CHECK(empty.g_true.empty());
  CHECK_THROWS_AS(eval_functions(spec, SourceSamples{{5}, {1}}), DomainError);
  CHECK_THROWS_AS(eval_functions(spec, SourceSamples{{1}, {3}}), DomainError);
}

TEST_CASE("eval_functions is deterministic") {
  const FunctionSpec spec = FunctionSpec::selection(2);
  const SourceSamples sources{{1, 4, 2}, {2, 1, 2}};
  const FunctionOutputs a = eval_functions(spec, sources);
  const FunctionOutputs b = eval_functions(spec, sources);
  CHECK(a.g_true == b.g_true);
  CHECK(a.f_true == b.f_true);
}

TEST_CASE("range encoding is MSB-first and round-trips") {
  CHECK(encode_range_value(0, 2) == BitString(std::vector<Bit>{0, 0}));
  CHECK(encode_range_value(2, 2) == BitString(std::vector<Bit>{1, 0}));
  CHECK(encode_range_value(3, 2) == BitString(std::vector<Bit>{1, 1}));
  CHECK(encode_range_value(0, 0) == BitString(0));
  CHECK_THROWS_AS(encode_range_value(4, 2), DomainError);
  RandomnessStream rng(11, "core/range");
  for (int trial = 0; trial < 100; ++trial) {
    const int h = 1 + static_cast<int>(rng.uniform_index(8));
    const RangeValue v = rng.uniform_index(std::uint32_t{1} << h);
    CHECK(decode_range_value(encode_range_value(v, h), 0, h) == v);
  }
}

TEST_CASE("function spec recomputes widths and validates entries") {
  const FunctionSpec spec(2, 2, 3, 4, {0, 1, 2, 0}, {3, 2, 1, 0});
  CHECK(spec.h_a() == 2);
  CHECK(spec.h_b() == 2);
  CHECK(FunctionSpec::selection(4).h_b() == 1);
  CHECK(FunctionSpec::selection(4).h_a() == 0);
  CHECK_THROWS_AS(FunctionSpec(2, 2, 2, 2, {0, 1, 2, 0}, {0, 0, 0, 0}),
                  DomainError);
}
