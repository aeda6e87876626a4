#pragma once

#include <cstdint>
#include <vector>

#include "otsfc/bits.hpp"
#include "otsfc/errors.hpp"

namespace otsfc {

/// Alphabet value, 1-based: Alice's samples live in {1..m_A}, Bob's in
/// {1..m_B}. Function outputs are range-element values in {0..range_size-1}.
using Symbol = std::uint32_t;
using RangeValue = std::uint32_t;

inline int ceil_log2(std::uint64_t v) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < v) ++bits;
  return bits;
}

/// The pair of functions the two parties want to compute, as dense tables
/// over the (1-based) source alphabets. Outputs are fixed-width bit strings:
/// a range value r encodes as the h-bit binary expansion of r, MSB first,
/// with h = ceil(log2(range size)).
class FunctionSpec {
 public:
  FunctionSpec(Symbol m_a, Symbol m_b, RangeValue f_range_size,
               RangeValue g_range_size, std::vector<RangeValue> f_table,
               std::vector<RangeValue> g_table);

  Symbol m_a() const { return m_a_; }
  Symbol m_b() const { return m_b_; }
  RangeValue f_range_size() const { return f_range_size_; }
  RangeValue g_range_size() const { return g_range_size_; }
  int h_a() const { return h_a_; }
  int h_b() const { return h_b_; }

  RangeValue f(Symbol a, Symbol b) const { return f_table_[index(a, b)]; }
  RangeValue g(Symbol a, Symbol b) const { return g_table_[index(a, b)]; }

  /// 1-out-of-m sample-wise OT as a function pair: Alice's alphabet is the
  /// m-bit tuples (encoded as 1 + their MSB-first binary value), Bob selects
  /// a coordinate, f is constant 0 and g picks the selected bit.
  static FunctionSpec selection(int m);

  /// Bit j (1-based) of the m-bit tuple behind Alice's alphabet symbol.
  static Bit tuple_bit(Symbol a, int m, int j);

 private:
  std::size_t index(Symbol a, Symbol b) const;

  Symbol m_a_;
  Symbol m_b_;
  RangeValue f_range_size_;
  RangeValue g_range_size_;
  int h_a_;
  int h_b_;
  std::vector<RangeValue> f_table_;
  std::vector<RangeValue> g_table_;
};

/// h-bit MSB-first encoding of a range value.
BitString encode_range_value(RangeValue v, int h);
/// Inverse of encode_range_value over one h-bit group starting at `offset`.
RangeValue decode_range_value(const BitString& bits, std::size_t offset, int h);

struct SourceSamples {
  std::vector<Symbol> a_samples;
  std::vector<Symbol> b_samples;

  std::size_t k() const { return a_samples.size(); }
  bool operator==(const SourceSamples&) const = default;
};

struct FunctionOutputs {
  std::vector<RangeValue> f_true;
  std::vector<RangeValue> g_true;
  std::vector<RangeValue> f_est;
  std::vector<RangeValue> g_est;
};

/// Per-sample truth values f(A_i,B_i), g(A_i,B_i). Estimates left empty.
FunctionOutputs eval_functions(const FunctionSpec& spec,
                               const SourceSamples& sources);

}  // namespace otsfc
