#include "otsfc/functions.hpp"

#include <string>

namespace otsfc {

FunctionSpec::FunctionSpec(Symbol m_a, Symbol m_b, RangeValue f_range_size,
                           RangeValue g_range_size,
                           std::vector<RangeValue> f_table,
                           std::vector<RangeValue> g_table)
    : m_a_(m_a),
      m_b_(m_b),
      f_range_size_(f_range_size),
      g_range_size_(g_range_size),
      h_a_(ceil_log2(f_range_size)),
      h_b_(ceil_log2(g_range_size)),
      f_table_(std::move(f_table)),
      g_table_(std::move(g_table)) {
  if (m_a_ < 1 || m_b_ < 1) throw ParamError("alphabet sizes must be >= 1");
  if (f_range_size_ < 1 || g_range_size_ < 1)
    throw ParamError("range sizes must be >= 1");
  const std::size_t cells = static_cast<std::size_t>(m_a_) * m_b_;
  if (f_table_.size() != cells || g_table_.size() != cells)
    throw DimensionError("function table size must be m_A * m_B");
  for (RangeValue v : f_table_)
    if (v >= f_range_size_) throw DomainError("f table entry outside range");
  for (RangeValue v : g_table_)
    if (v >= g_range_size_) throw DomainError("g table entry outside range");
}

std::size_t FunctionSpec::index(Symbol a, Symbol b) const {
  if (a < 1 || a > m_a_) throw DomainError("Alice sample outside alphabet");
  if (b < 1 || b > m_b_) throw DomainError("Bob sample outside alphabet");
  return static_cast<std::size_t>(a - 1) * m_b_ + (b - 1);
}

FunctionSpec FunctionSpec::selection(int m) {
  if (m < 2) throw ParamError("selection function needs m >= 2");
  if (m > 16) throw ParamError("selection function table capped at m = 16");
  const Symbol m_a = Symbol{1} << m;
  const Symbol m_b = static_cast<Symbol>(m);
  std::vector<RangeValue> f_table(static_cast<std::size_t>(m_a) * m_b, 0);
  std::vector<RangeValue> g_table(f_table.size());
  for (Symbol a = 1; a <= m_a; ++a)
    for (Symbol b = 1; b <= m_b; ++b)
      g_table[static_cast<std::size_t>(a - 1) * m_b + (b - 1)] =
          tuple_bit(a, m, static_cast<int>(b));
  return FunctionSpec(m_a, m_b, 1, 2, std::move(f_table), std::move(g_table));
}

Bit FunctionSpec::tuple_bit(Symbol a, int m, int j) {
  if (j < 1 || j > m) throw IndexError("tuple bit index out of range");
  const std::uint32_t value = a - 1;
  return static_cast<Bit>((value >> (m - j)) & 1u);
}

BitString encode_range_value(RangeValue v, int h) {
  if (h < 0 || (h < 32 && v >= (RangeValue{1} << h)))
    throw DomainError("range value does not fit in " + std::to_string(h) +
                      " bits");
  BitString out(static_cast<std::size_t>(h));
  for (int t = 0; t < h; ++t)
    out.set(static_cast<std::size_t>(t),
            static_cast<Bit>((v >> (h - 1 - t)) & 1u));
  return out;
}

RangeValue decode_range_value(const BitString& bits, std::size_t offset,
                              int h) {
  RangeValue v = 0;
  for (int t = 0; t < h; ++t)
    v = (v << 1) | bits.at(offset + static_cast<std::size_t>(t));
  return v;
}

FunctionOutputs eval_functions(const FunctionSpec& spec,
                               const SourceSamples& sources) {
  if (sources.a_samples.size() != sources.b_samples.size())
    throw DimensionError("source sample sequences must have equal length");
  FunctionOutputs out;
  out.f_true.reserve(sources.k());
  out.g_true.reserve(sources.k());
  for (std::size_t i = 0; i < sources.k(); ++i) {
    out.f_true.push_back(spec.f(sources.a_samples[i], sources.b_samples[i]));
    out.g_true.push_back(spec.g(sources.a_samples[i], sources.b_samples[i]));
  }
  return out;
}

}  // namespace otsfc
