#include "otsfc/gf2.hpp"

#include <algorithm>
#include <bit>

namespace otsfc {

std::vector<std::uint64_t> gf2_eliminate_low_columns(
    std::vector<std::uint64_t> rows, int eliminate_cols) {
  std::vector<bool> is_pivot(rows.size(), false);
  for (int col = 0; col < eliminate_cols; ++col) {
    const std::uint64_t mask = std::uint64_t{1} << col;
    std::size_t pivot = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!is_pivot[r] && (rows[r] & mask)) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    is_pivot[pivot] = true;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != pivot && (rows[r] & mask)) rows[r] ^= rows[pivot];
  }
  std::vector<std::uint64_t> remaining;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!is_pivot[r] && rows[r] != 0) remaining.push_back(rows[r] >> eliminate_cols);
  return remaining;
}

namespace {

// table[l] is the basis vector whose lowest set bit is l, or 0. Each lead
// bit appears in exactly one table entry, so one ascending pass reduces
// fully.
std::uint64_t reduce_ascending(const std::uint64_t table[64],
                               std::uint64_t vec) {
  for (int l = 0; l < 64; ++l)
    if ((vec >> l) & 1u && table[l]) vec ^= table[l];
  return vec;
}

}  // namespace

std::vector<std::uint64_t> gf2_rref(std::vector<std::uint64_t> rows) {
  std::uint64_t table[64] = {};
  for (std::uint64_t row : rows) {
    row = reduce_ascending(table, row);
    if (row == 0) continue;
    const int lead = std::countr_zero(row);
    for (int l = 0; l < 64; ++l)
      if (table[l] & (std::uint64_t{1} << lead)) table[l] ^= row;
    table[lead] = row;
  }
  std::vector<std::uint64_t> basis;
  for (int l = 0; l < 64; ++l)
    if (table[l]) basis.push_back(table[l]);
  return basis;
}

bool gf2_in_span(const std::vector<std::uint64_t>& rref_basis,
                 std::uint64_t vec) {
  std::uint64_t table[64] = {};
  for (std::uint64_t b : rref_basis) table[std::countr_zero(b)] = b;
  return reduce_ascending(table, vec) == 0;
}

std::vector<std::uint64_t> gf2_span_elements(
    const std::vector<std::uint64_t>& basis) {
  if (basis.size() > 20) throw ParamError("span enumeration capped at rank 20");
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << basis.size());
  out.push_back(0);
  for (std::uint64_t b : basis) {
    const std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] ^ b);
  }
  return out;
}

}  // namespace otsfc
