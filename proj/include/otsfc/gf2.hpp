#pragma once

#include <cstdint>
#include <vector>

#include "otsfc/errors.hpp"

namespace otsfc {

// Dense GF(2) rows over at most 64 columns, one bit per column.

/// Gauss-Jordan elimination restricted to the low `eliminate_cols` columns.
/// Returns the rows of the input span that remain after every pivot row is
/// removed: a generating set of the sub-span whose eliminated columns are all
/// zero, shifted right by `eliminate_cols`.
std::vector<std::uint64_t> gf2_eliminate_low_columns(
    std::vector<std::uint64_t> rows, int eliminate_cols);

/// Reduced row echelon basis (sorted by leading column).
std::vector<std::uint64_t> gf2_rref(std::vector<std::uint64_t> rows);

/// Membership test against an RREF basis.
bool gf2_in_span(const std::vector<std::uint64_t>& rref_basis,
                 std::uint64_t vec);

/// Every element of the span (2^rank entries, rank <= 20 enforced).
std::vector<std::uint64_t> gf2_span_elements(
    const std::vector<std::uint64_t>& basis);

}  // namespace otsfc
