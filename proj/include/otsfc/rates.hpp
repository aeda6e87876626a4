#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "otsfc/functions.hpp"

namespace otsfc {

/// Achievable 1-out-of-m sample-wise OT rate over an erasure resource with
/// erasure probability p: min(1-p, p/(m-1)).
double rate_swot(double p, int m);

/// Achievable bootstrapped string-OT rate for a branching sequence: the
/// reciprocal of the summed per-level inverse rates; 0 when any level
/// carries rate 0. A single level reduces to the sample-wise rate.
double rate_boot(double p, std::span<const std::size_t> branching);

struct BootOptimum {
  std::vector<std::size_t> branching;
  double rate = 0.0;
};

/// Exhaustive search over non-decreasing branching sequences with values in
/// {2..m}, product >= m, at most max_u levels, pruned to product < m * max(s)
/// (a level whose removal keeps the product feasible only lowers the rate).
/// Ties break toward fewer levels, then lexicographically.
BootOptimum optimize_boot_params(double p, int m, int max_u);

/// Function-computation rate for a function pair over erasure resources in
/// both directions, from the alphabet sizes and output widths.
double rate_gsfc(double p, const FunctionSpec& spec);

/// Exact probability that the sample-wise OT aborts: the non-erasure count
/// |S| ~ Binomial(n, 1-p) must land in [k, n - k(m-1)].
double abort_probability_exact(double p, std::size_t n, std::size_t k, int m);

/// Window generalization: P(|S| < min_non_erased or |S_e| < min_erased).
double abort_probability_window(double p, std::size_t n,
                                std::size_t min_non_erased,
                                std::size_t min_erased);

}  // namespace otsfc
