#include "otsfc/rates.hpp"

#include <algorithm>
#include <cmath>

#include "otsfc/errors.hpp"

namespace otsfc {

double rate_swot(double p, int m) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParamError("erasure probability must lie in [0,1]");
  if (m < 2) throw ParamError("rate needs m >= 2");
  // The two branches cross at p = (m-1)/m with value 1/m; evaluating min()
  // at the representable crossing point loses that identity to rounding, so
  // the peak is pinned to its true value.
  if (p == (m - 1.0) / m) return 1.0 / m;
  return std::min(1.0 - p, p / (m - 1));
}

double rate_boot(double p, std::span<const std::size_t> branching) {
  if (branching.empty()) throw ParamError("branching sequence must be nonempty");
  if (branching.size() == 1)
    return rate_swot(p, static_cast<int>(branching.front()));
  double inverse_sum = 0.0;
  for (std::size_t s : branching) {
    const double level_rate = rate_swot(p, static_cast<int>(s));
    if (level_rate == 0.0) return 0.0;
    inverse_sum += 1.0 / level_rate;
  }
  return 1.0 / inverse_sum;
}

namespace {

void search_sequences(double p, int m, int max_u, std::size_t min_value,
                      std::vector<std::size_t>& current, std::size_t product,
                      BootOptimum& best) {
  if (!current.empty() && product >= static_cast<std::size_t>(m)) {
    // Feasible; pruning below guarantees minimal-ish sequences only.
    const double rate = rate_boot(p, current);
    const bool better =
        rate > best.rate ||
        (rate == best.rate &&
         (best.branching.empty() || current.size() < best.branching.size() ||
          (current.size() == best.branching.size() &&
           current < best.branching)));
    if (better) best = {current, rate};
    return;  // appending levels to a feasible sequence only lowers the rate
  }
  if (current.size() == static_cast<std::size_t>(max_u)) return;
  for (std::size_t s = std::max<std::size_t>(2, min_value);
       s <= static_cast<std::size_t>(m); ++s) {
    current.push_back(s);
    search_sequences(p, m, max_u, s, current, product * s, best);
    current.pop_back();
  }
}

}  // namespace

BootOptimum optimize_boot_params(double p, int m, int max_u) {
  if (m < 2) throw ParamError("optimizer needs m >= 2");
  if (max_u < 1) throw ParamError("optimizer needs max_u >= 1");
  BootOptimum best;
  best.rate = -1.0;
  std::vector<std::size_t> current;
  // The single-level sequence {m} is always feasible, so a best exists.
  search_sequences(p, m, max_u, 2, current, 1, best);
  return best;
}

double rate_gsfc(double p, const FunctionSpec& spec) {
  if (spec.m_a() < 2 || spec.m_b() < 2)
    throw ParamError("function-computation rate needs both alphabets >= 2");
  const double rate_a = rate_swot(p, static_cast<int>(spec.m_a()));
  const double rate_b = rate_swot(p, static_cast<int>(spec.m_b()));
  double inverse_sum = 0.0;
  if (spec.h_b() > 0) {
    if (rate_a == 0.0) return 0.0;
    inverse_sum += spec.h_b() / rate_a;
  }
  if (spec.h_a() > 0) {
    if (rate_b == 0.0) return 0.0;
    inverse_sum += spec.h_a() / rate_b;
  }
  if (inverse_sum == 0.0) return 1.0;  // both functions constant: no transfer
  return 1.0 / inverse_sum;
}

double abort_probability_exact(double p, std::size_t n, std::size_t k, int m) {
  if (m < 2 || k < 1 || n < 1) throw ParamError("need m >= 2, k >= 1, n >= 1");
  return abort_probability_window(p, n, k,
                                  k * (static_cast<std::size_t>(m) - 1));
}

double abort_probability_window(double p, std::size_t n,
                                std::size_t min_non_erased,
                                std::size_t min_erased) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParamError("erasure probability must lie in [0,1]");
  if (min_non_erased + min_erased > n) return 1.0;  // interval empty
  const std::size_t lo = min_non_erased;
  const std::size_t hi = n - min_erased;

  // |S| ~ Binomial(n, 1-p); endpoint erasure probabilities make |S|
  // deterministic.
  if (p == 0.0) return min_erased == 0 ? 0.0 : 1.0;
  if (p == 1.0) return lo == 0 ? 0.0 : 1.0;

  const double log_q = std::log1p(-p);  // log(1-p)
  const double log_p = std::log(p);
  double success = 0.0;
  for (std::size_t s = lo; s <= hi; ++s) {
    const double log_term = std::lgamma(static_cast<double>(n) + 1.0) -
                            std::lgamma(static_cast<double>(s) + 1.0) -
                            std::lgamma(static_cast<double>(n - s) + 1.0) +
                            static_cast<double>(s) * log_q +
                            static_cast<double>(n - s) * log_p;
    success += std::exp(log_term);
  }
  return std::clamp(1.0 - success, 0.0, 1.0);
}

}  // namespace otsfc
