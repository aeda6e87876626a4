#include "otsfc/capacity.hpp"

#include <algorithm>
#include <cmath>

namespace otsfc {

namespace {

constexpr double kMassTolerance = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

JointDistribution::JointDistribution(std::size_t x_size, std::size_t y_size,
                                     std::vector<double> probs)
    : x_size_(x_size), y_size_(y_size), probs_(std::move(probs)) {
  if (x_size_ < 1 || y_size_ < 1)
    throw DomainError("support sizes must be positive");
  if (probs_.size() != x_size_ * y_size_)
    throw DomainError("probability table size must be |X|*|Y|");
  double total = 0.0;
  for (double p : probs_) {
    if (p < 0.0) throw DomainError("probabilities must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw DomainError("probabilities must sum to 1");
}

JointDistribution JointDistribution::erasure_source(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("erasure probability must lie in [0,1]");
  // y: 0, 1, erasure mark
  std::vector<double> probs(2 * 3, 0.0);
  for (std::size_t x = 0; x < 2; ++x) {
    probs[x * 3 + x] = (1.0 - p) / 2.0;
    probs[x * 3 + 2] = p / 2.0;
  }
  return JointDistribution(2, 3, std::move(probs));
}

double mutual_information_bits(const JointDistribution& joint) {
  std::vector<double> px(joint.x_size(), 0.0), py(joint.y_size(), 0.0);
  for (std::size_t x = 0; x < joint.x_size(); ++x)
    for (std::size_t y = 0; y < joint.y_size(); ++y) {
      px[x] += joint.prob(x, y);
      py[y] += joint.prob(x, y);
    }
  double mi = 0.0;
  for (std::size_t x = 0; x < joint.x_size(); ++x)
    for (std::size_t y = 0; y < joint.y_size(); ++y) {
      const double pxy = joint.prob(x, y);
      if (pxy > 0.0) mi += pxy * std::log2(pxy / (px[x] * py[y]));
    }
  return std::max(mi, 0.0);
}

double conditional_entropy_bits(const JointDistribution& joint) {
  std::vector<double> py(joint.y_size(), 0.0);
  for (std::size_t x = 0; x < joint.x_size(); ++x)
    for (std::size_t y = 0; y < joint.y_size(); ++y)
      py[y] += joint.prob(x, y);
  double h = 0.0;
  for (std::size_t x = 0; x < joint.x_size(); ++x)
    for (std::size_t y = 0; y < joint.y_size(); ++y)
      h -= xlog2x(joint.prob(x, y));
  for (std::size_t y = 0; y < joint.y_size(); ++y) h += xlog2x(py[y]);
  return std::max(h, 0.0);
}

double capacity_upper_bound(const JointDistribution& joint, int m) {
  if (m < 2) throw DomainError("bound needs m >= 2");
  return std::min(mutual_information_bits(joint),
                  conditional_entropy_bits(joint) / (m - 1));
}

ChannelModel::ChannelModel(std::size_t x_size, std::size_t y_size,
                           std::vector<double> transition)
    : x_size_(x_size), y_size_(y_size), transition_(std::move(transition)) {
  if (x_size_ < 1 || y_size_ < 1)
    throw DomainError("alphabet sizes must be positive");
  if (transition_.size() != x_size_ * y_size_)
    throw DomainError("transition table size must be |X|*|Y|");
  for (std::size_t x = 0; x < x_size_; ++x) {
    double row = 0.0;
    for (std::size_t y = 0; y < y_size_; ++y) {
      const double p = transition_[x * y_size_ + y];
      if (p < 0.0) throw DomainError("transition probabilities must be >= 0");
      row += p;
    }
    if (std::abs(row - 1.0) > kMassTolerance)
      throw DomainError("each transition row must sum to 1");
  }
}

JointDistribution ChannelModel::joint(
    const std::vector<double>& input_dist) const {
  if (input_dist.size() != x_size_)
    throw DomainError("input distribution size must be |X|");
  std::vector<double> probs(x_size_ * y_size_, 0.0);
  double total = 0.0;
  for (std::size_t x = 0; x < x_size_; ++x) {
    if (input_dist[x] < 0.0)
      throw DomainError("input probabilities must be >= 0");
    total += input_dist[x];
    for (std::size_t y = 0; y < y_size_; ++y)
      probs[x * y_size_ + y] = input_dist[x] * transition_[x * y_size_ + y];
  }
  if (std::abs(total - 1.0) > kMassTolerance)
    throw DomainError("input distribution must sum to 1");
  return JointDistribution(x_size_, y_size_, std::move(probs));
}

ChannelModel ChannelModel::erasure_channel(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw DomainError("erasure probability must lie in [0,1]");
  std::vector<double> t(2 * 3, 0.0);
  for (std::size_t x = 0; x < 2; ++x) {
    t[x * 3 + x] = 1.0 - p;
    t[x * 3 + 2] = p;
  }
  return ChannelModel(2, 3, std::move(t));
}

namespace {

struct LineMax {
  double arg;
  double value;
};

template <typename F>
LineMax golden_max(double lo, double hi, double tol, F&& f) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? LineMax{c, fc} : LineMax{d, fd};
}

}  // namespace

double capacity_upper_bound_channel(const ChannelModel& channel, int m,
                                    double tol) {
  if (m < 2) throw DomainError("bound needs m >= 2");
  const std::size_t d = channel.x_size();
  auto objective = [&](const std::vector<double>& input) {
    return capacity_upper_bound(channel.joint(input), m);
  };

  if (d == 1) return objective({1.0});
  if (d == 2) {
    return golden_max(0.0, 1.0, tol,
                      [&](double q) { return objective({q, 1.0 - q}); })
        .value;
  }

  // Pairwise mass-shift sweeps from the uniform start; the objective is
  // concave on the simplex, so the sweeps converge to the global maximum.
  std::vector<double> input(d, 1.0 / static_cast<double>(d));
  double best = objective(input);
  for (int sweep = 0; sweep < 200; ++sweep) {
    double improved = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        const double budget = input[i] + input[j];
        if (budget <= 0.0) continue;
        const LineMax line =
            golden_max(0.0, budget, tol, [&](double share) {
              std::vector<double> candidate = input;
              candidate[i] = share;
              candidate[j] = budget - share;
              return objective(candidate);
            });
        if (line.value > best) {
          input[i] = line.arg;
          input[j] = budget - line.arg;
          improved += line.value - best;
          best = line.value;
        }
      }
    if (improved < 1e-13) break;
  }
  return best;
}

}  // namespace otsfc
