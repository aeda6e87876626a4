#pragma once

#include <cstddef>
#include <vector>

#include "otsfc/errors.hpp"

namespace otsfc {

/// Finite joint distribution over X x Y, probabilities row-major in x.
class JointDistribution {
 public:
  JointDistribution(std::size_t x_size, std::size_t y_size,
                    std::vector<double> probs);

  std::size_t x_size() const { return x_size_; }
  std::size_t y_size() const { return y_size_; }
  double prob(std::size_t x, std::size_t y) const {
    return probs_[x * y_size_ + y];
  }

  /// BES(p): uniform input bit, output equals it or the erasure mark
  /// (y index 2).
  static JointDistribution erasure_source(double p);

 private:
  std::size_t x_size_;
  std::size_t y_size_;
  std::vector<double> probs_;
};

/// I(X;Y) in bits.
double mutual_information_bits(const JointDistribution& joint);
/// H(X|Y) in bits.
double conditional_entropy_bits(const JointDistribution& joint);

/// Source-model bound: min(I(X;Y), H(X|Y)/(m-1)).
double capacity_upper_bound(const JointDistribution& joint, int m);

/// Memoryless channel as rows P(y|x).
class ChannelModel {
 public:
  ChannelModel(std::size_t x_size, std::size_t y_size,
               std::vector<double> transition);

  std::size_t x_size() const { return x_size_; }
  std::size_t y_size() const { return y_size_; }

  JointDistribution joint(const std::vector<double>& input_dist) const;

  /// BEC(p): binary input, output copies it or erases (y index 2).
  static ChannelModel erasure_channel(double p);

 private:
  std::size_t x_size_;
  std::size_t y_size_;
  std::vector<double> transition_;
};

/// Channel-model bound: the source-model expression maximized over input
/// distributions. Binary inputs use golden-section search on the single free
/// parameter; larger alphabets use pairwise mass-shift sweeps. The objective
/// is concave, so local refinement reaches the global maximum; `tol` bounds
/// the parameter resolution.
double capacity_upper_bound_channel(const ChannelModel& channel, int m,
                                    double tol = 1e-9);

}  // namespace otsfc
