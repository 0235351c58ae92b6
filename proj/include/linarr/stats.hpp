#pragma once

#include <cmath>
#include <cstdint>

namespace linarr {

/// One-pass accumulator of mean and central moments up to order 4
/// (Welford/Terriberry updates).
class MomentAccumulator {
 public:
  void add(double x) {
    const double n1 = static_cast<double>(count_);
    ++count_;
    const double n = static_cast<double>(count_);
    const double delta = x - mean_;
    const double delta_n = delta / n;
    const double delta_n2 = delta_n * delta_n;
    const double term1 = delta * delta_n * n1;
    mean_ += delta_n;
    m4_ += term1 * delta_n2 * (n * n - 3 * n + 3) + 6 * delta_n2 * m2_ - 4 * delta_n * m3_;
    m3_ += term1 * delta_n * (n - 2) - 3 * delta_n * m2_;
    m2_ += term1;
  }

  std::uint64_t count() const { return count_; }
  double mean() const { return mean_; }

  /// Unbiased sample variance (T - 1 denominator).
  double variance() const { return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1); }

  /// Unbiased sample third central moment.
  double third_central() const {
    if (count_ < 3) return 0.0;
    const double n = static_cast<double>(count_);
    return n * m3_ / ((n - 1) * (n - 2));
  }

  /// Plain sample central moment of the given order (1/T normalization).
  double central_moment(int order) const {
    const double n = static_cast<double>(count_);
    switch (order) {
      case 2: return m2_ / n;
      case 3: return m3_ / n;
      case 4: return m4_ / n;
      default: return 0.0;
    }
  }

  double stderr_mean() const {
    return count_ < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
  }

  /// Standard error of variance(), from the sample fourth central moment.
  double stderr_variance() const {
    if (count_ < 4) return 0.0;
    const double n = static_cast<double>(count_);
    const double s2 = variance();
    const double v = (central_moment(4) - s2 * s2 * (n - 3) / (n - 1)) / n;
    return v > 0 ? std::sqrt(v) : 0.0;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
  double m3_ = 0;
  double m4_ = 0;
};

}  // namespace linarr
