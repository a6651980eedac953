#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace hardy {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Floor applied to positive bases before raising to a negative fractional
/// power, so that near-underflow sums do not produce a spurious 0^negative.
/// An exact zero base with a negative exponent yields +infinity (the 1/0
/// convention), never an error.
inline constexpr double kPowFloor = 1e-300;

/// Power with the 1/0 = infinity convention.  Requires base >= 0.
inline double pow_conv(double base, double exponent) {
  if (exponent == 0.0) return 1.0;
  if (base == 0.0) return exponent > 0.0 ? 0.0 : kInfinity;
  if (base < kPowFloor && exponent < 0.0) base = kPowFloor;
  return std::pow(base, exponent);
}

/// Neumaier-compensated accumulator.  Cheap enough to use for every long
/// series in the library; keeps the sup/inf comparisons honest.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Prefix sums of a 0-based range: result[n] = sum of the first n entries,
/// n in [0, N].  result[0] == 0.
inline std::vector<double> prefix_sums(std::span<const double> xs) {
  std::vector<double> out(xs.size() + 1);
  CompensatedSum acc;
  out[0] = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    acc.add(xs[i]);
    out[i + 1] = acc.value();
  }
  return out;
}

/// Backward-accumulated suffix sums, 1-based: result[n] = sum_{j=n..N} xs[j-1]
/// for n in [1, N+1]; result[N+1] == 0 and result[0] is unused.
inline std::vector<double> suffix_sums(std::span<const double> xs) {
  const std::size_t n = xs.size();
  std::vector<double> out(n + 2, 0.0);
  CompensatedSum acc;
  for (std::size_t j = n; j >= 1; --j) {
    acc.add(xs[j - 1]);
    out[j] = acc.value();
  }
  return out;
}

inline bool nearly_equal(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace hardy
