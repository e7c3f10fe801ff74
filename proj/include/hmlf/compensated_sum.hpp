#pragma once

#include <cmath>

namespace hmlf {

/// Neumaier's variant of Kahan summation. Each addition is split into the
/// rounded sum and its exact rounding error (TwoSum); the errors are
/// accumulated separately and folded back in on read.
///
/// Also tracks the sum of magnitudes, which bounds the cancellation that
/// the terms themselves carry into the result.
class CompensatedSum {
 public:
  void add(double term) noexcept {
    const double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    abs_sum_ += std::fabs(term);
  }

  CompensatedSum& operator+=(double term) noexcept {
    add(term);
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }
  double abs_sum() const noexcept { return abs_sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
  double abs_sum_ = 0.0;
};

}  // namespace hmlf
