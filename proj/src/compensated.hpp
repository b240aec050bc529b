#pragma once

#include <cmath>

namespace fta::detail {

/// Neumaier variant of Kahan summation; controls cancellation among the
/// signed inclusion-exclusion terms and the 2^n enumeration weights.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  /// Folds another partial sum in; order-sensitive by design so that a
  /// fixed partition layout reproduces bit-for-bit.
  void combine(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace fta::detail
