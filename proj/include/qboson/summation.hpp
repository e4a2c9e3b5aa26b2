#pragma once

#include <cmath>
#include <complex>

namespace qboson {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

  /// Merge another partial sum (used for chunked reductions).
  void merge(const CompensatedSum& other) noexcept {
    add(other.sum_);
    add(other.comp_);
  }

private:
  double sum_ = 0;
  double comp_ = 0;
};

/// Componentwise compensated sum of complex terms.
class CompensatedComplexSum {
public:
  void add(std::complex<double> z) noexcept {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }
  void merge(const CompensatedComplexSum& other) noexcept {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }

private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace qboson
