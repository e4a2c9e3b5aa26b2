#pragma once

#include <complex>
#include <map>

#include "qboson/partition.hpp"

namespace qboson {

using amplitude = std::complex<double>;

/// Finitely supported function on Lambda_n (grade n).
///
/// Grade -1 stands for the null space reached by annihilating a grade-0
/// vector; it never has support. Entries that become exactly zero are
/// dropped, nothing else is pruned.
class FockVector {
public:
  using storage = std::map<Partition, amplitude>;

  explicit FockVector(int grade = 0);

  /// Basis ket |lambda> scaled by value.
  static FockVector ket(const Partition& lambda, amplitude value = 1.0);

  int grade() const noexcept { return grade_; }
  const storage& amplitudes() const noexcept { return amps_; }
  std::size_t support_size() const noexcept { return amps_.size(); }
  bool is_zero() const noexcept { return amps_.empty(); }

  /// f(lambda), zero off the support.
  amplitude operator()(const Partition& lambda) const;

  void set(const Partition& lambda, amplitude value);
  void add(const Partition& lambda, amplitude value);

  /// Largest part over the support, 0 if empty.
  int max_part() const;

  FockVector& operator+=(const FockVector& other);
  FockVector& operator-=(const FockVector& other);
  FockVector& operator*=(amplitude s);

  friend FockVector operator+(FockVector lhs, const FockVector& rhs) { return lhs += rhs; }
  friend FockVector operator-(FockVector lhs, const FockVector& rhs) { return lhs -= rhs; }
  friend FockVector operator*(amplitude s, FockVector v) { return v *= s; }
  friend FockVector operator*(FockVector v, amplitude s) { return v *= s; }

private:
  void check_key(const Partition& lambda) const;

  int grade_;
  storage amps_;
};

/// max_lambda |f(lambda) - g(lambda)|; grades must agree.
double max_abs_difference(const FockVector& f, const FockVector& g);

/// max_lambda |f(lambda)|.
double max_abs(const FockVector& f);

}  // namespace qboson
