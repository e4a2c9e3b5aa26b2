#pragma once

#include <complex>
#include <optional>
#include <utility>

namespace qboson {

/// Coupling constants of the semi-infinite q-boson chain.
///
/// q deforms the bulk oscillator algebra; a and c are the boundary
/// parameters, equivalently the roots r1, r2 of r^2 - a r + c.
struct ModelParams {
  double q = 0.5;
  double a = 0.6;
  double c = 0.08;

  /// Validates |q| not in {0, 1}.
  static ModelParams from_ac(double q, double a, double c);
  /// a = r1 + r2, c = r1 r2.
  static ModelParams from_roots(double q, double r1, double r2);

  /// Real roots of r^2 - a r + c, larger first; nullopt when complex.
  std::optional<std::pair<double, double>> real_roots() const;

  /// r = a/2 + sqrt((a/2)^2 - c) on the principal branch.
  std::complex<double> r() const;

  /// 0 < |q| < 1 and both roots real in (-1, 1).
  bool in_orthogonality_domain() const;

  /// Throws domain_error unless |q| is finite and not in {0, 1}.
  void require_algebra_valid() const;
  /// Throws domain_error outside the orthogonality domain.
  void require_orthogonality_domain() const;
};

}  // namespace qboson
