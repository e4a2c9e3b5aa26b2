#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qboson/params.hpp"
#include "qboson/partition.hpp"

namespace qboson {

using cplx = std::complex<double>;

enum class Precision { standard, extended };

/// Numerical thresholds for evaluating the symmetrized plane-wave sum.
struct EvalOptions {
  /// Minimum distance of xi_j, xi_j +- xi_k to pi*Z for a point to count as generic.
  double delta_gen = 1e-6;
  /// Hard cutoff on |denominator| inside C.
  double delta_sing = 1e-10;
  /// extended evaluates every term and the sum with a 113-bit mantissa.
  Precision precision = Precision::standard;
};

/// Condition above which the standard path is considered unreliable.
inline constexpr double ill_conditioned_threshold = 1e8;

/// Spectral parameter xi in R^n.
class SpectralPoint {
public:
  SpectralPoint() = default;
  explicit SpectralPoint(std::vector<double> xi) : xi_(std::move(xi)) {}

  std::size_t size() const noexcept { return xi_.size(); }
  double operator[](std::size_t j) const { return xi_[j]; }
  std::span<const double> values() const noexcept { return xi_; }

  /// pi > xi_1 > xi_2 > ... > xi_n > 0.
  bool in_alcove() const;
  /// Smallest distance of xi_j and xi_j +- xi_k (j < k) to a multiple of pi.
  double genericity_margin() const;
  bool generic(double delta_gen) const { return genericity_margin() >= delta_gen; }

private:
  std::vector<double> xi_;
};

struct EvalDiagnostics {
  std::size_t term_count = 0;
  double max_term_magnitude = 0;
  /// max |term| / |sum|; infinite when the sum vanishes.
  double condition = 0;
  bool extended_precision = false;
  bool ill_conditioned() const { return condition > ill_conditioned_threshold; }
};

struct Evaluated {
  cplx value;
  EvalDiagnostics diagnostics;
};

/// (c; q)_m = (1 - c)(1 - c q)...(1 - c q^(m-1)).
double pochhammer_q(double c, double q, int m);

/// N(lambda) = (c; q)_(m_0) prod_l [m_l]!.
double norm_N(const Partition& lambda, const ModelParams& p);

/// E_n(xi) = 2 sum cos xi_j.
double eigenvalue(std::span<const double> xi);

/// Expansion coefficient C(xi) of the plane-wave sum. Throws singularity_error
/// naming the factor whose denominator drops below delta_sing.
cplx coeff_C(std::span<const double> xi, const ModelParams& p, double delta_sing = 1e-10);
/// Same product for complex-extended arguments (e^{i z_j} arbitrary nonzero).
cplx coeff_C(std::span<const cplx> z, const ModelParams& p, double delta_sing = 1e-10);

/// The 2^n n! terms C(eps z_sigma) e^{i<lambda, eps z_sigma>} of phi at a fixed
/// spectral point, precomputed so that phi can be read off for many lambda.
///
/// Terms are enumerated with sigma in lexicographic order (outer) and eps in
/// lexicographic order with +1 before -1 (inner); the order is fixed so that
/// results are bit-reproducible.
class PlaneWaveExpansion {
public:
  PlaneWaveExpansion(std::span<const cplx> z, const ModelParams& p, double delta_sing = 1e-10);
  PlaneWaveExpansion(std::span<const double> xi, const ModelParams& p, double delta_sing = 1e-10);

  std::size_t dimension() const noexcept { return n_; }
  std::size_t term_count() const noexcept { return coeffs_.size(); }

  /// C(z) itself (identity permutation, all signs +).
  cplx coefficient() const { return coeffs_.front(); }

  /// phi(lambda) by compensated summation.
  Evaluated evaluate(const Partition& lambda) const;

private:
  std::size_t n_;
  std::vector<cplx> coeffs_;
  std::vector<cplx> angles_;  // term-major, n per term: eps_j z_(sigma_j)
};

/// Throws genericity_error unless xi is generic.
void require_generic(const SpectralPoint& xi, double delta_gen);

/// Hall-Littlewood wave function phi_xi(lambda) with diagnostics.
Evaluated phi(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p,
              const EvalOptions& opts = {});
/// Complex-extended core; genericity means every denominator of every C(eps z_sigma)
/// has magnitude >= delta_gen.
Evaluated phi(std::span<const cplx> z, const Partition& lambda, const ModelParams& p,
              const EvalOptions& opts = {});

/// Delta(xi) = 1 / |C(xi)|^2.
double weight_Delta(const SpectralPoint& xi, const ModelParams& p, const EvalOptions& opts = {});

/// tau_j = r q^(n-j), j = 1..n.
std::vector<cplx> tau_vector(const ModelParams& p, std::size_t n);

/// Complex spectral point z with e^{i z_j} = tau_j. Throws domain_error if r = 0.
std::vector<cplx> principal_point(const ModelParams& p, std::size_t n);

/// P_lambda(x) = tau^lambda / N(0) * phi(lambda) at x = e^{i z}.
cplx p_normalized(std::span<const cplx> z, const Partition& lambda, const ModelParams& p,
                  const EvalOptions& opts = {});
cplx p_normalized(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p,
                  const EvalOptions& opts = {});

/// Pieri coefficient V_j^+(lambda), product form; j is 0-based. Requires lambda + e_j in Lambda_n.
cplx pieri_V_plus(const Partition& lambda, std::size_t j, const ModelParams& p);
/// tau_j^{-1} (1 - c delta_(lambda_j) q^(m_0 - 1)) [m_(lambda_j)].
cplx pieri_V_plus_closed(const Partition& lambda, std::size_t j, const ModelParams& p);
/// Pieri coefficient V_j^-(lambda), product form. Requires lambda - e_j in Lambda_n.
cplx pieri_V_minus(const Partition& lambda, std::size_t j, const ModelParams& p);
/// tau_j [m_(lambda_j)].
cplx pieri_V_minus_closed(const Partition& lambda, std::size_t j, const ModelParams& p);

enum class PieriForm {
  expanded,  ///< sum over V_j^+- (P_(lambda+-e_j) - P_lambda)
  compact,   ///< a[m_0] P_lambda + tau-weighted neighbour sums
};

struct PieriResidual {
  double residual = 0;  ///< |LHS - RHS|
  double scale = 0;     ///< sum of |terms| on both sides
  double relative = 0;  ///< residual / scale (0 when scale vanishes)
  /// sum(tau + 1/tau) - sum tau_j[m] - sum tau_j^{-1}[m] versus r [m_0].
  double bridging_residual = 0;
  double bridging_scale = 0;  ///< sum of |terms| of the bridging identity
  bool bridging_holds = false;
  /// Every P-value involved vanished, so the identity holds trivially.
  bool degenerate = false;
};

PieriResidual pieri_residual(std::span<const cplx> z, const Partition& lambda, const ModelParams& p,
                             PieriForm form, const EvalOptions& opts = {});
PieriResidual pieri_residual(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p,
                             PieriForm form, const EvalOptions& opts = {});

}  // namespace qboson
