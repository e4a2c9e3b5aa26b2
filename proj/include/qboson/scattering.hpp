#pragma once

#include <span>
#include <vector>

#include "qboson/fock.hpp"
#include "qboson/hall_littlewood.hpp"
#include "qboson/spectral.hpp"

namespace qboson {

/// Two-particle bulk phase s(x) = (1 - q e^{-ix}) / (1 - q e^{ix}).
cplx s_bulk(double x, const ModelParams& p, double delta_sing = 1e-10);
/// s(x)^{1/2} = (1 - q e^{-ix}) / |1 - q e^{ix}|.
cplx s_bulk_sqrt(double x, const ModelParams& p, double delta_sing = 1e-10);

/// One-particle boundary phase s_0(x) = (1 - a e^{-ix} + c e^{-2ix}) / (1 - a e^{ix} + c e^{2ix}).
cplx s_boundary(double x, const ModelParams& p, double delta_sing = 1e-10);
/// s_0(x)^{1/2}: numerator over the modulus of the denominator.
cplx s_boundary_sqrt(double x, const ModelParams& p, double delta_sing = 1e-10);

/// Factorized S-matrix prod_{j<k} s(xi_j - xi_k) s(xi_j + xi_k) prod_j s_0(xi_j).
cplx S_hat(std::span<const double> xi, const ModelParams& p, double delta_sing = 1e-10);
/// The same product built from the explicit square-root factors.
cplx S_hat_sqrt(std::span<const double> xi, const ModelParams& p, double delta_sing = 1e-10);

enum class PsiMethod {
  renormalized,  ///< i^{n^2} |C|^{-1} N^{-1/2} phi
  sign_sum,      ///< N^{-1/2} sum sign(eps sigma) Shat^{1/2}(eps xi_sigma) e^{i<rho+lambda, eps xi_sigma>}
};

/// Normalized wave function Psi_xi(lambda). xi must be generic and in the alcove,
/// parameters in the orthogonality domain.
cplx psi(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p, PsiMethod method,
         const EvalOptions& opts = {});

/// Sign-sum terms of Psi at a fixed xi (any generic xi, not only the alcove), for
/// evaluating many lambda. With free = true the kernel of F_0 is produced.
class WaveFunctionExpansion {
public:
  WaveFunctionExpansion(std::span<const double> xi, const ModelParams& p, bool free, double delta_sing = 1e-10);
  cplx operator()(const Partition& lambda) const;

private:
  std::size_t n_;
  bool free_;
  ModelParams params_;
  std::vector<cplx> coeffs_;   // sign(eps sigma) Shat^{1/2}(eps xi_sigma)
  std::vector<double> angles_; // eps_j xi_(sigma_j), term-major
};

/// Signs and permutation making every component of grad E_n(eps xi_sigma)
/// positive and strictly decreasing.
struct OrderingData {
  std::vector<int> epsilon;
  std::vector<std::size_t> sigma;  // 0-based: component j of the result is eps_j xi_(sigma_j)
  std::vector<double> apply(std::span<const double> xi) const;
};

/// Throws ordering_error when some sin(xi_j) vanishes or two |sin xi_j| tie within tol.
OrderingData ordering_map(std::span<const double> xi, double tol = 1e-12);

enum class SPower { full, inverse, half, inverse_half };

/// Shat(eps_xi xi_sigma_xi)^power * fhat(xi).
cplx apply_S(const SpectralFunction& fhat, std::span<const double> xi, const ModelParams& p,
             SPower power = SPower::full);

struct ProbeRow {
  double t = 0;
  double distance = 0;
  std::size_t window_size = 0;
  std::size_t quadrature_points = 0;
};

struct ProbeTable {
  std::vector<ProbeRow> rows;
  /// Some evolved vector kept non-negligible weight near the window's outer edge.
  bool truncation_warning = false;
  /// Some t exceeded the quadrature resolution heuristic.
  bool resolution_warning = false;
};

/// d(t) = || e^{itH} e^{-itH_0} f - F^{-1} Shat^{-+1/2} F_0 f || on the window of
/// partitions with parts <= window_max_part (upper sign for t >= 0).
ProbeTable wave_operator_probe(const FockVector& f, std::span<const double> t_list, const QuadratureRule& rule,
                               int window_max_part, const ModelParams& p, const EvalOptions& opts = {});

}  // namespace qboson
