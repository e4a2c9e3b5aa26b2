#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qboson/fock.hpp"
#include "qboson/hall_littlewood.hpp"

namespace qboson {

enum class QuadratureMode {
  /// One node per permutation orbit of the tensor grid: weakly ordered nodes,
  /// weight divided by prod(g!) over groups of tied coordinates.
  alcove,
  /// The full cube (-pi, pi)^n with weights scaled by 1/(2^n n!). The integrand is
  /// even in every coordinate, so only the (0, pi)^n octant is sampled and each
  /// weight carries the reflection factor 2^n: net scale 1/n!.
  full_cube,
};

struct JitterOptions {
  std::uint64_t seed = 0;
  double delta_gen = 1e-6;
};

/// Nodes and weights realizing the alcove integral  int_A F(xi) dxi  for
/// integrands invariant under the hyperoctahedral group.
struct QuadratureRule {
  std::size_t dimension = 0;
  std::size_t points_per_axis = 0;
  QuadratureMode mode = QuadratureMode::full_cube;
  std::vector<double> nodes;    // node-major, dimension entries per node
  std::vector<double> weights;  // symmetry and reflection factors already folded in
  double symmetry_factor = 1;   // 1/(2^n n!) in full-cube mode, 1 in alcove mode
  double reflection_factor = 1; // 2^n in full-cube mode (octant sampling), 1 in alcove mode
  std::size_t jittered = 0;     // nodes moved to restore genericity

  std::size_t size() const noexcept { return weights.size(); }
  std::span<const double> node(std::size_t i) const {
    return std::span<const double>(nodes).subspan(i * dimension, dimension);
  }
};

/// Tensor Gauss-Legendre rule on (0, pi)^n. Nodes that violate the genericity
/// margin are displaced by at most 4 * delta_gen per coordinate, with offsets drawn
/// from mt19937_64(seed); weights are not changed.
QuadratureRule build_rule(std::size_t n, std::size_t points_per_axis, QuadratureMode mode,
                          const JitterOptions& jitter = {});

using SpectralFunction = std::function<cplx(std::span<const double>)>;

/// <fhat, ghat>_Delta = (2 pi)^-n int_A fhat conj(ghat) Delta dxi.
cplx inner_product_Delta(const SpectralFunction& fhat, const SpectralFunction& ghat, const QuadratureRule& rule,
                         const ModelParams& p, const EvalOptions& opts = {});

/// <f, g>_n = sum f conj(g) / N.
cplx inner_product_n(const FockVector& f, const FockVector& g, const ModelParams& p);

/// Dense square complex matrix.
class ComplexMatrix {
public:
  explicit ComplexMatrix(std::size_t size = 0) : size_(size), data_(size * size) {}
  std::size_t size() const noexcept { return size_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
  cplx operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

private:
  std::size_t size_;
  std::vector<cplx> data_;
};

/// G[i][j] = <phi(lambda_i), phi(lambda_j)>_Delta.
ComplexMatrix gram_matrix(std::span<const Partition> lambdas, const QuadratureRule& rule, const ModelParams& p,
                          const EvalOptions& opts = {});

/// Largest |G_ij| / sqrt(G_ii G_jj) over i != j.
double max_normalized_off_diagonal(const ComplexMatrix& g);

/// (F_q f)(xi) = sum f(lambda) conj(phi_xi(lambda)) / N(lambda).
cplx fourier_forward(const FockVector& f, const SpectralPoint& xi, const ModelParams& p,
                     const EvalOptions& opts = {});

/// (F_q^-1 fhat)(lambda) = (2 pi)^-n int_A fhat(xi) phi_xi(lambda) Delta(xi) dxi.
cplx fourier_inverse(const SpectralFunction& fhat, const Partition& lambda, const QuadratureRule& rule,
                     const ModelParams& p, const EvalOptions& opts = {});
/// Batched inverse; fhat is evaluated once per node.
std::vector<cplx> fourier_inverse(const SpectralFunction& fhat, std::span<const Partition> lambdas,
                                  const QuadratureRule& rule, const ModelParams& p, const EvalOptions& opts = {});

/// Values of fhat at every node of a rule.
std::vector<cplx> sample(const SpectralFunction& fhat, const QuadratureRule& rule);

/// Kernel of a Fourier transform on l^2(Lambda_n).
enum class Kernel {
  interacting,  ///< normalized wave function Psi_xi (sign-sum form)
  free,         ///< Psi with Shat = 1 and N = 1 (impenetrable bosons)
};

/// Transform f -> fhat at the rule's nodes: fhat(xi_i) = sum f(lambda) conj(K_xi(lambda)).
std::vector<cplx> kernel_forward(const FockVector& f, Kernel kernel, const QuadratureRule& rule,
                                 const ModelParams& p, const EvalOptions& opts = {});
/// Inverse transform from node values: (2 pi)^-n sum_i w_i h_i K_xi_i(lambda).
std::vector<cplx> kernel_inverse(std::span<const cplx> node_values, std::span<const Partition> lambdas,
                                 Kernel kernel, const QuadratureRule& rule, const ModelParams& p,
                                 const EvalOptions& opts = {});

/// At least ten nodes per oscillation period of e^{i t E_n} along every axis
/// (points_per_axis >= 10 |t|); a heuristic, not an error bound.
bool resolves(const QuadratureRule& rule, double t);

struct Evolved {
  std::vector<cplx> values;  // (e^{itH} f)(lambda) for the requested lambdas
  bool resolved = true;      // quadrature resolution heuristic satisfied
};

/// (e^{itH} f)(lambda) = (2 pi)^-n int_A e^{i t E_n} fhat Psi_xi(lambda) dxi, fhat = F f,
/// for the transformed (symmetric) Hamiltonian.
Evolved evolve(const FockVector& f, double t, std::span<const Partition> lambdas, const QuadratureRule& rule,
               const ModelParams& p, const EvalOptions& opts = {});
cplx evolve(const FockVector& f, double t, const Partition& lambda, const QuadratureRule& rule,
            const ModelParams& p, const EvalOptions& opts = {});

/// Eigenvalues (ascending) of the one-particle transformed Hamiltonian truncated to
/// sites 0..sites-1, from LAPACK's symmetric tridiagonal solver.
std::vector<double> truncated_one_particle_spectrum(std::size_t sites, const ModelParams& p);

}  // namespace qboson
