#include "qboson/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gsl/gsl_integration.h>
#include <lapacke.h>

#include "parallel.hpp"
#include "qboson/algebra.hpp"
#include "qboson/errors.hpp"
#include "qboson/scattering.hpp"
#include "qboson/summation.hpp"

namespace qboson {

namespace {

constexpr double pi = std::numbers::pi;

struct GaussLegendre {
  std::vector<double> nodes;  // descending
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(std::size_t points) {
  // The Golub-Welsch rule stays accurate to machine precision for any order; the
  // precomputed glfixed tables lose about six digits beyond 100 points.
  std::unique_ptr<gsl_integration_fixed_workspace, decltype(&gsl_integration_fixed_free)> table(
      gsl_integration_fixed_alloc(gsl_integration_fixed_legendre, points, 0.0, pi, 0.0, 0.0),
      &gsl_integration_fixed_free);
  if (!table) throw std::runtime_error("failed to allocate Gauss-Legendre rule");
  const double* x = gsl_integration_fixed_nodes(table.get());
  const double* w = gsl_integration_fixed_weights(table.get());
  std::vector<std::pair<double, double>> pts(points);
  for (std::size_t i = 0; i < points; ++i) pts[i] = {x[i], w[i]};
  std::sort(pts.begin(), pts.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  GaussLegendre out;
  for (const auto& [x, w] : pts) {
    out.nodes.push_back(x);
    out.weights.push_back(w);
  }
  return out;
}

double factorial(std::size_t n) {
  double f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

/// Uniform in [-1, 1] from the top 53 bits; identical on every standard library.
double symmetric_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

double two_pi_power(std::size_t n) { return std::pow(2 * pi, -static_cast<double>(n)); }

}  // namespace

QuadratureRule build_rule(std::size_t n, std::size_t points_per_axis, QuadratureMode mode,
                          const JitterOptions& jitter) {
  if (points_per_axis < 2) throw std::invalid_argument("quadrature needs at least 2 points per axis");
  if (n == 0) throw std::invalid_argument("quadrature dimension must be positive");
  const GaussLegendre gl = gauss_legendre(points_per_axis);

  QuadratureRule rule;
  rule.dimension = n;
  rule.points_per_axis = points_per_axis;
  rule.mode = mode;
  if (mode == QuadratureMode::full_cube) {
    rule.reflection_factor = std::ldexp(1.0, static_cast<int>(n));
    rule.symmetry_factor = 1.0 / (rule.reflection_factor * factorial(n));
  }

  std::vector<std::size_t> index(n, 0);
  auto emit = [&] {
    double w = rule.reflection_factor * rule.symmetry_factor;
    for (std::size_t j = 0; j < n; ++j) {
      rule.nodes.push_back(gl.nodes[index[j]]);
      w *= gl.weights[index[j]];
    }
    if (mode == QuadratureMode::alcove) {
      // one representative per orbit: divide by prod(g!) over tie groups
      std::size_t j = 0;
      while (j < n) {
        std::size_t k = j;
        while (k < n && index[k] == index[j]) ++k;
        w /= factorial(k - j);
        j = k;
      }
    }
    rule.weights.push_back(w);
  };
  // odometer over index tuples; alcove mode keeps index_1 <= index_2 <= ... (nodes descending)
  while (true) {
    bool keep = true;
    if (mode == QuadratureMode::alcove)
      for (std::size_t j = 1; j < n; ++j) keep = keep && index[j - 1] <= index[j];
    if (keep) emit();
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (++index[j] < points_per_axis) break;
      index[j] = 0;
      if (j == 0) {
        j = n + 1;
        break;
      }
    }
    if (j == n + 1) break;
  }

  std::mt19937_64 gen(jitter.seed);
  const double amplitude = 4 * jitter.delta_gen;
  std::vector<double> trial(n);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    double* node = rule.nodes.data() + i * n;
    if (SpectralPoint(std::vector<double>(node, node + n)).generic(jitter.delta_gen)) continue;
    bool fixed = false;
    for (int attempt = 0; attempt < 64 && !fixed; ++attempt) {
      for (std::size_t j = 0; j < n; ++j) {
        double v = node[j] + amplitude * symmetric_unit(gen);
        trial[j] = std::clamp(v, amplitude, pi - amplitude);
      }
      if (mode == QuadratureMode::alcove) std::sort(trial.begin(), trial.end(), std::greater<>());
      fixed = SpectralPoint(trial).generic(jitter.delta_gen);
    }
    if (!fixed) throw std::runtime_error("could not jitter quadrature node to a generic point");
    std::copy(trial.begin(), trial.end(), node);
    ++rule.jittered;
  }
  return rule;
}

cplx inner_product_Delta(const SpectralFunction& fhat, const SpectralFunction& ghat, const QuadratureRule& rule,
                         const ModelParams& p, const EvalOptions& opts) {
  p.require_orthogonality_domain();
  std::vector<CompensatedComplexSum> partial(detail::chunk_count(rule.size()));
  detail::for_each_chunk(rule.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto node = rule.node(i);
      const double delta = 1.0 / std::norm(coeff_C(node, p, opts.delta_sing));
      partial[c].add(rule.weights[i] * delta * fhat(node) * std::conj(ghat(node)));
    }
  });
  CompensatedComplexSum total;
  for (const auto& s : partial) total.merge(s);
  return two_pi_power(rule.dimension) * total.value();
}

cplx inner_product_n(const FockVector& f, const FockVector& g, const ModelParams& p) {
  if (f.grade() != g.grade()) throw grade_mismatch_error("inner product of different grades");
  p.require_orthogonality_domain();
  CompensatedComplexSum sum;
  for (const auto& [lambda, v] : f.amplitudes()) {
    const cplx w = g(lambda);
    if (w != cplx{}) sum.add(v * std::conj(w) / norm_N(lambda, p));
  }
  return sum.value();
}

ComplexMatrix gram_matrix(std::span<const Partition> lambdas, const QuadratureRule& rule, const ModelParams& p,
                          const EvalOptions& opts) {
  p.require_orthogonality_domain();
  const std::size_t m = lambdas.size();
  for (const auto& l : lambdas)
    if (l.length() != rule.dimension) throw std::invalid_argument("partition length differs from rule dimension");
  ComplexMatrix g(m);
  if (m == 0) return g;
  const std::size_t chunks = detail::chunk_count(rule.size());
  std::vector<std::vector<CompensatedComplexSum>> partial(chunks, std::vector<CompensatedComplexSum>(m * m));
  detail::for_each_chunk(rule.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    std::vector<cplx> values(m);
    for (std::size_t i = begin; i < end; ++i) {
      const PlaneWaveExpansion pw(rule.node(i), p, opts.delta_sing);
      const double weight = rule.weights[i] / std::norm(pw.coefficient());
      for (std::size_t a = 0; a < m; ++a) values[a] = pw.evaluate(lambdas[a]).value;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) partial[c][a * m + b].add(weight * values[a] * std::conj(values[b]));
    }
  });
  const double prefactor = two_pi_power(rule.dimension);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      CompensatedComplexSum total;
      for (const auto& part : partial) total.merge(part[a * m + b]);
      g(a, b) = prefactor * total.value();
    }
  return g;
}

double max_normalized_off_diagonal(const ComplexMatrix& g) {
  double worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      const double scale = std::sqrt(std::abs(g(i, i)) * std::abs(g(j, j)));
      worst = std::max(worst, std::abs(g(i, j)) / scale);
    }
  return worst;
}

cplx fourier_forward(const FockVector& f, const SpectralPoint& xi, const ModelParams& p, const EvalOptions& opts) {
  p.require_orthogonality_domain();
  require_generic(xi, opts.delta_gen);
  if (f.is_zero()) return {};
  if (static_cast<std::size_t>(f.grade()) != xi.size())
    throw grade_mismatch_error("Fock grade differs from spectral dimension");
  CompensatedComplexSum sum;
  if (opts.precision == Precision::extended) {
    for (const auto& [lambda, v] : f.amplitudes())
      sum.add(v * std::conj(phi(xi, lambda, p, opts).value) / norm_N(lambda, p));
  } else {
    const PlaneWaveExpansion pw(xi.values(), p, opts.delta_sing);
    for (const auto& [lambda, v] : f.amplitudes())
      sum.add(v * std::conj(pw.evaluate(lambda).value) / norm_N(lambda, p));
  }
  return sum.value();
}

std::vector<cplx> sample(const SpectralFunction& fhat, const QuadratureRule& rule) {
  std::vector<cplx> out(rule.size());
  detail::for_each_chunk(rule.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = fhat(rule.node(i));
  });
  return out;
}

std::vector<cplx> fourier_inverse(const SpectralFunction& fhat, std::span<const Partition> lambdas,
                                  const QuadratureRule& rule, const ModelParams& p, const EvalOptions& opts) {
  p.require_orthogonality_domain();
  const std::size_t m = lambdas.size();
  for (const auto& l : lambdas)
    if (l.length() != rule.dimension) throw std::invalid_argument("partition length differs from rule dimension");
  std::vector<std::vector<CompensatedComplexSum>> partial(detail::chunk_count(rule.size()),
                                                          std::vector<CompensatedComplexSum>(m));
  detail::for_each_chunk(rule.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto node = rule.node(i);
      const cplx h = fhat(node);
      if (h == cplx{}) continue;
      const PlaneWaveExpansion pw(node, p, opts.delta_sing);
      const cplx weight = rule.weights[i] / std::norm(pw.coefficient()) * h;
      for (std::size_t a = 0; a < m; ++a) partial[c][a].add(weight * pw.evaluate(lambdas[a]).value);
    }
  });
  std::vector<cplx> out(m);
  const double prefactor = two_pi_power(rule.dimension);
  for (std::size_t a = 0; a < m; ++a) {
    CompensatedComplexSum total;
    for (const auto& part : partial) total.merge(part[a]);
    out[a] = prefactor * total.value();
  }
  return out;
}

cplx fourier_inverse(const SpectralFunction& fhat, const Partition& lambda, const QuadratureRule& rule,
                     const ModelParams& p, const EvalOptions& opts) {
  return fourier_inverse(fhat, std::span<const Partition>(&lambda, 1), rule, p, opts).front();
}

std::vector<cplx> kernel_forward(const FockVector& f, Kernel kernel, const QuadratureRule& rule,
                                 const ModelParams& p, const EvalOptions& opts) {
  if (kernel == Kernel::interacting) p.require_orthogonality_domain();
  if (!f.is_zero() && static_cast<std::size_t>(f.grade()) != rule.dimension)
    throw grade_mismatch_error("Fock grade differs from rule dimension");
  std::vector<cplx> out(rule.size());
  if (f.is_zero()) return out;
  detail::for_each_chunk(rule.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const WaveFunctionExpansion k(rule.node(i), p, kernel == Kernel::free, opts.delta_sing);
      CompensatedComplexSum sum;
      for (const auto& [lambda, v] : f.amplitudes()) sum.add(v * std::conj(k(lambda)));
      out[i] = sum.value();
    }
  });
  return out;
}

std::vector<cplx> kernel_inverse(std::span<const cplx> node_values, std::span<const Partition> lambdas,
                                 Kernel kernel, const QuadratureRule& rule, const ModelParams& p,
                                 const EvalOptions& opts) {
  if (kernel == Kernel::interacting) p.require_orthogonality_domain();
  if (node_values.size() != rule.size()) throw std::invalid_argument("node value count differs from rule size");
  const std::size_t m = lambdas.size();
  std::vector<std::vector<CompensatedComplexSum>> partial(detail::chunk_count(rule.size()),
                                                          std::vector<CompensatedComplexSum>(m));
  detail::for_each_chunk(rule.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      if (node_values[i] == cplx{}) continue;
      const WaveFunctionExpansion k(rule.node(i), p, kernel == Kernel::free, opts.delta_sing);
      const cplx weight = rule.weights[i] * node_values[i];
      for (std::size_t a = 0; a < m; ++a) partial[c][a].add(weight * k(lambdas[a]));
    }
  });
  std::vector<cplx> out(m);
  const double prefactor = two_pi_power(rule.dimension);
  for (std::size_t a = 0; a < m; ++a) {
    CompensatedComplexSum total;
    for (const auto& part : partial) total.merge(part[a]);
    out[a] = prefactor * total.value();
  }
  return out;
}

bool resolves(const QuadratureRule& rule, double t) {
  // e^{itE} oscillates along one axis with rate |t dE/dxi_j| <= 2|t|, i.e. period >= pi/|t|
  if (t == 0) return true;
  const double nodes_per_period = static_cast<double>(rule.points_per_axis) / std::abs(t);
  return nodes_per_period >= 10;
}

Evolved evolve(const FockVector& f, double t, std::span<const Partition> lambdas, const QuadratureRule& rule,
               const ModelParams& p, const EvalOptions& opts) {
  p.require_orthogonality_domain();
  std::vector<cplx> fhat = kernel_forward(f, Kernel::interacting, rule, p, opts);
  const cplx I(0, 1);
  for (std::size_t i = 0; i < rule.size(); ++i) fhat[i] *= std::exp(I * t * eigenvalue(rule.node(i)));
  Evolved out;
  out.values = kernel_inverse(fhat, lambdas, Kernel::interacting, rule, p, opts);
  out.resolved = resolves(rule, t);
  return out;
}

cplx evolve(const FockVector& f, double t, const Partition& lambda, const QuadratureRule& rule,
            const ModelParams& p, const EvalOptions& opts) {
  return evolve(f, t, std::span<const Partition>(&lambda, 1), rule, p, opts).values.front();
}

std::vector<double> truncated_one_particle_spectrum(std::size_t sites, const ModelParams& p) {
  p.require_orthogonality_domain();
  if (sites == 0) return {};
  std::vector<double> diag(sites);
  std::vector<double> off(sites > 1 ? sites - 1 : 1);
  for (std::size_t l = 0; l < sites; ++l) {
    const Partition site{static_cast<int>(l)};
    const FockVector column = apply_H_transformed(FockVector::ket(site), p);
    diag[l] = column(site).real();
    if (l + 1 < sites) off[l] = column(Partition{static_cast<int>(l + 1)}).real();
  }
  const lapack_int info =
      LAPACKE_dstev(LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(sites), diag.data(), off.data(), nullptr, 1);
  if (info != 0) throw std::runtime_error("dstev failed with info " + std::to_string(info));
  return diag;
}

}  // namespace qboson
