#include "qboson/hall_littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_complex.hpp>

#include "qboson/algebra.hpp"
#include "qboson/errors.hpp"
#include "qboson/summation.hpp"

namespace qboson {

namespace {

using quad_complex = boost::multiprecision::cpp_complex_quad;
using quad_real = boost::multiprecision::cpp_bin_float_quad;

double distance_to_pi_multiple(double x) {
  const double pi = std::numbers::pi;
  const double k = std::round(x / pi);
  return std::abs(x - k * pi);
}

/// Signed permutations in the fixed enumeration order.
template <class F>
void for_each_signed_permutation(std::size_t n, F&& visit) {
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::vector<int> eps(n);
  const std::size_t masks = std::size_t{1} << n;
  do {
    for (std::size_t mask = 0; mask < masks; ++mask) {
      for (std::size_t j = 0; j < n; ++j) eps[j] = ((mask >> (n - 1 - j)) & 1U) ? -1 : 1;
      visit(sigma, eps);
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::string factor_name(const char* pattern, std::size_t j, std::size_t k = 0) {
  std::ostringstream os;
  if (k == 0)
    os << pattern << " with j=" << j + 1;
  else
    os << pattern << " with j=" << j + 1 << ", k=" << k;
  return os.str();
}

/// C(y) for one argument vector; templated on the complex type so that the
/// extended path shares the formula. I is the imaginary unit of that type.
template <class C>
C coefficient(const std::vector<C>& y, const ModelParams& p, double delta_sing) {
  using std::abs;
  using std::exp;
  const C I(0.0, 1.0);
  const C one(1.0, 0.0);
  const std::size_t n = y.size();
  C prod = one;
  auto check = [&](const C& den, const std::string& name) {
    if (static_cast<double>(abs(den)) < delta_sing)
      throw singularity_error("vanishing denominator in C: " + name);
  };
  for (std::size_t j = 0; j < n; ++j) {
    const C u = exp(-I * y[j]);
    const C num = one - C(p.a) * u + C(p.c) * u * u;
    const C den = one - u * u;
    check(den, factor_name("1 - exp(-2i xi_j)", j));
    prod *= num / den;
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      const C dm = exp(-I * (y[j] - y[k]));
      const C dp = exp(-I * (y[j] + y[k]));
      const C den_m = one - dm;
      const C den_p = one - dp;
      check(den_m, factor_name("1 - exp(-i(xi_j - xi_k))", j, k + 1));
      check(den_p, factor_name("1 - exp(-i(xi_j + xi_k))", j, k + 1));
      prod *= (one - C(p.q) * dm) / den_m;
      prod *= (one - C(p.q) * dp) / den_p;
    }
  }
  return prod;
}

template <class C>
void build_terms(const std::vector<C>& z, const ModelParams& p, double delta_sing, std::vector<C>& coeffs,
                 std::vector<C>& angles) {
  const std::size_t n = z.size();
  std::vector<C> y(n);
  for_each_signed_permutation(n, [&](const std::vector<std::size_t>& sigma, const std::vector<int>& eps) {
    for (std::size_t j = 0; j < n; ++j) y[j] = eps[j] > 0 ? z[sigma[j]] : -z[sigma[j]];
    coeffs.push_back(coefficient(y, p, delta_sing));
    angles.insert(angles.end(), y.begin(), y.end());
  });
}

/// Minimum |1 - e^{-i theta}| over all denominators of all C(eps z_sigma).
double complex_genericity_margin(std::span<const cplx> z) {
  const cplx I(0, 1);
  double m = std::numeric_limits<double>::infinity();
  auto visit = [&](cplx theta) {
    m = std::min(m, std::abs(1.0 - std::exp(-I * theta)));
    m = std::min(m, std::abs(1.0 - std::exp(I * theta)));
  };
  for (std::size_t j = 0; j < z.size(); ++j) {
    visit(2.0 * z[j]);
    for (std::size_t k = j + 1; k < z.size(); ++k) {
      visit(z[j] - z[k]);
      visit(z[j] + z[k]);
    }
  }
  return m;
}

bool is_real_point(std::span<const cplx> z) {
  return std::all_of(z.begin(), z.end(), [](cplx v) { return v.imag() == 0; });
}

Evaluated evaluate_extended(std::span<const cplx> z, const Partition& lambda, const ModelParams& p,
                            double delta_sing) {
  std::vector<quad_complex> zq;
  zq.reserve(z.size());
  for (cplx v : z) zq.emplace_back(quad_real(v.real()), quad_real(v.imag()));
  std::vector<quad_complex> coeffs;
  std::vector<quad_complex> angles;
  build_terms(zq, p, delta_sing, coeffs, angles);
  const quad_complex I(0.0, 1.0);
  const std::size_t n = z.size();
  quad_complex sum(0.0, 0.0);
  double max_mag = 0;
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    quad_complex phase(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) phase += quad_real(lambda[j]) * angles[t * n + j];
    const quad_complex term = coeffs[t] * exp(I * phase);
    max_mag = std::max(max_mag, static_cast<double>(abs(term)));
    sum += term;
  }
  Evaluated out;
  out.value = cplx(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
  out.diagnostics.term_count = coeffs.size();
  out.diagnostics.max_term_magnitude = max_mag;
  const double mag = static_cast<double>(abs(sum));
  out.diagnostics.condition = mag > 0 ? max_mag / mag : std::numeric_limits<double>::infinity();
  out.diagnostics.extended_precision = true;
  return out;
}

std::vector<cplx> to_complex(std::span<const double> xi) {
  return std::vector<cplx>(xi.begin(), xi.end());
}

void require_length(const Partition& lambda, std::size_t n) {
  if (lambda.length() != n)
    throw std::invalid_argument("partition " + to_string(lambda) + " has length " +
                                std::to_string(lambda.length()) + ", expected " + std::to_string(n));
}

}  // namespace

bool SpectralPoint::in_alcove() const {
  const double pi = std::numbers::pi;
  for (std::size_t j = 0; j < xi_.size(); ++j) {
    const double upper = j == 0 ? pi : xi_[j - 1];
    if (!(xi_[j] < upper && xi_[j] > 0)) return false;
  }
  return true;
}

double SpectralPoint::genericity_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < xi_.size(); ++j) {
    m = std::min(m, distance_to_pi_multiple(xi_[j]));
    for (std::size_t k = j + 1; k < xi_.size(); ++k) {
      m = std::min(m, distance_to_pi_multiple(xi_[j] - xi_[k]));
      m = std::min(m, distance_to_pi_multiple(xi_[j] + xi_[k]));
    }
  }
  return m;
}

double pochhammer_q(double c, double q, int m) {
  if (m < 0) throw std::invalid_argument("pochhammer_q needs m >= 0");
  double prod = 1;
  double power = 1;
  for (int k = 0; k < m; ++k) {
    prod *= 1 - c * power;
    power *= q;
  }
  return prod;
}

double norm_N(const Partition& lambda, const ModelParams& p) {
  const auto parts = lambda.parts();
  double prod = pochhammer_q(p.c, p.q, static_cast<int>(multiplicity(lambda, 0)));
  // parts are sorted, so equal parts form contiguous blocks
  std::size_t j = 0;
  while (j < parts.size()) {
    std::size_t k = j;
    while (k < parts.size() && parts[k] == parts[j]) ++k;
    prod *= q_factorial(static_cast<int>(k - j), p.q);
    j = k;
  }
  return prod;
}

double eigenvalue(std::span<const double> xi) {
  double e = 0;
  for (double v : xi) e += 2 * std::cos(v);
  return e;
}

cplx coeff_C(std::span<const double> xi, const ModelParams& p, double delta_sing) {
  return coefficient(to_complex(xi), p, delta_sing);
}

cplx coeff_C(std::span<const cplx> z, const ModelParams& p, double delta_sing) {
  return coefficient(std::vector<cplx>(z.begin(), z.end()), p, delta_sing);
}

PlaneWaveExpansion::PlaneWaveExpansion(std::span<const cplx> z, const ModelParams& p, double delta_sing)
    : n_(z.size()) {
  const std::size_t terms = (std::size_t{1} << n_) * static_cast<std::size_t>(std::tgamma(n_ + 1.0) + 0.5);
  coeffs_.reserve(terms);
  angles_.reserve(terms * n_);
  build_terms(std::vector<cplx>(z.begin(), z.end()), p, delta_sing, coeffs_, angles_);
}

PlaneWaveExpansion::PlaneWaveExpansion(std::span<const double> xi, const ModelParams& p, double delta_sing)
    : PlaneWaveExpansion(std::span<const cplx>(to_complex(xi)), p, delta_sing) {}

Evaluated PlaneWaveExpansion::evaluate(const Partition& lambda) const {
  require_length(lambda, n_);
  const cplx I(0, 1);
  CompensatedComplexSum sum;
  double max_mag = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    cplx phase{};
    for (std::size_t j = 0; j < n_; ++j) phase += static_cast<double>(lambda[j]) * angles_[t * n_ + j];
    const cplx term = coeffs_[t] * std::exp(I * phase);
    max_mag = std::max(max_mag, std::abs(term));
    sum.add(term);
  }
  Evaluated out;
  out.value = sum.value();
  out.diagnostics.term_count = coeffs_.size();
  out.diagnostics.max_term_magnitude = max_mag;
  const double mag = std::abs(out.value);
  out.diagnostics.condition = mag > 0 ? max_mag / mag : std::numeric_limits<double>::infinity();
  return out;
}

void require_generic(const SpectralPoint& xi, double delta_gen) {
  const double margin = xi.genericity_margin();
  if (margin < delta_gen) {
    std::ostringstream os;
    os << "spectral point not generic: xi_j or xi_j +- xi_k within " << margin
       << " of a multiple of pi (need >= " << delta_gen << ")";
    throw genericity_error(os.str());
  }
}

Evaluated phi(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p, const EvalOptions& opts) {
  require_generic(xi, opts.delta_gen);
  const auto z = to_complex(xi.values());
  return phi(std::span<const cplx>(z), lambda, p, opts);
}

Evaluated phi(std::span<const cplx> z, const Partition& lambda, const ModelParams& p, const EvalOptions& opts) {
  p.require_algebra_valid();
  require_length(lambda, z.size());
  if (is_real_point(z)) {
    std::vector<double> re;
    for (cplx v : z) re.push_back(v.real());
    require_generic(SpectralPoint(std::move(re)), opts.delta_gen);
  } else if (const double margin = complex_genericity_margin(z); margin < opts.delta_gen) {
    std::ostringstream os;
    os << "complex spectral point not generic: smallest denominator " << margin;
    throw genericity_error(os.str());
  }
  if (opts.precision == Precision::extended) return evaluate_extended(z, lambda, p, opts.delta_sing);
  return PlaneWaveExpansion(z, p, opts.delta_sing).evaluate(lambda);
}

double weight_Delta(const SpectralPoint& xi, const ModelParams& p, const EvalOptions& opts) {
  require_generic(xi, opts.delta_gen);
  return 1.0 / std::norm(coeff_C(xi.values(), p, opts.delta_sing));
}

std::vector<cplx> tau_vector(const ModelParams& p, std::size_t n) {
  std::vector<cplx> tau(n);
  const cplx r = p.r();
  for (std::size_t j = 0; j < n; ++j) tau[j] = r * std::pow(p.q, static_cast<double>(n - 1 - j));
  return tau;
}

std::vector<cplx> principal_point(const ModelParams& p, std::size_t n) {
  const auto tau = tau_vector(p, n);
  std::vector<cplx> z(n);
  const cplx I(0, 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (tau[j] == cplx{}) throw domain_error("principal specialization undefined for r = 0");
    z[j] = -I * std::log(tau[j]);
  }
  return z;
}

namespace {

cplx tau_power(const std::vector<cplx>& tau, const Partition& lambda) {
  cplx prod = 1;
  for (std::size_t j = 0; j < tau.size(); ++j) prod *= std::pow(tau[j], lambda[j]);
  return prod;
}

double norm_of_zero(const ModelParams& p, std::size_t n) {
  const double n0 = norm_N(Partition(std::vector<int>(n, 0)), p);
  if (n0 == 0) throw domain_error("N(0) vanishes; P_lambda normalization undefined");
  return n0;
}

}  // namespace

cplx p_normalized(std::span<const cplx> z, const Partition& lambda, const ModelParams& p, const EvalOptions& opts) {
  const auto tau = tau_vector(p, z.size());
  return tau_power(tau, lambda) / norm_of_zero(p, z.size()) * phi(z, lambda, p, opts).value;
}

cplx p_normalized(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p, const EvalOptions& opts) {
  require_generic(xi, opts.delta_gen);
  const auto z = to_complex(xi.values());
  return p_normalized(std::span<const cplx>(z), lambda, p, opts);
}

cplx pieri_V_plus(const Partition& lambda, std::size_t j, const ModelParams& p) {
  if (!lambda.raised(j))
    throw index_error("lambda + e_" + std::to_string(j + 1) + " leaves Lambda_n for " + to_string(lambda));
  const std::size_t n = lambda.length();
  const auto tau = tau_vector(p, n);
  const double delta = lambda[j] == 0 ? 1.0 : 0.0;
  const double J = static_cast<double>(j + 1);
  const double N = static_cast<double>(n);
  const double qc = std::pow(p.q, 2 * (N - J));
  cplx v = 1.0 / tau[j] * ((1 - p.c * p.c * delta * qc) / (1 + p.c * delta * qc));
  for (std::size_t k = j + 1; k < n; ++k) {
    if (lambda[k] != lambda[j]) continue;
    const double K = static_cast<double>(k + 1);
    v *= (1 - std::pow(p.q, 1 + K - J)) / (1 - std::pow(p.q, K - J));
    v *= (1 + p.c * delta * std::pow(p.q, 1 + 2 * N - K - J)) / (1 + p.c * delta * std::pow(p.q, 2 * N - K - J));
  }
  return v;
}

cplx pieri_V_plus_closed(const Partition& lambda, std::size_t j, const ModelParams& p) {
  if (!lambda.raised(j))
    throw index_error("lambda + e_" + std::to_string(j + 1) + " leaves Lambda_n for " + to_string(lambda));
  const auto tau = tau_vector(p, lambda.length());
  const int m0 = static_cast<int>(multiplicity(lambda, 0));
  const int mj = static_cast<int>(multiplicity(lambda, lambda[j]));
  double coeff = q_int(mj, p.q);
  if (lambda[j] == 0) coeff *= 1 - p.c * std::pow(p.q, m0 - 1);
  return coeff / tau[j];
}

cplx pieri_V_minus(const Partition& lambda, std::size_t j, const ModelParams& p) {
  if (!lambda.lowered(j))
    throw index_error("lambda - e_" + std::to_string(j + 1) + " leaves Lambda_n for " + to_string(lambda));
  const auto tau = tau_vector(p, lambda.length());
  const double J = static_cast<double>(j + 1);
  cplx v = tau[j];
  for (std::size_t k = 0; k < j; ++k) {
    if (lambda[k] != lambda[j]) continue;
    const double K = static_cast<double>(k + 1);
    v *= (1 - std::pow(p.q, 1 + J - K)) / (1 - std::pow(p.q, J - K));
  }
  return v;
}

cplx pieri_V_minus_closed(const Partition& lambda, std::size_t j, const ModelParams& p) {
  if (!lambda.lowered(j))
    throw index_error("lambda - e_" + std::to_string(j + 1) + " leaves Lambda_n for " + to_string(lambda));
  const auto tau = tau_vector(p, lambda.length());
  return tau[j] * q_int(static_cast<int>(multiplicity(lambda, lambda[j])), p.q);
}

PieriResidual pieri_residual(std::span<const cplx> z, const Partition& lambda, const ModelParams& p,
                             PieriForm form, const EvalOptions& opts) {
  const std::size_t n = z.size();
  require_length(lambda, n);
  const auto tau = tau_vector(p, n);
  if (p.r() == cplx{}) throw domain_error("Pieri formula needs r != 0 (tau_j^{-1} appears)");
  const cplx I(0, 1);

  auto P = [&](const Partition& mu) { return p_normalized(z, mu, p, opts); };
  const cplx p_lambda = P(lambda);
  const int m0 = static_cast<int>(multiplicity(lambda, 0));

  cplx x_sum{};
  cplx tau_sum{};
  for (std::size_t j = 0; j < n; ++j) {
    const cplx x = std::exp(I * z[j]);
    x_sum += x + 1.0 / x;
    tau_sum += tau[j] + 1.0 / tau[j];
  }

  PieriResidual out;
  double scale = 0;
  double max_p = std::abs(p_lambda);
  cplx lhs;
  cplx rhs{};
  if (form == PieriForm::expanded) {
    lhs = p_lambda * (x_sum - tau_sum);
    scale += std::abs(lhs);
    for (std::size_t j = 0; j < n; ++j) {
      if (auto up = lambda.raised(j)) {
        const cplx pu = P(*up);
        const cplx v = pieri_V_plus(lambda, j, p);
        rhs += v * (pu - p_lambda);
        scale += std::abs(v) * (std::abs(pu) + std::abs(p_lambda));
        max_p = std::max(max_p, std::abs(pu));
      }
      if (auto down = lambda.lowered(j)) {
        const cplx pd = P(*down);
        const cplx v = pieri_V_minus(lambda, j, p);
        rhs += v * (pd - p_lambda);
        scale += std::abs(v) * (std::abs(pd) + std::abs(p_lambda));
        max_p = std::max(max_p, std::abs(pd));
      }
    }
  } else {
    lhs = p_lambda * x_sum;
    scale += std::abs(lhs);
    const cplx diag = p.a * q_int(m0, p.q) * p_lambda;
    rhs += diag;
    scale += std::abs(diag);
    for (std::size_t j = 0; j < n; ++j) {
      const double mj = q_int(static_cast<int>(multiplicity(lambda, lambda[j])), p.q);
      if (auto down = lambda.lowered(j)) {
        const cplx term = tau[j] * mj * P(*down);
        rhs += term;
        scale += std::abs(term);
        max_p = std::max(max_p, std::abs(term));
      }
      if (auto up = lambda.raised(j)) {
        double coeff = mj;
        if (lambda[j] == 0) coeff *= 1 - p.c * std::pow(p.q, m0 - 1);
        const cplx term = coeff / tau[j] * P(*up);
        rhs += term;
        scale += std::abs(term);
        max_p = std::max(max_p, std::abs(term));
      }
    }
  }
  out.residual = std::abs(lhs - rhs);
  out.scale = scale;
  out.degenerate = !(scale > 0) || max_p == 0;
  out.relative = scale > 0 ? out.residual / scale : 0.0;

  // tau-sum bridging identity between the two forms
  cplx bridge = tau_sum;
  double bridge_scale = std::abs(tau_sum);
  for (std::size_t j = 0; j < n; ++j) {
    const double mj = q_int(static_cast<int>(multiplicity(lambda, lambda[j])), p.q);
    if (lambda.lowered(j)) {
      bridge -= tau[j] * mj;
      bridge_scale += std::abs(tau[j] * mj);
    }
    if (lambda.raised(j)) {
      bridge -= mj / tau[j];
      bridge_scale += std::abs(mj / tau[j]);
    }
  }
  const cplx expected = p.r() * q_int(m0, p.q);
  out.bridging_residual = std::abs(bridge - expected);
  out.bridging_scale = bridge_scale + std::abs(expected);
  out.bridging_holds = out.bridging_residual <= 1e-12 * out.bridging_scale;
  return out;
}

PieriResidual pieri_residual(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p,
                             PieriForm form, const EvalOptions& opts) {
  require_generic(xi, opts.delta_gen);
  const auto z = to_complex(xi.values());
  return pieri_residual(std::span<const cplx>(z), lambda, p, form, opts);
}

}  // namespace qboson
