#include "qboson/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qboson/errors.hpp"
#include "qboson/summation.hpp"

namespace qboson {

namespace {

const cplx I(0, 1);

cplx bulk_numerator(double x, const ModelParams& p) { return 1.0 - p.q * std::exp(-I * x); }
cplx bulk_denominator(double x, const ModelParams& p) { return 1.0 - p.q * std::exp(I * x); }

cplx boundary_numerator(double x, const ModelParams& p) {
  return 1.0 - p.a * std::exp(-I * x) + p.c * std::exp(-2.0 * I * x);
}
cplx boundary_denominator(double x, const ModelParams& p) {
  return 1.0 - p.a * std::exp(I * x) + p.c * std::exp(2.0 * I * x);
}

void check_denominator(cplx den, double delta_sing, const char* what, double x) {
  if (std::abs(den) < delta_sing) {
    std::ostringstream os;
    os << "vanishing denominator of " << what << " at x=" << x;
    throw singularity_error(os.str());
  }
}

int permutation_sign(const std::vector<std::size_t>& sigma) {
  int sign = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j]) sign = -sign;
  return sign;
}

/// i^(n^2) exactly: 1 for even n, i for odd n.
cplx leading_phase(std::size_t n) { return n % 2 == 0 ? cplx(1, 0) : cplx(0, 1); }

}  // namespace

cplx s_bulk(double x, const ModelParams& p, double delta_sing) {
  const cplx den = bulk_denominator(x, p);
  check_denominator(den, delta_sing, "s", x);
  return bulk_numerator(x, p) / den;
}

cplx s_bulk_sqrt(double x, const ModelParams& p, double delta_sing) {
  const cplx den = bulk_denominator(x, p);
  check_denominator(den, delta_sing, "s", x);
  return bulk_numerator(x, p) / std::abs(den);
}

cplx s_boundary(double x, const ModelParams& p, double delta_sing) {
  const cplx den = boundary_denominator(x, p);
  check_denominator(den, delta_sing, "s_0", x);
  return boundary_numerator(x, p) / den;
}

cplx s_boundary_sqrt(double x, const ModelParams& p, double delta_sing) {
  const cplx den = boundary_denominator(x, p);
  check_denominator(den, delta_sing, "s_0", x);
  return boundary_numerator(x, p) / std::abs(den);
}

cplx S_hat(std::span<const double> xi, const ModelParams& p, double delta_sing) {
  cplx prod = 1;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    for (std::size_t k = j + 1; k < xi.size(); ++k)
      prod *= s_bulk(xi[j] - xi[k], p, delta_sing) * s_bulk(xi[j] + xi[k], p, delta_sing);
    prod *= s_boundary(xi[j], p, delta_sing);
  }
  return prod;
}

cplx S_hat_sqrt(std::span<const double> xi, const ModelParams& p, double delta_sing) {
  cplx prod = 1;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    for (std::size_t k = j + 1; k < xi.size(); ++k)
      prod *= s_bulk_sqrt(xi[j] - xi[k], p, delta_sing) * s_bulk_sqrt(xi[j] + xi[k], p, delta_sing);
    prod *= s_boundary_sqrt(xi[j], p, delta_sing);
  }
  return prod;
}

WaveFunctionExpansion::WaveFunctionExpansion(std::span<const double> xi, const ModelParams& p, bool free,
                                             double delta_sing)
    : n_(xi.size()), free_(free), params_(p) {
  std::vector<std::size_t> sigma(n_);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  std::vector<double> y(n_);
  const std::size_t masks = std::size_t{1} << n_;
  do {
    const int perm_sign = permutation_sign(sigma);
    for (std::size_t mask = 0; mask < masks; ++mask) {
      int sign = perm_sign;
      for (std::size_t j = 0; j < n_; ++j) {
        const bool flip = (mask >> (n_ - 1 - j)) & 1U;
        y[j] = flip ? -xi[sigma[j]] : xi[sigma[j]];
        if (flip) sign = -sign;
      }
      coeffs_.push_back(free_ ? cplx(sign) : static_cast<double>(sign) * S_hat_sqrt(y, p, delta_sing));
      angles_.insert(angles_.end(), y.begin(), y.end());
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

cplx WaveFunctionExpansion::operator()(const Partition& lambda) const {
  if (lambda.length() != n_) throw std::invalid_argument("partition length differs from spectral dimension");
  CompensatedComplexSum sum;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    double phase = 0;
    // rho_j = n - j for 0-based j, i.e. (n, n-1, ..., 1)
    for (std::size_t j = 0; j < n_; ++j) phase += static_cast<double>(n_ - j + lambda[j]) * angles_[t * n_ + j];
    sum.add(coeffs_[t] * std::exp(I * phase));
  }
  if (free_) return sum.value();
  return sum.value() / std::sqrt(norm_N(lambda, params_));
}

cplx psi(const SpectralPoint& xi, const Partition& lambda, const ModelParams& p, PsiMethod method,
         const EvalOptions& opts) {
  p.require_orthogonality_domain();
  if (!xi.in_alcove()) throw genericity_error("Psi is defined for xi in the fundamental alcove");
  require_generic(xi, opts.delta_gen);
  if (method == PsiMethod::sign_sum) return WaveFunctionExpansion(xi.values(), p, false, opts.delta_sing)(lambda);
  const cplx c = coeff_C(xi.values(), p, opts.delta_sing);
  const cplx value = phi(xi, lambda, p, opts).value;
  return leading_phase(xi.size()) / std::abs(c) / std::sqrt(norm_N(lambda, p)) * value;
}

std::vector<double> OrderingData::apply(std::span<const double> xi) const {
  std::vector<double> out(sigma.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) out[j] = epsilon[j] * xi[sigma[j]];
  return out;
}

OrderingData ordering_map(std::span<const double> xi, double tol) {
  const std::size_t n = xi.size();
  std::vector<double> speed(n);
  for (std::size_t j = 0; j < n; ++j) {
    speed[j] = std::abs(std::sin(xi[j]));
    if (speed[j] <= tol) {
      std::ostringstream os;
      os << "grad E_n vanishes in component " << j + 1 << " (xi=" << xi[j] << ")";
      throw ordering_error(os.str());
    }
  }
  OrderingData out;
  out.sigma.resize(n);
  std::iota(out.sigma.begin(), out.sigma.end(), std::size_t{0});
  std::stable_sort(out.sigma.begin(), out.sigma.end(),
                   [&](std::size_t l, std::size_t r) { return speed[l] > speed[r]; });
  for (std::size_t j = 1; j < n; ++j) {
    if (speed[out.sigma[j - 1]] - speed[out.sigma[j]] <= tol) {
      std::ostringstream os;
      os << "components " << out.sigma[j - 1] + 1 << " and " << out.sigma[j] + 1
         << " of grad E_n tie in absolute value";
      throw ordering_error(os.str());
    }
  }
  out.epsilon.resize(n);
  // -2 sin(eps xi) > 0  <=>  eps = -sign(sin xi)
  for (std::size_t j = 0; j < n; ++j) out.epsilon[j] = std::sin(xi[out.sigma[j]]) > 0 ? -1 : 1;
  return out;
}

cplx apply_S(const SpectralFunction& fhat, std::span<const double> xi, const ModelParams& p, SPower power) {
  const auto ordered = ordering_map(xi).apply(xi);
  cplx factor;
  switch (power) {
    case SPower::full: factor = S_hat(ordered, p); break;
    case SPower::inverse: factor = 1.0 / S_hat(ordered, p); break;
    case SPower::half: factor = S_hat_sqrt(ordered, p); break;
    case SPower::inverse_half: factor = 1.0 / S_hat_sqrt(ordered, p); break;
  }
  return factor * fhat(xi);
}

namespace {

/// Kernel values on every (node, lambda) pair of a window, cached when small.
class KernelTable {
public:
  KernelTable(Kernel kernel, const QuadratureRule& rule, std::span<const Partition> window, const ModelParams& p,
              double delta_sing)
      : rule_(rule), window_(window), params_(p), free_(kernel == Kernel::free), delta_sing_(delta_sing) {
    constexpr std::size_t cache_limit = std::size_t{1} << 22;
    if (rule.size() * window.size() <= cache_limit) {
      table_.resize(rule.size() * window.size());
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const WaveFunctionExpansion k(rule.node(i), p, free_, delta_sing);
        for (std::size_t a = 0; a < window.size(); ++a) table_[i * window.size() + a] = k(window[a]);
      }
    }
  }

  std::vector<cplx> forward(std::span<const cplx> values) const {
    std::vector<cplx> out(rule_.size());
    std::vector<cplx> row(window_.size());
    for (std::size_t i = 0; i < rule_.size(); ++i) {
      const cplx* k = kernel_row(i, row);
      CompensatedComplexSum sum;
      for (std::size_t a = 0; a < window_.size(); ++a)
        if (values[a] != cplx{}) sum.add(values[a] * std::conj(k[a]));
      out[i] = sum.value();
    }
    return out;
  }

  std::vector<cplx> inverse(std::span<const cplx> node_values) const {
    std::vector<CompensatedComplexSum> sums(window_.size());
    std::vector<cplx> row(window_.size());
    for (std::size_t i = 0; i < rule_.size(); ++i) {
      const cplx* k = kernel_row(i, row);
      const cplx w = rule_.weights[i] * node_values[i];
      for (std::size_t a = 0; a < window_.size(); ++a) sums[a].add(w * k[a]);
    }
    const double prefactor = std::pow(2 * std::numbers::pi, -static_cast<double>(rule_.dimension));
    std::vector<cplx> out(window_.size());
    for (std::size_t a = 0; a < window_.size(); ++a) out[a] = prefactor * sums[a].value();
    return out;
  }

private:
  const cplx* kernel_row(std::size_t i, std::vector<cplx>& scratch) const {
    if (!table_.empty()) return table_.data() + i * window_.size();
    const WaveFunctionExpansion k(rule_.node(i), params_, free_, delta_sing_);
    for (std::size_t a = 0; a < window_.size(); ++a) scratch[a] = k(window_[a]);
    return scratch.data();
  }

  const QuadratureRule& rule_;
  std::span<const Partition> window_;
  ModelParams params_;
  bool free_;
  double delta_sing_;
  std::vector<cplx> table_;
};

double l2_distance(std::span<const cplx> a, std::span<const cplx> b) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < a.size(); ++i) sum.add(std::norm(a[i] - b[i]));
  return std::sqrt(sum.value());
}

}  // namespace

ProbeTable wave_operator_probe(const FockVector& f, std::span<const double> t_list, const QuadratureRule& rule,
                               int window_max_part, const ModelParams& p, const EvalOptions& opts) {
  p.require_orthogonality_domain();
  if (f.grade() <= 0 || static_cast<std::size_t>(f.grade()) != rule.dimension)
    throw grade_mismatch_error("probe vector grade must equal the rule dimension");
  if (f.max_part() > window_max_part) throw std::invalid_argument("probe vector not supported inside the window");

  const std::vector<Partition> window = enumerate(rule.dimension, window_max_part);
  std::vector<cplx> initial(window.size());
  for (std::size_t a = 0; a < window.size(); ++a) initial[a] = f(window[a]);

  const KernelTable interacting(Kernel::interacting, rule, window, p, opts.delta_sing);
  const KernelTable free(Kernel::free, rule, window, p, opts.delta_sing);

  const std::vector<cplx> free_hat = free.forward(initial);
  std::vector<double> energy(rule.size());
  std::vector<cplx> half_phase(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto node = rule.node(i);
    energy[i] = eigenvalue(node);
    half_phase[i] = S_hat_sqrt(ordering_map(node).apply(node), p, opts.delta_sing);
  }
  auto target_for = [&](bool forward_in_time) {
    std::vector<cplx> hat(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i)
      hat[i] = (forward_in_time ? 1.0 / half_phase[i] : half_phase[i]) * free_hat[i];
    return interacting.inverse(hat);
  };
  const std::vector<cplx> target_plus = target_for(true);
  const std::vector<cplx> target_minus = target_for(false);

  // parts beyond 90% of the window count as edge weight
  const int edge = window_max_part - std::max(1, window_max_part / 10);

  ProbeTable table;
  for (double t : t_list) {
    std::vector<cplx> hat(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) hat[i] = std::exp(-I * t * energy[i]) * free_hat[i];
    const std::vector<cplx> free_evolved = free.inverse(hat);

    double total = 0;
    double outer = 0;
    for (std::size_t a = 0; a < window.size(); ++a) {
      total += std::norm(free_evolved[a]);
      if (window[a].max_part() > edge) outer += std::norm(free_evolved[a]);
    }
    if (total > 0 && outer > 1e-8 * total) table.truncation_warning = true;
    if (!resolves(rule, t)) table.resolution_warning = true;

    std::vector<cplx> back = interacting.forward(free_evolved);
    for (std::size_t i = 0; i < rule.size(); ++i) back[i] *= std::exp(I * t * energy[i]);
    const std::vector<cplx> evolved = interacting.inverse(back);

    ProbeRow row;
    row.t = t;
    row.distance = l2_distance(evolved, t >= 0 ? target_plus : target_minus);
    row.window_size = window.size();
    row.quadrature_points = rule.size();
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace qboson
