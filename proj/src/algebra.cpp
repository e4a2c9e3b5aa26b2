#include "qboson/algebra.hpp"

#include <cmath>
#include <set>

#include "qboson/errors.hpp"
#include "qboson/hall_littlewood.hpp"

namespace qboson {

double q_int(int m, double q) {
  if (m < 0) throw std::invalid_argument("q_int needs m >= 0");
  if (q == 1) throw domain_error("q_int undefined at q = 1");
  double sum = 0;
  double power = 1;
  for (int k = 0; k < m; ++k) {
    sum += power;
    power *= q;
  }
  return sum;
}

double q_factorial(int m, double q) {
  double prod = 1;
  for (int k = 2; k <= m; ++k) prod *= q_int(k, q);
  return prod;
}

FockVector annihilate(int l, const FockVector& f) {
  if (l < 0) throw std::invalid_argument("site index must be non-negative");
  FockVector out(f.grade() - 1 < -1 ? -1 : f.grade() - 1);
  if (f.grade() <= 0) return out;
  for (const auto& [lambda, v] : f.amplitudes()) {
    // f(beta*_l mu) = v exactly when lambda = beta*_l mu, i.e. mu = beta_l lambda
    if (multiplicity(lambda, l) > 0) out.add(delete_part(lambda, l), v);
  }
  return out;
}

FockVector create(int l, const FockVector& f, const ModelParams& p) {
  if (l < 0) throw std::invalid_argument("site index must be non-negative");
  p.require_algebra_valid();
  FockVector out(f.grade() + 1);
  for (const auto& [mu, v] : f.amplitudes()) {
    const Partition lambda = insert_part(mu, l);
    const auto ml = static_cast<int>(multiplicity(lambda, l));
    const auto m0 = static_cast<int>(multiplicity(lambda, 0));
    double coeff = q_int(ml, p.q);
    if (l == 0) coeff *= 1 - p.c * std::pow(p.q, m0 - 1);
    out.add(lambda, coeff * v);
  }
  return out;
}

FockVector count_op(int l, int k, const FockVector& f, const ModelParams& p) {
  p.require_algebra_valid();
  FockVector out(f.grade());
  for (const auto& [lambda, v] : f.amplitudes()) {
    const auto ml = static_cast<int>(multiplicity(lambda, l));
    out.add(lambda, std::pow(p.q, ml + k) * v);
  }
  return out;
}

FockVector apply_H_composed(const FockVector& f, const ModelParams& p) {
  p.require_algebra_valid();
  // [N_0] = (1 - q^(N_0)) / (1 - q)
  FockVector out = (f - count_op(0, 0, f, p)) * amplitude(p.a / (1 - p.q));
  const int top = f.max_part() + 1;
  for (int l = 0; l <= top; ++l) {
    out += annihilate(l + 1, create(l, f, p));
    out += create(l + 1, annihilate(l, f), p);
  }
  return out;
}

namespace {

/// Every lambda where the three-term action of H can be nonzero.
std::set<Partition> neighbourhood(const FockVector& f) {
  std::set<Partition> out;
  for (const auto& [mu, _] : f.amplitudes()) {
    out.insert(mu);
    for (std::size_t j = 0; j < mu.length(); ++j) {
      if (auto up = mu.raised(j)) out.insert(*up);
      if (auto down = mu.lowered(j)) out.insert(*down);
    }
  }
  return out;
}

}  // namespace

FockVector apply_H_direct(const FockVector& f, const ModelParams& p) {
  p.require_algebra_valid();
  FockVector out(f.grade());
  if (f.grade() <= 0) return out;
  for (const Partition& lambda : neighbourhood(f)) {
    const auto m0 = static_cast<int>(multiplicity(lambda, 0));
    amplitude value = p.a * q_int(m0, p.q) * f(lambda);
    for (std::size_t j = 0; j < lambda.length(); ++j) {
      const int mj = static_cast<int>(multiplicity(lambda, lambda[j]));
      if (auto up = lambda.raised(j)) {
        double coeff = q_int(mj, p.q);
        if (lambda[j] == 0) coeff *= 1 - p.c * std::pow(p.q, m0 - 1);
        value += coeff * f(*up);
      }
      if (auto down = lambda.lowered(j)) value += q_int(mj, p.q) * f(*down);
    }
    out.add(lambda, value);
  }
  return out;
}

FockVector apply_H_transformed(const FockVector& f, const ModelParams& p) {
  p.require_orthogonality_domain();
  FockVector scaled(f.grade());
  for (const auto& [lambda, v] : f.amplitudes()) {
    const double n = norm_N(lambda, p);
    if (!(n > 0)) throw domain_error("norm N(" + to_string(lambda) + ") is not positive");
    scaled.add(lambda, std::sqrt(n) * v);
  }
  const FockVector h = apply_H_direct(scaled, p);
  FockVector out(f.grade());
  for (const auto& [lambda, v] : h.amplitudes()) {
    const double n = norm_N(lambda, p);
    if (!(n > 0)) throw domain_error("norm N(" + to_string(lambda) + ") is not positive");
    out.add(lambda, v / std::sqrt(n));
  }
  return out;
}

FockVector apply_H0(const FockVector& f) {
  FockVector out(f.grade());
  if (f.grade() <= 0) return out;
  for (const Partition& lambda : neighbourhood(f)) {
    amplitude value{};
    for (std::size_t j = 0; j < lambda.length(); ++j) {
      if (auto up = lambda.raised(j)) value += f(*up);
      if (auto down = lambda.lowered(j)) value += f(*down);
    }
    out.add(lambda, value);
  }
  return out;
}

}  // namespace qboson
