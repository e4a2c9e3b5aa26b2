#include "qboson/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "qboson/algebra.hpp"
#include "qboson/errors.hpp"
#include "qboson/scattering.hpp"

namespace qboson::verify {

namespace {

constexpr double pi = std::numbers::pi;

/// Running maximum of a residual against a fixed tolerance.
class Tracker {
public:
  Tracker(std::string name, double tolerance) : check_{std::move(name), 0.0, tolerance, 0, true} {}

  void observe(double residual) {
    ++check_.count;
    if (std::isnan(residual) || residual > check_.max_residual) check_.max_residual = residual;
    if (!(residual <= check_.tolerance)) check_.pass = false;
  }
  /// Records a boolean outcome whose residual is reported separately.
  void observe(double residual, bool ok) {
    ++check_.count;
    if (std::isnan(residual) || residual > check_.max_residual) check_.max_residual = residual;
    if (!ok) check_.pass = false;
  }
  Check done() const { return check_; }

private:
  Check check_;
};

std::vector<Partition> kets_up_to(std::size_t n, int max_part) { return enumerate(n, max_part); }

/// sum f conj(g) / N over the union of supports (N may be negative outside the
/// orthogonality domain; only its non-vanishing is needed here).
cplx weighted_inner(const FockVector& f, const FockVector& g, const ModelParams& p) {
  cplx total = 0;
  for (const auto& [lambda, v] : f.amplitudes()) total += v * std::conj(g(lambda)) / norm_N(lambda, p);
  return total;
}

double norm_sq(const FockVector& f, const ModelParams& p) { return std::real(weighted_inner(f, f, p)); }

/// Grid of parameter points inside the orthogonality domain (3 q-values x 3 root pairs).
std::vector<ModelParams> parameter_grid() {
  std::vector<ModelParams> grid;
  for (double q : {0.2, 0.5, 0.8})
    for (auto [r1, r2] : {std::pair{0.2, 0.4}, std::pair{-0.7, 0.3}, std::pair{0.9, -0.5}})
      grid.push_back(ModelParams::from_roots(q, r1, r2));
  return grid;
}

FockVector window_vector(std::size_t n, int max_part, const std::function<cplx(const Partition&)>& value) {
  FockVector f(static_cast<int>(n));
  for (const auto& lambda : enumerate(n, max_part)) f.set(lambda, value(lambda));
  return f;
}

std::vector<double> signed_permuted(std::span<const double> xi, const std::vector<std::size_t>& sigma,
                                    unsigned mask) {
  std::vector<double> out(xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const double sign = (mask >> j) & 1U ? -1.0 : 1.0;
    out[j] = sign * xi[sigma[j]];
  }
  return out;
}

/// Visits every signed permutation of {0..n-1}.
void for_each_signed_permutation(std::size_t n,
                                 const std::function<void(const std::vector<std::size_t>&, unsigned)>& body) {
  std::vector<std::size_t> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = j;
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) body(sigma, mask);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

double relative_to(double residual, double scale) { return scale > 0 ? residual / scale : residual; }

}  // namespace

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

SpectralPoint random_alcove_point(std::size_t n, Rng& rng, double delta_gen) {
  for (;;) {
    std::vector<double> xi(n);
    for (auto& x : xi) x = rng.uniform(0.0, pi);
    std::sort(xi.begin(), xi.end(), std::greater<>());
    SpectralPoint point(std::move(xi));
    if (point.in_alcove() && point.generic(delta_gen)) return point;
  }
}

// ---------------------------------------------------------------------------

Report algebra(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_algebra_valid();
  const int L = cfg.max_part;
  const int top_site = L + 1;
  const double tol = cfg.tol.algebra;

  Tracker relations("relations", tol);
  Tracker ultralocal("ultralocality", tol);
  Tracker grading("grading", 0.0);
  Tracker adjoint("adjointness", tol);
  Tracker bounded("boundedness", tol);
  Tracker forms("operator_forms", cfg.tol.operator_forms);
  Tracker symmetric("transformed_symmetry", tol);
  Tracker free_limit("free_limit", cfg.tol.h0_limit);

  auto grade_ok = [&](const FockVector& v, int expected) { grading.observe(v.grade() == expected ? 0.0 : 1.0); };

  for (std::size_t n = 0; n <= cfg.n; ++n) {
    const int g = static_cast<int>(n);
    for (const auto& lambda : kets_up_to(n, L)) {
      const FockVector f = FockVector::ket(lambda);
      for (int l = 0; l <= top_site; ++l) {
        const FockVector b = annihilate(l, f);
        const FockVector bs = create(l, f, p);
        grade_ok(b, g - 1);
        grade_ok(bs, g + 1);
        grade_ok(count_op(l, 0, f, p), g);

        // beta q^N = q^(N+1) beta ; beta* q^N = q^(N-1) beta*
        relations.observe(max_abs_difference(annihilate(l, count_op(l, 0, f, p)), count_op(l, 1, b, p)));
        relations.observe(max_abs_difference(create(l, count_op(l, 0, f, p), p), count_op(l, -1, bs, p)));
        // beta beta* = [N+1](1 - c delta q^N0)
        const double m = static_cast<double>(multiplicity(lambda, l));
        const double m0 = static_cast<double>(multiplicity(lambda, 0));
        const double delta = l == 0 ? 1.0 : 0.0;
        const cplx diag1 = q_int(static_cast<int>(m) + 1, p.q) * (1.0 - p.c * delta * std::pow(p.q, m0));
        relations.observe(max_abs_difference(annihilate(l, bs), diag1 * f));
        // beta beta* - q beta* beta = 1 - c delta q^(2 N0)
        const FockVector qcomm = annihilate(l, bs) - p.q * create(l, b, p);
        const cplx diag2 = 1.0 - p.c * delta * std::pow(p.q, 2 * m0);
        relations.observe(max_abs_difference(qcomm, diag2 * f));

        for (int k = 0; k <= top_site; ++k) {
          if (k == l) continue;
          ultralocal.observe(max_abs_difference(annihilate(l, annihilate(k, f)), annihilate(k, annihilate(l, f))));
          ultralocal.observe(max_abs_difference(create(l, create(k, f, p), p), create(k, create(l, f, p), p)));
          ultralocal.observe(max_abs_difference(annihilate(l, create(k, f, p)), create(k, annihilate(l, f), p)));
          ultralocal.observe(
              max_abs_difference(annihilate(l, count_op(k, 0, f, p)), count_op(k, 0, annihilate(l, f), p)));
          ultralocal.observe(
              max_abs_difference(create(l, count_op(k, 0, f, p), p), count_op(k, 0, create(l, f, p), p)));
          ultralocal.observe(
              max_abs_difference(count_op(l, 0, count_op(k, 0, f, p), p), count_op(k, 0, count_op(l, 0, f, p), p)));
        }
      }
      grade_ok(apply_H_composed(f, p), g);
      grade_ok(apply_H_direct(f, p), g);
    }
  }

  // <beta*_l f, g>_(n+1) = <f, beta_l g>_n on basis-ket pairs.
  for (std::size_t n = 0; n < cfg.n; ++n) {
    const auto lower = kets_up_to(n, L);
    const auto upper = kets_up_to(n + 1, L);
    for (int l = 0; l <= L; ++l) {
      for (const auto& lambda : lower) {
        const FockVector f = FockVector::ket(lambda);
        const FockVector bs = create(l, f, p);
        for (const auto& mu : upper) {
          const FockVector g = FockVector::ket(mu);
          const cplx lhs = weighted_inner(bs, g, p);
          const cplx rhs = weighted_inner(f, annihilate(l, g), p);
          adjoint.observe(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
        }
      }
    }
  }

  // Norm bounds on random vectors; meaningful only where the weighted norm is positive.
  if (p.in_orthogonality_domain()) {
    Rng rng(cfg.seed);
    for (std::size_t n = 1; n <= cfg.n; ++n) {
      const auto basis = kets_up_to(n, L);
      for (std::size_t s = 0; s < cfg.samples; ++s) {
        FockVector f(static_cast<int>(n));
        for (const auto& lambda : basis) f.set(lambda, cplx(rng.uniform(-1, 1), rng.uniform(-1, 1)));
        const double ff = norm_sq(f, p);
        for (int l = 0; l <= L; ++l) {
          const double bound = (1.0 + std::abs(p.c) * (l == 0 ? 1.0 : 0.0)) / (1.0 - std::abs(p.q));
          const double excess_b = norm_sq(annihilate(l, f), p) - bound * ff;
          const double excess_bs = norm_sq(create(l, f, p), p) - bound * ff;
          const double excess_q = norm_sq(count_op(l, 0, f, p), p) - ff;
          for (double e : {excess_b, excess_bs, excess_q}) bounded.observe(std::max(0.0, e) / ff);
        }
      }
    }
  }

  // Direct vs composed Hamiltonian over a parameter grid (plus the configured point).
  auto grid = parameter_grid();
  grid.push_back(p);
  for (const auto& point : grid) {
    for (std::size_t n = 1; n <= cfg.n; ++n) {
      for (const auto& lambda : kets_up_to(n, L)) {
        const FockVector f = FockVector::ket(lambda);
        const FockVector direct = apply_H_direct(f, point);
        const FockVector composed = apply_H_composed(f, point);
        forms.observe(max_abs_difference(direct, composed) / std::max(1.0, max_abs(composed)));
      }
    }
  }

  // Transformed H is symmetric; H_q -> H0 as q, a, c -> 0.
  const ModelParams tiny = ModelParams::from_ac(1e-12, 1e-12, 1e-12);
  for (std::size_t n = 1; n <= cfg.n; ++n) {
    const auto basis = kets_up_to(n, L);
    for (const auto& lambda : basis) {
      const FockVector f = FockVector::ket(lambda);
      free_limit.observe(max_abs_difference(apply_H_direct(f, tiny), apply_H0(f)));
      if (!p.in_orthogonality_domain()) continue;
      const FockVector hf = apply_H_transformed(f, p);
      for (const auto& [mu, v] : hf.amplitudes()) {
        const cplx back = apply_H_transformed(FockVector::ket(mu), p)(lambda);
        symmetric.observe(std::abs(v - std::conj(back)));
      }
    }
  }

  Report report{"algebra", {relations.done(), ultralocal.done(), grading.done(), adjoint.done(), forms.done(),
                            free_limit.done()}};
  if (p.in_orthogonality_domain()) {
    report.checks.push_back(bounded.done());
    report.checks.push_back(symmetric.done());
  }
  return report;
}

// ---------------------------------------------------------------------------

Report eigen(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_algebra_valid();
  if (cfg.n == 0) throw domain_error("eigen suite needs n >= 1");
  Rng rng(cfg.seed);
  const int L = cfg.max_part;

  Tracker direct("eigen_direct", cfg.tol.eigen);
  Tracker composed("eigen_composed", cfg.tol.eigen);

  const auto interior = enumerate(cfg.n, L);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const SpectralPoint xi = random_alcove_point(cfg.n, rng, cfg.eval.delta_gen);
    const double energy = eigenvalue(xi.values());
    double sup = 0;
    const FockVector window = window_vector(cfg.n, L + 1, [&](const Partition& lambda) {
      const Evaluated e = phi(xi, lambda, p, cfg.eval);
      sup = std::max(sup, std::abs(e.value));
      return e.value;
    });
    const FockVector hd = apply_H_direct(window, p);
    const FockVector hc = apply_H_composed(window, p);
    for (const auto& lambda : interior) {
      const cplx target = energy * window(lambda);
      direct.observe(relative_to(std::abs(hd(lambda) - target), sup));
      composed.observe(relative_to(std::abs(hc(lambda) - target), sup));
    }
  }
  return Report{"eigen", {direct.done(), composed.done()}};
}

// ---------------------------------------------------------------------------

Report pieri(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_algebra_valid();
  if (cfg.n == 0) throw domain_error("pieri suite needs n >= 1");
  Rng rng(cfg.seed);
  const int L = cfg.max_part;

  Tracker expanded("pieri_expanded", cfg.tol.pieri);
  Tracker compact("pieri_compact", cfg.tol.pieri);
  Tracker bridging("bridging_identity", cfg.tol.pieri_coefficients);
  Tracker coefficients("pieri_coefficients", cfg.tol.pieri_coefficients);
  Tracker principal("principal_specialization", cfg.tol.principal);

  const auto lambdas = enumerate(cfg.n, L);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const SpectralPoint xi = random_alcove_point(cfg.n, rng, cfg.eval.delta_gen);
    for (const auto& lambda : lambdas) {
      const PieriResidual e = pieri_residual(xi, lambda, p, PieriForm::expanded, cfg.eval);
      const PieriResidual c = pieri_residual(xi, lambda, p, PieriForm::compact, cfg.eval);
      expanded.observe(e.relative);
      compact.observe(c.relative);
      bridging.observe(relative_to(e.bridging_residual, e.bridging_scale), e.bridging_holds);
    }
  }

  for (const auto& lambda : lambdas) {
    for (std::size_t j = 0; j < cfg.n; ++j) {
      if (lambda.raised(j)) {
        const cplx closed = pieri_V_plus_closed(lambda, j, p);
        coefficients.observe(relative_to(std::abs(pieri_V_plus(lambda, j, p) - closed), std::abs(closed)));
      }
      if (lambda.lowered(j)) {
        const cplx closed = pieri_V_minus_closed(lambda, j, p);
        coefficients.observe(relative_to(std::abs(pieri_V_minus(lambda, j, p) - closed), std::abs(closed)));
      }
    }
  }

  const auto z = principal_point(p, cfg.n);
  for (const auto& lambda : lambdas) principal.observe(std::abs(p_normalized(z, lambda, p, cfg.eval) - 1.0));

  return Report{"pieri",
                {expanded.done(), compact.done(), bridging.done(), coefficients.done(), principal.done()}};
}

// ---------------------------------------------------------------------------

namespace {

double gram_tolerance(const Config& cfg) { return cfg.n == 1 ? cfg.tol.gram_one : cfg.tol.gram_many; }

double max_deviation_from_norms(const ComplexMatrix& g, std::span<const Partition> lambdas, const ModelParams& p) {
  double worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      const double expected = i == j ? norm_N(lambdas[i], p) : 0.0;
      worst = std::max(worst, std::abs(g(i, j) - expected));
    }
  return worst;
}

}  // namespace

Report gram(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_orthogonality_domain();
  if (cfg.n == 0) throw domain_error("gram suite needs n >= 1");
  const double tol = gram_tolerance(cfg);
  const auto lambdas = enumerate(cfg.n, cfg.max_part);
  const JitterOptions jitter{cfg.seed, cfg.eval.delta_gen};

  const auto other_mode =
      cfg.quad_mode == QuadratureMode::alcove ? QuadratureMode::full_cube : QuadratureMode::alcove;
  const QuadratureRule rule = build_rule(cfg.n, cfg.quad_points, cfg.quad_mode, jitter);
  const QuadratureRule other = build_rule(cfg.n, cfg.quad_points, other_mode, jitter);
  const ComplexMatrix g = gram_matrix(lambdas, rule, p, cfg.eval);
  const ComplexMatrix h = gram_matrix(lambdas, other, p, cfg.eval);

  Tracker orth("orthogonality", tol);
  orth.observe(max_deviation_from_norms(g, lambdas, p));
  Tracker off("normalized_off_diagonal", tol);
  off.observe(max_normalized_off_diagonal(g));
  Tracker modes("mode_equivalence", tol);
  double diff = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) diff = std::max(diff, std::abs(g(i, j) - h(i, j)));
  modes.observe(diff);
  return Report{"gram", {orth.done(), off.done(), modes.done()}};
}

ComplexMatrix gram_for(const Config& cfg, QuadratureMode mode) {
  const auto lambdas = enumerate(cfg.n, cfg.max_part);
  const QuadratureRule rule = build_rule(cfg.n, cfg.quad_points, mode, {cfg.seed, cfg.eval.delta_gen});
  return gram_matrix(lambdas, rule, cfg.params, cfg.eval);
}

// ---------------------------------------------------------------------------

Report roundtrip(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_orthogonality_domain();
  if (cfg.n == 0) throw domain_error("roundtrip suite needs n >= 1");
  const double tol = cfg.n == 1 ? cfg.tol.roundtrip_one : cfg.tol.roundtrip_many;
  const auto lambdas = enumerate(cfg.n, cfg.max_part);
  const QuadratureRule rule = build_rule(cfg.n, cfg.quad_points, cfg.quad_mode, {cfg.seed, cfg.eval.delta_gen});

  Tracker trip("fourier_roundtrip", tol);
  for (const auto& lambda : lambdas) {
    const FockVector f = FockVector::ket(lambda);
    const SpectralFunction fhat = [&](std::span<const double> xi) {
      return fourier_forward(f, SpectralPoint(std::vector<double>(xi.begin(), xi.end())), p, cfg.eval);
    };
    const auto back = fourier_inverse(fhat, lambdas, rule, p, cfg.eval);
    double worst = 0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) worst = std::max(worst, std::abs(back[i] - f(lambdas[i])));
    trip.observe(worst);
  }
  return Report{"roundtrip", {trip.done()}};
}

// ---------------------------------------------------------------------------

Report psi_agreement(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_orthogonality_domain();
  if (cfg.n == 0) throw domain_error("psi-agreement suite needs n >= 1");
  Rng rng(cfg.seed);
  const int L = cfg.max_part;

  Tracker agree("psi_methods", cfg.tol.psi_agreement);
  Tracker eig("psi_eigenfunction", cfg.tol.eigen);
  Tracker order("ordering_map", 0.0);

  const auto interior = enumerate(cfg.n, L);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const SpectralPoint xi = random_alcove_point(cfg.n, rng, cfg.eval.delta_gen);
    double sup = 0;
    std::vector<std::pair<cplx, cplx>> pairs;
    const FockVector window = window_vector(cfg.n, L + 1, [&](const Partition& lambda) {
      const cplx a = psi(xi, lambda, p, PsiMethod::renormalized, cfg.eval);
      const cplx b = psi(xi, lambda, p, PsiMethod::sign_sum, cfg.eval);
      sup = std::max(sup, std::abs(a));
      pairs.emplace_back(a, b);
      return b;
    });
    for (const auto& [a, b] : pairs) agree.observe(relative_to(std::abs(a - b), sup));

    const double energy = eigenvalue(xi.values());
    const FockVector h = apply_H_transformed(window, p);
    for (const auto& lambda : interior) eig.observe(relative_to(std::abs(h(lambda) - energy * window(lambda)), sup));

    // ordering map on a point scattered over (-pi, pi)^n
    std::vector<double> y(cfg.n);
    for (auto& v : y) v = rng.uniform(-pi, pi);
    const OrderingData od = ordering_map(y);
    const auto image = od.apply(y);
    bool ok = true;
    for (std::size_t j = 0; j < image.size(); ++j) {
      const double grad = -2.0 * std::sin(image[j]);
      if (!(grad > 0)) ok = false;
      if (j > 0 && !(grad < -2.0 * std::sin(image[j - 1]))) ok = false;
    }
    order.observe(ok ? 0.0 : 1.0);
  }
  return Report{"psi-agreement", {agree.done(), eig.done(), order.done()}};
}

// ---------------------------------------------------------------------------

Report unimodularity(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_orthogonality_domain();
  const double tol = cfg.tol.unimodular;
  Tracker modulus("unimodular", tol);
  Tracker branch("square_root_branch", tol);
  Tracker symmetry("reflection_symmetry", tol);
  Tracker s_mod("apply_S_modulus", tol);

  auto grid = parameter_grid();
  grid.push_back(p);
  constexpr int points = 401;
  for (const auto& point : grid) {
    for (int i = 0; i < points; ++i) {
      const double x = -pi + 2 * pi * (i + 0.5) / points;
      for (auto [f, root] : {std::pair{&s_bulk, &s_bulk_sqrt}, std::pair{&s_boundary, &s_boundary_sqrt}}) {
        const cplx v = f(x, point, cfg.eval.delta_sing);
        const cplx h = root(x, point, cfg.eval.delta_sing);
        modulus.observe(std::abs(std::abs(v) - 1.0));
        branch.observe(std::abs(h * h - v));
        const cplx reflected = f(-x, point, cfg.eval.delta_sing);
        symmetry.observe(std::abs(reflected - std::conj(v)));
        symmetry.observe(std::abs(reflected - 1.0 / v));
      }
    }
  }

  Rng rng(cfg.seed);
  const std::size_t n = std::max<std::size_t>(cfg.n, 1);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const SpectralPoint xi = random_alcove_point(n, rng, cfg.eval.delta_gen);
    const cplx full = S_hat(xi.values(), p, cfg.eval.delta_sing);
    const cplx half = S_hat_sqrt(xi.values(), p, cfg.eval.delta_sing);
    modulus.observe(std::abs(std::abs(full) - 1.0));
    branch.observe(std::abs(half * half - full));
    const SpectralFunction one = [](std::span<const double>) { return cplx(1.0, 0.0); };
    for (auto power : {SPower::full, SPower::inverse, SPower::half, SPower::inverse_half})
      s_mod.observe(std::abs(std::abs(apply_S(one, xi.values(), p, power)) - 1.0));
    const SpectralFunction g = [&](std::span<const double> y) { return apply_S(one, y, p, SPower::inverse); };
    s_mod.observe(std::abs(apply_S(g, xi.values(), p, SPower::full) - 1.0));
  }
  return Report{"unimodularity", {modulus.done(), branch.done(), symmetry.done(), s_mod.done()}};
}

// ---------------------------------------------------------------------------

Report weight_invariance(const Config& cfg) {
  const ModelParams& p = cfg.params;
  p.require_algebra_valid();
  if (cfg.n == 0) throw domain_error("weight-invariance suite needs n >= 1");
  Rng rng(cfg.seed);
  const double tol = cfg.tol.weight;
  Tracker delta("delta_invariance", tol);
  Tracker phis("phi_invariance", cfg.tol.psi_agreement);
  Tracker period("phi_periodicity", cfg.tol.psi_agreement);

  const auto lambdas = enumerate(cfg.n, cfg.max_part);
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const SpectralPoint xi = random_alcove_point(cfg.n, rng, cfg.eval.delta_gen);
    const double base = weight_Delta(xi, p, cfg.eval);
    // One expansion per spectral point; phi is then read off for every lambda.
    auto values_at = [&](const SpectralPoint& point) {
      require_generic(point, cfg.eval.delta_gen);
      const PlaneWaveExpansion expansion(point.values(), p, cfg.eval.delta_sing);
      std::vector<cplx> out;
      for (const auto& lambda : lambdas) out.push_back(expansion.evaluate(lambda).value);
      return out;
    };
    const std::vector<cplx> reference = values_at(xi);
    double sup = 0;
    for (cplx v : reference) sup = std::max(sup, std::abs(v));
    for_each_signed_permutation(cfg.n, [&](const std::vector<std::size_t>& sigma, unsigned mask) {
      const SpectralPoint image(signed_permuted(xi.values(), sigma, mask));
      delta.observe(std::abs(weight_Delta(image, p, cfg.eval) - base) / base);
      const auto values = values_at(image);
      for (std::size_t i = 0; i < lambdas.size(); ++i) phis.observe(relative_to(std::abs(values[i] - reference[i]), sup));
    });
    for (std::size_t j = 0; j < cfg.n; ++j) {
      std::vector<double> shifted(xi.values().begin(), xi.values().end());
      shifted[j] += 2 * pi;
      const auto values = values_at(SpectralPoint(std::move(shifted)));
      for (std::size_t i = 0; i < lambdas.size(); ++i) period.observe(relative_to(std::abs(values[i] - reference[i]), sup));
    }
  }
  return Report{"weight-invariance", {delta.done(), phis.done(), period.done()}};
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "eigen",         "pieri",        "gram",
                                              "roundtrip", "psi-agreement", "unimodularity", "weight-invariance"};
  return names;
}

Report run(const std::string& suite, const Config& cfg) {
  if (suite == "algebra") return algebra(cfg);
  if (suite == "eigen") return eigen(cfg);
  if (suite == "pieri") return pieri(cfg);
  if (suite == "gram") return gram(cfg);
  if (suite == "roundtrip") return roundtrip(cfg);
  if (suite == "psi-agreement") return psi_agreement(cfg);
  if (suite == "unimodularity") return unimodularity(cfg);
  if (suite == "weight-invariance") return weight_invariance(cfg);
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace qboson::verify
