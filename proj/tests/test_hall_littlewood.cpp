#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qboson/algebra.hpp"
#include "qboson/errors.hpp"
#include "qboson/hall_littlewood.hpp"

using namespace qboson;

namespace {

const ModelParams P = ModelParams::from_ac(0.5, 0.6, 0.08);
constexpr double pi = std::numbers::pi;

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("pochhammer_examples") {
  CHECK(pochhammer_q(0.08, 0.5, 0) == 1.0);
  CHECK(pochhammer_q(0.08, 0.5, 2) == doctest::Approx(0.8832).epsilon(1e-15));
  CHECK(pochhammer_q(0.0, 0.3, 7) == 1.0);
}

TEST_CASE("norm_examples") {
  CHECK(norm_N({0, 0}, P) == doctest::Approx(1.3248).epsilon(1e-15));
  CHECK(norm_N({0}, ModelParams::from_ac(0.5, 0.6, 0.3)) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(norm_N({5, 3, 1}, P) == 1.0);
  // 40-digit reference values
  CHECK(norm_N({0, 0, 0}, P) == doctest::Approx(2.272032).epsilon(1e-15));
  CHECK(norm_N({2, 2, 0}, P) == doctest::Approx(1.38).epsilon(1e-15));
  for (std::size_t n = 0; n <= 4; ++n)
    for (const auto& lambda : enumerate(n, 3))
      CHECK(norm_N(lambda, P) == doctest::Approx(oracle::norm_N(lambda.as_vector(), P)).epsilon(1e-14));
}

TEST_CASE("eigenvalue_examples") {
  CHECK(std::abs(eigenvalue(std::vector<double>{pi / 2})) < 1e-15);
  CHECK(eigenvalue(std::vector<double>{pi / 2, pi / 3}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eigenvalue(std::vector<double>{}) == 0.0);
}

TEST_CASE("coefficient_examples") {
  const ModelParams free_boundary = ModelParams::from_ac(0.5, 0.0, 0.0);
  CHECK(std::abs(coeff_C(std::vector<double>{pi / 2}, free_boundary) - 0.5) < 1e-15);
  const double x = 1.1;
  const cplx expected = 1.0 / (1.0 - std::exp(cplx(0, -2 * x)));
  CHECK(rel(coeff_C(std::vector<double>{x}, free_boundary), expected) < 1e-15);
  CHECK_THROWS_AS(coeff_C(std::vector<double>{1.0, 1.0}, P), singularity_error);
  // 40-digit reference values
  CHECK(rel(coeff_C(std::vector<double>{2.0, 0.5}, P), {0.25336553737391023, -0.057674202582484591}) < 1e-14);
  CHECK(rel(coeff_C(std::vector<double>{1.1}, P), {0.46, 0.061779218729065235}) < 1e-14);
}

TEST_CASE("singularity_message_names_the_factor") {
  try {
    coeff_C(std::vector<double>{1.0, 1.0}, P);
    FAIL("expected a singularity");
  } catch (const singularity_error& e) {
    CHECK(std::string(e.what()).find("1 - exp(-i(xi_j - xi_k)) with j=1, k=2") != std::string::npos);
  }
}

TEST_CASE("phi_reference_values") {
  const SpectralPoint x2({2.0, 0.5});
  const SpectralPoint x3({2.5, 1.3, 0.4});
  CHECK(rel(phi(x2, {1, 0}, P).value, 0.021041734631543806) < 1e-12);
  CHECK(rel(phi(x2, {3, 1}, P).value, 0.52344726069843338) < 1e-13);
  CHECK(rel(phi(x2, {2, 2}, P).value, -0.098891725264562819) < 1e-13);
  CHECK(rel(phi(x3, {2, 1, 0}, P).value, 0.34016938627336239) < 1e-13);
  CHECK(rel(phi(x3, {4, 4, 1}, P).value, -0.44326994566002277) < 1e-13);
  CHECK(rel(phi(SpectralPoint({1.1}), {3}, P).value, -0.88899057683206776) < 1e-13);
}

TEST_CASE("phi_matches_brute_force_sum") {
  const std::vector<std::vector<double>> points{{1.1}, {2.0, 0.5}, {2.7, 1.9, 0.3}, {2.9, 2.1, 1.2, 0.35}};
  for (const auto& x : points) {
    const SpectralPoint xi(x);
    double sup = 0;
    std::vector<std::pair<cplx, cplx>> values;
    for (const auto& lambda : enumerate(x.size(), 4)) {
      const cplx ref = oracle::phi(x, lambda.as_vector(), P);
      values.emplace_back(phi(xi, lambda, P).value, ref);
      sup = std::max(sup, std::abs(ref));
    }
    for (const auto& [got, want] : values) CHECK(std::abs(got - want) / sup < 1e-12);
  }
}

TEST_CASE("phi_one_particle_closed_form") {
  const ModelParams free_boundary = ModelParams::from_ac(0.5, 0.0, 0.0);
  for (double x : {0.3, 1.0, 2.2, 3.0}) {
    CHECK(std::abs(phi(SpectralPoint({x}), {0}, free_boundary).value - 1.0) < 1e-14);
    const std::vector<double> plus{x}, minus{-x};
    for (int l : {1, 4, 9}) {
      const cplx expected = coeff_C(plus, P) * std::exp(cplx(0, l * x)) + coeff_C(minus, P) * std::exp(cplx(0, -l * x));
      CHECK(std::abs(phi(SpectralPoint({x}), {l}, P).value - expected) < 1e-14);
    }
  }
}

TEST_CASE("phi_at_zero_partition_is_the_norm") {
  // property: phi_xi(0^n) = N(0^n) for every generic xi
  const std::vector<std::vector<double>> points{{1.1}, {2.0, 0.5}, {2.5, 1.3, 0.4}, {3.0, 0.2, 1.7}};
  for (const auto& x : points) {
    const Partition zero(std::vector<int>(x.size(), 0));
    CHECK(std::abs(phi(SpectralPoint(x), zero, P).value - norm_N(zero, P)) < 1e-13);
  }
}

TEST_CASE("phi_rejects_non_generic_points") {
  CHECK_THROWS_AS(phi(SpectralPoint({1.0, 1.0}), {0, 0}, P), genericity_error);
  CHECK_THROWS_AS(phi(SpectralPoint({pi}), {0}, P), genericity_error);
  CHECK_THROWS_AS(phi(SpectralPoint({2.0, pi - 2.0}), {0, 0}, P), genericity_error);
  CHECK_THROWS_AS(phi(SpectralPoint({2.0, 0.5}), {0}, P), std::invalid_argument);
}

TEST_CASE("extended_precision_agrees_and_reports") {
  EvalOptions ext;
  ext.precision = Precision::extended;
  const SpectralPoint x3({2.5, 1.3, 0.4});
  const Evaluated e = phi(x3, {2, 1, 0}, P, ext);
  CHECK(e.diagnostics.extended_precision);
  CHECK(rel(e.value, 0.34016938627336239) < 1e-15);
  const Evaluated s = phi(x3, {2, 1, 0}, P);
  CHECK_FALSE(s.diagnostics.extended_precision);
  CHECK(s.diagnostics.term_count == 48u);
  CHECK(s.diagnostics.condition > 0.0);
}

TEST_CASE("ill_conditioned_points_are_flagged") {
  // near-coalescing spectral parameters blow up individual terms
  const SpectralPoint close({1.0 + 2e-6, 1.0});
  EvalOptions opts;
  opts.delta_gen = 1e-7;
  const Evaluated e = phi(close, {3, 0}, P, opts);
  CHECK(e.diagnostics.max_term_magnitude > 1e4);
  CHECK(e.diagnostics.condition > 1e4);
}

TEST_CASE("weight_examples") {
  const ModelParams free_boundary = ModelParams::from_ac(0.5, 0.0, 0.0);
  CHECK(weight_Delta(SpectralPoint({pi / 2}), free_boundary) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(weight_Delta(SpectralPoint({2.0, 0.5}), P) == doctest::Approx(14.810336789403061).epsilon(1e-14));
  const SpectralPoint x({0.8});
  CHECK(weight_Delta(x, P) == doctest::Approx(weight_Delta(x, ModelParams::from_ac(-0.3, 0.6, 0.08))).epsilon(1e-15));
  CHECK(weight_Delta(SpectralPoint({2.7, 1.9, 0.3}), P) > 0);
}

TEST_CASE("tau_examples") {
  const auto tau = tau_vector(P, 2);
  CHECK(std::abs(tau[0] - 0.2) < 1e-15);
  CHECK(std::abs(tau[1] - 0.4) < 1e-15);
  for (cplx t : tau_vector(ModelParams::from_ac(0.5, 0.0, 0.0), 3)) CHECK(t == cplx{});
  const auto double_root = tau_vector(ModelParams::from_ac(0.5, 2 * 0.3, 0.3 * 0.3), 1);
  CHECK(std::abs(double_root[0] - 0.3) < 1e-15);
  CHECK_THROWS_AS(principal_point(ModelParams::from_ac(0.5, 0.0, 0.0), 2), domain_error);
}

TEST_CASE("principal_specialization_is_unital") {
  for (const auto& p : {P, ModelParams::from_roots(0.3, -0.7, 0.5), ModelParams::from_ac(0.5, 0.2, 0.5)})
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto z = principal_point(p, n);
      for (const auto& lambda : enumerate(n, 5)) CHECK(std::abs(p_normalized(z, lambda, p) - 1.0) < 1e-9);
    }
}

TEST_CASE("p_normalized_examples") {
  const SpectralPoint x({2.0, 0.5});
  CHECK(std::abs(p_normalized(x, {0, 0}, P) - phi(x, {0, 0}, P).value / norm_N({0, 0}, P)) < 1e-15);
  const ModelParams free_boundary = ModelParams::from_ac(0.5, 0.0, 0.0);
  CHECK(p_normalized(SpectralPoint({1.1}), {1}, free_boundary) == cplx{});
}

TEST_CASE("pieri_coefficient_examples") {
  const double r = 0.4;
  CHECK(std::abs(pieri_V_plus({1}, 0, P) - 1.0 / r) < 1e-14);
  CHECK(std::abs(pieri_V_plus({0}, 0, P) - (1 - P.c) / r) < 1e-14);
  CHECK(std::abs(pieri_V_minus({1}, 0, P) - r) < 1e-15);
  const auto tau = tau_vector(P, 2);
  CHECK(std::abs(pieri_V_minus({1, 1}, 1, P) - tau[1] * (1 + P.q)) < 1e-15);
  CHECK(std::abs(pieri_V_plus({3, 1}, 0, P) - 1.0 / tau[0]) < 1e-14);
  CHECK(std::abs(pieri_V_minus({3, 1}, 1, P) - tau[1]) < 1e-15);
  CHECK_THROWS_AS(pieri_V_plus({1, 1}, 1, P), index_error);
  CHECK_THROWS_AS(pieri_V_minus({1, 0}, 1, P), index_error);
  CHECK_THROWS_AS(pieri_V_plus({1, 0}, 2, P), index_error);
}

TEST_CASE("pieri_coefficients_product_equals_closed_form") {
  for (const auto& p : {P, ModelParams::from_roots(0.8, 0.9, -0.5), ModelParams::from_ac(0.5, 0.2, 0.5)})
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& lambda : enumerate(n, 6))
        for (std::size_t j = 0; j < n; ++j) {
          if (lambda.raised(j)) {
            const cplx closed = pieri_V_plus_closed(lambda, j, p);
            CHECK(std::abs(pieri_V_plus(lambda, j, p) - closed) <= 1e-12 * std::abs(closed));
          }
          if (lambda.lowered(j)) {
            const cplx closed = pieri_V_minus_closed(lambda, j, p);
            CHECK(std::abs(pieri_V_minus(lambda, j, p) - closed) <= 1e-12 * std::abs(closed));
          }
        }
}

TEST_CASE("pieri_one_particle_reduction") {
  // n = 1, lambda = (0): both forms reduce to the one-particle eigenvalue relation
  for (double x : {0.4, 1.7, 2.9}) {
    const SpectralPoint xi({x});
    for (auto form : {PieriForm::expanded, PieriForm::compact}) {
      const PieriResidual r = pieri_residual(xi, {0}, P, form);
      CHECK(r.relative < 1e-14);
      CHECK(r.bridging_holds);
    }
  }
}

TEST_CASE("pieri_identities_hold_on_random_points") {
  const std::vector<std::vector<double>> points{{2.1, 0.7}, {2.8, 1.6, 0.25}, {1.4, 0.9, 0.5}};
  for (const auto& x : points)
    for (const auto& lambda : enumerate(x.size(), 5))
      for (auto form : {PieriForm::expanded, PieriForm::compact}) {
        const PieriResidual r = pieri_residual(SpectralPoint(x), lambda, P, form);
        CHECK(r.relative < 1e-9);
        CHECK(r.bridging_holds);
      }
}

TEST_CASE("pieri_residual_requires_nonzero_root") {
  CHECK_THROWS_AS(pieri_residual(SpectralPoint({1.0}), {0}, ModelParams::from_ac(0.5, 0.0, 0.0), PieriForm::compact),
                  domain_error);
}

TEST_CASE("alcove_and_genericity_predicates") {
  CHECK(SpectralPoint({2.0, 0.5}).in_alcove());
  CHECK_FALSE(SpectralPoint({0.5, 2.0}).in_alcove());
  CHECK_FALSE(SpectralPoint({3.5}).in_alcove());
  CHECK(SpectralPoint({2.0, 0.5}).genericity_margin() == doctest::Approx(0.5));
  CHECK_FALSE(SpectralPoint({2.0, pi - 2.0 + 1e-8}).generic(1e-6));
}
