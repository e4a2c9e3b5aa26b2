#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "qboson/algebra.hpp"
#include "qboson/errors.hpp"
#include "qboson/hall_littlewood.hpp"

using namespace qboson;

namespace {

const ModelParams P = ModelParams::from_ac(0.5, 0.6, 0.08);
constexpr double tight = 1e-15;

}  // namespace

TEST_CASE("params_from_roots_and_domain") {
  const auto p = ModelParams::from_roots(0.5, 0.2, 0.4);
  CHECK(p.a == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(p.c == doctest::Approx(0.08).epsilon(1e-15));
  CHECK(p.r().real() == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(p.in_orthogonality_domain());
  CHECK_FALSE(ModelParams::from_roots(0.5, 1.5, 0.1).in_orthogonality_domain());
  CHECK_FALSE(ModelParams::from_ac(0.5, 0.2, 0.5).real_roots().has_value());
  CHECK_THROWS_AS(ModelParams::from_ac(1.0, 0.6, 0.08), domain_error);
  CHECK_THROWS_AS(ModelParams::from_ac(0.0, 0.6, 0.08), domain_error);
  CHECK_THROWS_AS(ModelParams::from_ac(-1.0, 0.6, 0.08), domain_error);
}

TEST_CASE("q_integers") {
  CHECK(q_int(0, 0.5) == 0.0);
  CHECK(q_int(1, 0.5) == 1.0);
  CHECK(q_int(3, 0.5) == 1.75);
  for (int m = 0; m <= 12; ++m)
    CHECK(q_int(m, 0.3) == doctest::Approx(oracle::q_int_closed(m, 0.3)).epsilon(tight));
  CHECK(q_factorial(3, 0.5) == doctest::Approx(1.75 * 1.5).epsilon(tight));
  CHECK(q_factorial(0, 0.5) == 1.0);
}

TEST_CASE("annihilate_examples") {
  CHECK(max_abs_difference(annihilate(1, FockVector::ket({1, 0})), FockVector::ket({0})) == 0.0);
  const FockVector none = annihilate(1, FockVector::ket({2, 0}));
  CHECK(none.is_zero());
  CHECK(none.grade() == 1);
  const FockVector vacuum = annihilate(0, FockVector::ket(Partition{}));
  CHECK(vacuum.is_zero());
  CHECK(vacuum.grade() == -1);
}

TEST_CASE("create_examples") {
  const FockVector two = create(0, FockVector::ket({0}), P);
  CHECK(two.support_size() == 1u);
  CHECK(std::abs(two({0, 0}) - 1.44) < tight);
  const FockVector far = create(3, FockVector::ket({0}), P);
  CHECK(std::abs(far({3, 0}) - 1.0) < tight);
  const ModelParams free_boundary = ModelParams::from_ac(0.5, 0.6, 0.0);
  CHECK(std::abs(create(0, FockVector::ket(Partition{}), free_boundary)({0}) - 1.0) < tight);
  CHECK(create(0, FockVector(-1), P).grade() == 0);
}

TEST_CASE("create_ket_action_matches_functional_definition") {
  // beta*_l |lambda> = [m_l(lambda)+1] (1 - c delta_l q^(m_0(lambda))) |lambda + l>
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& lambda : enumerate(n, 4))
      for (int l = 0; l <= 5; ++l) {
        const FockVector out = create(l, FockVector::ket(lambda), P);
        const double m = static_cast<double>(multiplicity(lambda, l));
        const double m0 = static_cast<double>(multiplicity(lambda, 0));
        const double expected =
            oracle::q_int_closed(static_cast<int>(m) + 1, P.q) * (1 - P.c * (l == 0) * std::pow(P.q, m0));
        CHECK(out.support_size() == 1u);
        CHECK(std::abs(out(insert_part(lambda, l)) - expected) < 1e-14);
      }
}

TEST_CASE("count_op_examples") {
  CHECK(std::abs(count_op(0, 0, FockVector::ket({0, 0}), P)({0, 0}) - 0.25) < tight);
  CHECK(std::abs(count_op(5, 0, FockVector::ket({0, 0}), P)({0, 0}) - 1.0) < tight);
  CHECK(std::abs(count_op(0, 1, FockVector::ket({1}), P)({1}) - 0.5) < tight);
}

TEST_CASE("composed_hamiltonian_examples") {
  const FockVector h0 = apply_H_composed(FockVector::ket({0}), P);
  CHECK(std::abs(h0({0}) - 0.6) < tight);
  CHECK(std::abs(h0({1}) - 1.0) < tight);
  CHECK(h0.support_size() == 2u);
  const FockVector h1 = apply_H_composed(FockVector::ket({1}), P);
  CHECK(std::abs(h1({0}) - 0.92) < tight);
  CHECK(std::abs(h1({2}) - 1.0) < tight);
  CHECK(apply_H_composed(FockVector(2), P).is_zero());
}

TEST_CASE("direct_hamiltonian_examples") {
  const FockVector h0 = apply_H_direct(FockVector::ket({0}), P);
  CHECK(std::abs(h0({0}) - 0.6) < tight);
  CHECK(std::abs(h0({1}) - 1.0) < tight);
  const FockVector pair = apply_H_direct(FockVector::ket({0, 0}), P);
  CHECK(std::abs(pair({0, 0}) - 0.6 * 1.5) < tight);
  CHECK(max_abs_difference(pair, apply_H_composed(FockVector::ket({0, 0}), P)) < 1e-15);
  CHECK(apply_H_direct(FockVector::ket(Partition{}), P).is_zero());
}

TEST_CASE("transformed_hamiltonian_one_particle_entries") {
  const FockVector h = apply_H_transformed(FockVector::ket({0}), P);
  CHECK(std::abs(h({1}) - std::sqrt(1 - P.c)) < 1e-15);
  CHECK(std::abs(h({0}) - P.a) < 1e-15);
  CHECK(std::abs(apply_H_transformed(FockVector::ket({1}), P)({0}) - std::sqrt(1 - P.c)) < 1e-15);
  CHECK(apply_H_transformed(FockVector(1), P).is_zero());
  CHECK_THROWS_AS(apply_H_transformed(FockVector::ket({0}), ModelParams::from_ac(0.5, 0.6, 1.5)), domain_error);
}

TEST_CASE("transformed_hamiltonian_equals_direct_when_norms_are_one") {
  // a = c = 0 and kets with distinct nonzero parts: every N on the reachable support is 1.
  const ModelParams p = ModelParams::from_ac(0.5, 0.0, 0.0);
  for (const auto& lambda : std::vector<Partition>{{5, 3, 1}, {7, 4, 2}}) {
    const FockVector f = FockVector::ket(lambda);
    CHECK(max_abs_difference(apply_H_transformed(f, p), apply_H_direct(f, p)) < 1e-15);
  }
}

TEST_CASE("free_hamiltonian_examples") {
  const FockVector h = apply_H0(FockVector::ket({0}));
  CHECK(std::abs(h({1}) - 1.0) == 0.0);
  CHECK(std::abs(h({0})) == 0.0);
  CHECK(apply_H0(FockVector(3)).is_zero());
  const ModelParams tiny = ModelParams::from_ac(1e-12, 1e-12, 1e-12);
  for (const auto& lambda : enumerate(3, 4)) {
    const FockVector f = FockVector::ket(lambda);
    CHECK(max_abs_difference(apply_H_direct(f, tiny), apply_H0(f)) < 1e-10);
  }
}

TEST_CASE("hamiltonian_forms_agree_on_random_vectors") {
  // property: linear combinations, not just kets
  for (std::size_t n = 1; n <= 3; ++n) {
    FockVector f(static_cast<int>(n));
    double s = 0.1;
    for (const auto& lambda : enumerate(n, 5)) {
      f.set(lambda, {std::sin(s), std::cos(3 * s)});
      s += 0.37;
    }
    CHECK(max_abs_difference(apply_H_direct(f, P), apply_H_composed(f, P)) < 1e-13);
  }
}

TEST_CASE("fock_vector_grade_is_enforced") {
  FockVector f(2);
  CHECK_THROWS_AS(f.set({1}, 1.0), grade_mismatch_error);
  CHECK_THROWS_AS(FockVector(2) + FockVector(1), grade_mismatch_error);
  f.add({1, 0}, 2.0);
  f.add({1, 0}, -2.0);
  CHECK(f.is_zero());
}
