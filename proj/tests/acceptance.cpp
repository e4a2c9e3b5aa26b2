// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every tolerance and runtime budget is pinned here and not configurable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qboson/algebra.hpp"
#include "qboson/hall_littlewood.hpp"
#include "qboson/scattering.hpp"
#include "qboson/spectral.hpp"
#include "qboson/verify.hpp"

using namespace qboson;

namespace {

const ModelParams P = ModelParams::from_roots(0.5, 0.2, 0.4);
constexpr std::uint64_t seed = 7;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

/// Worst residual over a report's checks (each against its own pinned tolerance).
Outcome from_report(const verify::Report& r, const std::vector<std::string>& names = {}) {
  Outcome o;
  for (const auto& c : r.checks) {
    if (!names.empty() && std::find(names.begin(), names.end(), c.name) == names.end()) continue;
    o.pass = o.pass && c.pass;
    o.detail += c.name + fmt("=%.2e(<=%.0e) ", c.max_residual, c.tolerance);
  }
  return o;
}

void merge(Outcome& into, const Outcome& part, const std::string& prefix = "") {
  into.pass = into.pass && part.pass;
  into.detail += prefix + part.detail;
}

std::vector<ModelParams> domain_grid() {
  std::vector<ModelParams> grid;
  for (double q : {0.2, 0.5, 0.8})
    for (auto [r1, r2] : {std::pair{0.2, 0.4}, std::pair{-0.7, 0.3}, std::pair{0.9, -0.5}})
      grid.push_back(ModelParams::from_roots(q, r1, r2));
  return grid;
}

// 1. Eigenvalue equation, n = 1..3, 50 points, parts <= 10, relative residual <= 1e-9.
Outcome eigenvalue_equation() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    verify::Config cfg;
    cfg.params = P;
    cfg.n = n;
    cfg.max_part = 10;
    cfg.samples = 50;
    cfg.seed = seed;
    cfg.tol.eigen = 1e-9;
    merge(o, from_report(verify::eigen(cfg)), "n=" + std::to_string(n) + " ");
  }
  return o;
}

// 2. Direct vs composed H on every ket, n <= 3, parts <= 8, 9-point grid, <= 1e-13.
Outcome hamiltonian_forms() {
  double worst = 0;
  std::size_t count = 0;
  for (const auto& p : domain_grid())
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& lambda : enumerate(n, 8)) {
        const FockVector f = FockVector::ket(lambda);
        const FockVector composed = apply_H_composed(f, p);
        worst = std::max(worst, max_abs_difference(apply_H_direct(f, p), composed) / std::max(1.0, max_abs(composed)));
        ++count;
      }
  return {worst <= 1e-13, fmt("max deviation %.2e over %.0f ket/parameter pairs", worst, static_cast<double>(count))};
}

// 3. Algebra relations, ultralocality and adjointness, n <= 3, parts <= 6, <= 1e-13.
Outcome algebra_relations() {
  verify::Config cfg;
  cfg.params = P;
  cfg.n = 3;
  cfg.max_part = 6;
  cfg.tol.algebra = 1e-13;
  return from_report(verify::algebra(cfg), {"relations", "ultralocality", "adjointness", "grading"});
}

// 4. Pieri A.2 / A.3 <= 1e-9 relative, n <= 3, parts <= 6, 20 points; V forms <= 1e-12.
Outcome pieri_formulas() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    verify::Config cfg;
    cfg.params = P;
    cfg.n = n;
    cfg.max_part = 6;
    cfg.samples = 20;
    cfg.seed = seed;
    cfg.tol.pieri = 1e-9;
    cfg.tol.pieri_coefficients = 1e-12;
    merge(o, from_report(verify::pieri(cfg), {"pieri_expanded", "pieri_compact", "pieri_coefficients"}),
          "n=" + std::to_string(n) + " ");
  }
  return o;
}

// 5. |P_lambda(tau) - 1| <= 1e-9, n <= 3, parts <= 6.
Outcome principal_specialization() {
  double worst = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto z = principal_point(P, n);
    for (const auto& lambda : enumerate(n, 6)) worst = std::max(worst, std::abs(p_normalized(z, lambda, P) - 1.0));
  }
  return {worst <= 1e-9, fmt("max |P(tau) - 1| = %.2e", worst)};
}

double deviation_from_norms(const ComplexMatrix& g, std::size_t n, int L) {
  const auto lambdas = enumerate(n, L);
  double worst = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      worst = std::max(worst, std::abs(g(i, j) - (i == j ? norm_N(lambdas[i], P) : 0.0)));
  return worst;
}

verify::Config gram_config(std::size_t n, int L, std::size_t quad) {
  verify::Config cfg;
  cfg.params = P;
  cfg.n = n;
  cfg.max_part = L;
  cfg.quad_points = quad;
  cfg.seed = seed;
  return cfg;
}

// 6. Orthogonality: n=1 400 nodes parts <= 6 to 1e-8; n=2 200^2 full-cube parts <= 4 to 1e-6.
Outcome orthogonality() {
  const double one = deviation_from_norms(verify::gram_for(gram_config(1, 6, 400), QuadratureMode::full_cube), 1, 6);
  const double two = deviation_from_norms(verify::gram_for(gram_config(2, 4, 200), QuadratureMode::full_cube), 2, 4);
  return {one <= 1e-8 && two <= 1e-6, fmt("n=1 max|G-diag N| %.2e (<=1e-8), ", one) + fmt("n=2 %.2e (<=1e-6)", two)};
}

// 7. Alcove vs full-cube Gram within 1e-6; Delta invariant under W to 1e-12 at 100 points.
Outcome mode_equivalence() {
  const auto cfg = gram_config(2, 4, 200);
  const ComplexMatrix a = verify::gram_for(cfg, QuadratureMode::alcove);
  const ComplexMatrix b = verify::gram_for(cfg, QuadratureMode::full_cube);
  double diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) diff = std::max(diff, std::abs(a(i, j) - b(i, j)));

  verify::Config w;
  w.params = P;
  w.n = 3;
  w.max_part = 2;
  w.samples = 100;
  w.seed = seed;
  w.tol.weight = 1e-12;
  Outcome o{diff <= 1e-6, fmt("gram modes differ by %.2e (<=1e-6); ", diff)};
  merge(o, from_report(verify::weight_invariance(w), {"delta_invariance"}));
  return o;
}

// 8. Fourier round trip on kets with parts <= 4: n=1 <= 1e-6, n=2 <= 1e-4.
Outcome fourier_round_trip() {
  Outcome o;
  auto one = gram_config(1, 4, 400);
  one.tol.roundtrip_one = 1e-6;
  merge(o, from_report(verify::roundtrip(one)), "n=1 ");
  auto two = gram_config(2, 4, 200);
  two.tol.roundtrip_many = 1e-4;
  merge(o, from_report(verify::roundtrip(two)), "n=2 ");
  return o;
}

// 9. Unimodularity and branches to 1e-12; two-method Psi agreement <= 1e-10 relative.
Outcome scattering_phases() {
  Outcome o;
  verify::Config u;
  u.params = P;
  u.n = 3;
  u.samples = 100;
  u.seed = seed;
  u.tol.unimodular = 1e-12;
  merge(o, from_report(verify::unimodularity(u)));
  for (std::size_t n = 1; n <= 3; ++n) {
    verify::Config cfg;
    cfg.params = P;
    cfg.n = n;
    cfg.max_part = 6;
    cfg.samples = 20;
    cfg.seed = seed;
    cfg.tol.psi_agreement = 1e-10;
    merge(o, from_report(verify::psi_agreement(cfg), {"psi_methods"}), "n=" + std::to_string(n) + " ");
  }
  return o;
}

// 10. evolve(t=0) = f to 1e-8; norm conserved to 1e-4 at t = 1, 5, 10; generator by
// central differences (step 1e-4) against the transformed H to 1e-5.
Outcome dynamics() {
  const QuadratureRule rule = build_rule(1, 400, QuadratureMode::alcove, {seed, 1e-6});
  FockVector f(1);
  f.set({0}, 0.5);
  f.set({2}, cplx(0.3, -0.4));
  f.set({5}, cplx(-0.2, 0.6));
  const auto window = enumerate(1, 80);

  double identity = 0;
  const Evolved at0 = evolve(f, 0.0, window, rule, P);
  for (std::size_t i = 0; i < window.size(); ++i) identity = std::max(identity, std::abs(at0.values[i] - f(window[i])));

  double norm0 = 0, drift = 0;
  for (const auto& [lambda, v] : f.amplitudes()) norm0 += std::norm(v);
  for (double t : {1.0, 5.0, 10.0}) {
    double norm = 0;
    for (cplx v : evolve(f, t, window, rule, P).values) norm += std::norm(v);
    drift = std::max(drift, std::abs(std::sqrt(norm) - std::sqrt(norm0)));
  }

  const double h = 1e-4;
  const auto plus = evolve(f, h, window, rule, P).values;
  const auto minus = evolve(f, -h, window, rule, P).values;
  const FockVector hf = apply_H_transformed(f, P);
  double generator = 0;
  for (std::size_t i = 0; i < window.size(); ++i)
    generator = std::max(generator, std::abs((plus[i] - minus[i]) / (2 * h) - cplx(0, 1) * hf(window[i])));

  return {identity <= 1e-8 && drift <= 1e-4 && generator <= 1e-5,
          fmt("t=0 %.2e (<=1e-8), ", identity) + fmt("norm drift %.2e (<=1e-4), ", drift) +
              fmt("generator %.2e (<=1e-5)", generator)};
}

// 11. d(t) strictly decreasing over t = 5, 10, 20, 40 for an incoming n=1 packet.
Outcome wave_operator() {
  FockVector f(1);
  double norm = 0;
  for (int l = 0; l <= 60; ++l) {
    const double d = (l - 10.0) / 3.0;
    const cplx v = std::exp(-0.5 * d * d) * std::polar(1.0, 1.2 * l);
    f.set({l}, v);
    norm += std::norm(v);
  }
  f *= 1.0 / std::sqrt(norm);
  const QuadratureRule rule = build_rule(1, 1500, QuadratureMode::alcove, {seed, 1e-6});
  const std::vector<double> times{5, 10, 20, 40};
  const ProbeTable table = wave_operator_probe(f, times, rule, 300, P);
  bool decreasing = true;
  std::string detail = "d =";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    detail += fmt(" %.3e", table.rows[i].distance);
    if (i > 0 && !(table.rows[i].distance < table.rows[i - 1].distance)) decreasing = false;
  }
  if (table.truncation_warning) detail += " [window truncation]";
  return {decreasing && !table.truncation_warning, detail};
}

// 12. One-particle spectrum at L = 500 within [-2.05, 2.05] across the domain grid.
Outcome spectrum_containment() {
  double lo = 0, hi = 0;
  for (const auto& p : domain_grid()) {
    const auto eig = truncated_one_particle_spectrum(500, p);
    lo = std::min(lo, eig.front());
    hi = std::max(hi, eig.back());
  }
  return {lo >= -2.05 && hi <= 2.05, fmt("eigenvalues in [%.6f, %.6f]", lo, hi)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 = no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "eigenvalue equation", 30, eigenvalue_equation},
      {2, "hamiltonian form equivalence", 10, hamiltonian_forms},
      {3, "algebra relations and adjointness", 0, algebra_relations},
      {4, "pieri formulas", 0, pieri_formulas},
      {5, "principal specialization", 0, principal_specialization},
      {6, "orthogonality", 120, orthogonality},
      {7, "quadrature mode equivalence and weight invariance", 0, mode_equivalence},
      {8, "fourier round trip", 0, fourier_round_trip},
      {9, "scattering phases and wave-function agreement", 0, scattering_phases},
      {10, "dynamics", 0, dynamics},
      {11, "wave-operator probe", 120, wave_operator},
      {12, "spectrum containment", 10, spectrum_containment},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = c.budget_s == 0 || seconds <= c.budget_s;
    const bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %2d %s: %s | %s| %.2fs%s\n", c.id, pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), seconds,
                in_budget ? "" : " (over runtime budget)");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
