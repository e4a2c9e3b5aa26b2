#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qboson/hall_littlewood.hpp"
#include "qboson/params.hpp"
#include "qboson/spectral.hpp"

namespace qboson::verify {

/// Pass thresholds; defaults are the acceptance values.
struct Tolerances {
  double algebra = 1e-13;
  double operator_forms = 1e-13;
  double h0_limit = 1e-10;  // direct H at q = a = c = 1e-12 versus H0
  double eigen = 1e-9;
  double pieri = 1e-9;
  double pieri_coefficients = 1e-12;
  double principal = 1e-9;
  double gram_one = 1e-8;   // n = 1
  double gram_many = 1e-6;  // n >= 2
  double roundtrip_one = 1e-6;
  double roundtrip_many = 1e-4;
  double psi_agreement = 1e-10;
  double unimodular = 1e-12;
  double weight = 1e-12;
};

struct Config {
  ModelParams params = ModelParams::from_roots(0.5, 0.2, 0.4);
  std::size_t n = 2;
  int max_part = 6;
  std::size_t samples = 20;
  std::uint64_t seed = 7;
  std::size_t quad_points = 200;
  QuadratureMode quad_mode = QuadratureMode::full_cube;
  EvalOptions eval;
  Tolerances tol;
};

struct Check {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  std::size_t count = 0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
};

/// Portable RNG: mt19937_64 with the top 53 bits mapped to [0, 1).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::mt19937_64 gen_;
};

/// Uniform random point of the alcove, resampled until generic for delta_gen.
SpectralPoint random_alcove_point(std::size_t n, Rng& rng, double delta_gen);

Report algebra(const Config& cfg);
Report eigen(const Config& cfg);
Report pieri(const Config& cfg);
Report gram(const Config& cfg);
Report roundtrip(const Config& cfg);
Report psi_agreement(const Config& cfg);
Report unimodularity(const Config& cfg);
Report weight_invariance(const Config& cfg);

/// Gram matrix over Lambda_n with parts <= max_part in the requested quadrature mode.
ComplexMatrix gram_for(const Config& cfg, QuadratureMode mode);

/// Dispatch by suite name; throws std::invalid_argument for unknown names.
Report run(const std::string& suite, const Config& cfg);

const std::vector<std::string>& suite_names();

}  // namespace qboson::verify
