// Command-line front end: evaluation, verification suites and the scattering probe.
//
// Exit codes: 0 all checks pass, 1 some verification check failed,
// 2 usage, configuration or domain error (an error report is still printed).

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qboson/algebra.hpp"
#include "qboson/errors.hpp"
#include "qboson/hall_littlewood.hpp"
#include "qboson/params.hpp"
#include "qboson/scattering.hpp"
#include "qboson/serialize.hpp"
#include "qboson/spectral.hpp"
#include "qboson/verify.hpp"

namespace {

using nlohmann::json;
using namespace qboson;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

/// Everything the flags can set; unset optionals mean "not supplied".
struct RunConfig {
  double q = 0.5;
  std::optional<double> a, c, r1, r2;
  std::size_t n = 0;  // 0 = infer from --xi / --lambda, or the command default
  int max_part = -1;  // -1 = command default
  std::vector<double> xi;
  std::vector<int> lambda;
  double x = 0;
  std::vector<double> t;
  std::size_t quad = 0;  // 0 = command default
  std::string quad_mode = "full-cube";
  std::string precision = "standard";
  std::uint64_t seed = 0;
  std::size_t samples = 20;
  std::string format = "json";
  std::string psi_method = "sign-sum";
  int window = 300;
  double center = 10, width = 3, momentum = 1.2;
  double delta_gen = 1e-6, delta_sing = 1e-10;
  verify::Tolerances tol;
};

class usage_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ModelParams resolve_params(const RunConfig& rc) {
  const bool ac = rc.a || rc.c;
  const bool roots = rc.r1 || rc.r2;
  if (ac && roots) throw usage_error("supply exactly one of (--a, --c) or (--r1, --r2)");
  if (ac) {
    if (!(rc.a && rc.c)) throw usage_error("--a and --c must be given together");
    return ModelParams::from_ac(rc.q, *rc.a, *rc.c);
  }
  if (roots) {
    if (!(rc.r1 && rc.r2)) throw usage_error("--r1 and --r2 must be given together");
    return ModelParams::from_roots(rc.q, *rc.r1, *rc.r2);
  }
  return ModelParams::from_roots(rc.q, 0.2, 0.4);
}

EvalOptions eval_options(const RunConfig& rc) {
  EvalOptions opts;
  opts.delta_gen = rc.delta_gen;
  opts.delta_sing = rc.delta_sing;
  opts.precision = rc.precision == "extended" ? Precision::extended : Precision::standard;
  return opts;
}

QuadratureMode quad_mode(const RunConfig& rc) {
  return rc.quad_mode == "alcove" ? QuadratureMode::alcove : QuadratureMode::full_cube;
}

json tolerances_json(const verify::Tolerances& t) {
  return {{"algebra", t.algebra},         {"operator_forms", t.operator_forms}, {"h0_limit", t.h0_limit},
          {"eigen", t.eigen},             {"pieri", t.pieri},                   {"pieri_coefficients", t.pieri_coefficients},
          {"principal", t.principal},     {"gram_one", t.gram_one},             {"gram_many", t.gram_many},
          {"roundtrip_one", t.roundtrip_one}, {"roundtrip_many", t.roundtrip_many},
          {"psi_agreement", t.psi_agreement}, {"unimodular", t.unimodular},     {"weight", t.weight}};
}

json config_json(const RunConfig& rc, const ModelParams& p) {
  json j = {{"q", p.q}, {"a", p.a}, {"c", p.c}};
  if (const auto roots = p.real_roots()) {
    j["r1"] = roots->first;
    j["r2"] = roots->second;
  }
  j["n"] = rc.n;
  j["L"] = rc.max_part;
  if (!rc.xi.empty()) j["xi"] = rc.xi;
  if (!rc.lambda.empty()) j["lambda"] = rc.lambda;
  if (!rc.t.empty()) j["t"] = rc.t;
  j["quad"] = rc.quad;
  j["quad_mode"] = rc.quad_mode;
  j["precision"] = rc.precision;
  j["seed"] = rc.seed;
  j["samples"] = rc.samples;
  j["delta_gen"] = rc.delta_gen;
  j["delta_sing"] = rc.delta_sing;
  j["tolerances"] = tolerances_json(rc.tol);
  return j;
}

json complex_json(cplx v) { return {{"re", v.real()}, {"im", v.imag()}, {"abs", std::abs(v)}}; }

json checks_json(const std::vector<verify::Check>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name},
                   {"max_residual", c.max_residual},
                   {"tolerance", c.tolerance},
                   {"count", c.count},
                   {"pass", c.pass}});
  return out;
}

std::string checks_csv(const std::vector<verify::Check>& checks) {
  std::ostringstream os;
  os.precision(17);
  os << "name,max_residual,tolerance,count,pass\n";
  for (const auto& c : checks)
    os << c.name << ',' << c.max_residual << ',' << c.tolerance << ',' << c.count << ','
       << (c.pass ? "true" : "false") << '\n';
  return os.str();
}

struct Outcome {
  json result = json::object();
  std::vector<verify::Check> checks;
  std::optional<std::string> csv;  // replaces the JSON body when --format csv
};

// ---------------------------------------------------------------------------
// eval

SpectralPoint require_xi(const RunConfig& rc) {
  if (rc.xi.empty()) throw usage_error("--xi is required for this quantity");
  return SpectralPoint(rc.xi);
}

Partition require_lambda(const RunConfig& rc, std::size_t n) {
  if (rc.lambda.empty() && n != 0) throw usage_error("--lambda is required for this quantity");
  if (rc.lambda.size() != n) throw usage_error("--lambda and --xi must have the same length");
  return Partition(rc.lambda);
}

Outcome run_eval(const std::string& kind, RunConfig& rc, const ModelParams& p) {
  const EvalOptions opts = eval_options(rc);
  Outcome out;
  auto& r = out.result;
  r["kind"] = kind;
  if (kind == "phi") {
    const auto xi = require_xi(rc);
    rc.n = xi.size();
    r["value"] = phi(xi, require_lambda(rc, xi.size()), p, opts);
  } else if (kind == "psi") {
    const auto xi = require_xi(rc);
    rc.n = xi.size();
    const auto method = rc.psi_method == "renormalized" ? PsiMethod::renormalized : PsiMethod::sign_sum;
    r["method"] = rc.psi_method;
    r["value"] = complex_json(psi(xi, require_lambda(rc, xi.size()), p, method, opts));
  } else if (kind == "C") {
    const auto xi = require_xi(rc);
    rc.n = xi.size();
    r["value"] = complex_json(coeff_C(xi.values(), p, opts.delta_sing));
  } else if (kind == "Delta") {
    const auto xi = require_xi(rc);
    rc.n = xi.size();
    r["value"] = weight_Delta(xi, p, opts);
  } else if (kind == "N") {
    rc.n = rc.lambda.size();
    r["value"] = norm_N(Partition(rc.lambda), p);
  } else if (kind == "E") {
    const auto xi = require_xi(rc);
    rc.n = xi.size();
    r["value"] = eigenvalue(xi.values());
  } else if (kind == "tau") {
    if (rc.n == 0) throw usage_error("--n is required for tau");
    json values = json::array();
    for (cplx v : tau_vector(p, rc.n)) values.push_back(complex_json(v));
    r["value"] = values;
  } else if (kind == "Shat") {
    const auto xi = require_xi(rc);
    rc.n = xi.size();
    r["value"] = complex_json(S_hat(xi.values(), p, opts.delta_sing));
  } else if (kind == "s") {
    r["x"] = rc.x;
    r["value"] = complex_json(s_bulk(rc.x, p, opts.delta_sing));
  } else if (kind == "s0") {
    r["x"] = rc.x;
    r["value"] = complex_json(s_boundary(rc.x, p, opts.delta_sing));
  }
  if (rc.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "kind,value\n" << kind << ',' << r["value"].dump() << '\n';
    out.csv = os.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteDefaults {
  std::size_t n;
  int max_part;
  std::size_t quad;
};

SuiteDefaults suite_defaults(const std::string& suite) {
  if (suite == "gram") return {1, 6, 400};
  if (suite == "roundtrip") return {1, 4, 400};
  if (suite == "eigen") return {2, 8, 0};
  if (suite == "pieri") return {3, 6, 0};
  return {2, 6, 0};
}

Outcome run_verify(const std::string& suite, RunConfig& rc, const ModelParams& p) {
  const SuiteDefaults d = suite_defaults(suite);
  if (rc.n == 0) rc.n = d.n;
  if (rc.max_part < 0) rc.max_part = d.max_part;
  if (rc.quad == 0) rc.quad = d.quad;

  verify::Config cfg;
  cfg.params = p;
  cfg.n = rc.n;
  cfg.max_part = rc.max_part;
  cfg.samples = rc.samples;
  cfg.seed = rc.seed;
  cfg.quad_points = rc.quad;
  cfg.quad_mode = quad_mode(rc);
  cfg.eval = eval_options(rc);
  cfg.tol = rc.tol;

  Outcome out;
  const verify::Report report = verify::run(suite, cfg);
  out.result = {{"suite", report.suite}, {"pass", report.pass()}};
  out.checks = report.checks;
  if (rc.format == "csv") {
    if (suite == "gram") {
      const auto g = verify::gram_for(cfg, cfg.quad_mode);
      std::vector<double> expected;
      for (const auto& lambda : enumerate(cfg.n, cfg.max_part)) expected.push_back(norm_N(lambda, p));
      out.csv = gram_csv(g, expected);
    } else {
      out.csv = checks_csv(report.checks);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// scatter

FockVector wave_packet(const RunConfig& rc) {
  // Product of Gaussians g_j(l) = exp(-(l - x_j)^2 / (2 w^2)) e^{i k l}, centres spaced by 4w.
  FockVector f(static_cast<int>(rc.n));
  const int reach = static_cast<int>(std::ceil(rc.center + 4.0 * rc.width * (rc.n - 1) + 10.0 * rc.width));
  const int top = std::min(reach, rc.window);
  for (const auto& lambda : enumerate(rc.n, top)) {
    cplx v = 1.0;
    for (std::size_t j = 0; j < rc.n; ++j) {
      const double centre = rc.center + 4.0 * rc.width * static_cast<double>(rc.n - 1 - j);
      const double d = (lambda[j] - centre) / rc.width;
      v *= std::exp(-0.5 * d * d) * std::polar(1.0, rc.momentum * lambda[j]);
    }
    if (std::abs(v) > 1e-300) f.set(lambda, v);
  }
  double norm = 0;
  for (const auto& [lambda, v] : f.amplitudes()) norm += std::norm(v);
  f *= 1.0 / std::sqrt(norm);
  return f;
}

Outcome run_scatter(RunConfig& rc, const ModelParams& p) {
  p.require_orthogonality_domain();
  if (rc.n == 0) rc.n = 1;
  if (rc.quad == 0) rc.quad = 1500;
  if (rc.t.empty()) rc.t = {5, 10, 20, 40};
  rc.max_part = rc.window;
  const FockVector f = wave_packet(rc);
  const QuadratureRule rule = build_rule(rc.n, rc.quad, quad_mode(rc), {rc.seed, rc.delta_gen});
  const ProbeTable table = wave_operator_probe(f, rc.t, rule, rc.window, p, eval_options(rc));

  Outcome out;
  json rows = json::array();
  for (const auto& row : table.rows)
    rows.push_back({{"t", row.t},
                    {"distance", row.distance},
                    {"window_size", row.window_size},
                    {"quadrature_points", row.quadrature_points}});
  out.result = {{"rows", rows},
                {"packet", {{"center", rc.center}, {"width", rc.width}, {"momentum", rc.momentum}}},
                {"window", rc.window},
                {"truncation_warning", table.truncation_warning},
                {"resolution_warning", table.resolution_warning}};

  // Decay: distances strictly decrease along increasing t >= 0, or the packet already
  // sits at the limit (free theory) with every distance below 1e-8.
  std::vector<ProbeRow> forward;
  for (const auto& row : table.rows)
    if (row.t >= 0) forward.push_back(row);
  std::sort(forward.begin(), forward.end(), [](const ProbeRow& a, const ProbeRow& b) { return a.t < b.t; });
  verify::Check decay{"decay", 0.0, 1e-8, forward.size(), true};
  bool decreasing = true;
  for (std::size_t i = 0; i < forward.size(); ++i) {
    decay.max_residual = std::max(decay.max_residual, forward[i].distance);
    if (i > 0 && !(forward[i].distance < forward[i - 1].distance)) decreasing = false;
  }
  decay.pass = decreasing || decay.max_residual <= decay.tolerance;
  out.checks.push_back(decay);
  out.checks.push_back({"window_truncation", table.truncation_warning ? 1.0 : 0.0, 0.0, 1, !table.truncation_warning});
  out.checks.push_back(
      {"quadrature_resolution", table.resolution_warning ? 1.0 : 0.0, 0.0, 1, !table.resolution_warning});
  if (rc.format == "csv") out.csv = probe_csv(table);
  return out;
}

// ---------------------------------------------------------------------------

void add_common(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--q", rc.q, "bulk deformation parameter")->capture_default_str();
  cmd->add_option("--a", rc.a, "boundary parameter a (with --c)");
  cmd->add_option("--c", rc.c, "boundary parameter c (with --a)");
  cmd->add_option("--r1", rc.r1, "boundary root r1 (with --r2)");
  cmd->add_option("--r2", rc.r2, "boundary root r2 (with --r1)");
  cmd->add_option("--n", rc.n, "particle number");
  cmd->add_option("--L", rc.max_part, "bound on the parts of lambda");
  cmd->add_option("--xi", rc.xi, "spectral point, comma separated")->delimiter(',');
  cmd->add_option("--lambda", rc.lambda, "partition, comma separated")->delimiter(',');
  cmd->add_option("--x", rc.x, "argument of s or s0");
  cmd->add_option("--t", rc.t, "times, comma separated")->delimiter(',');
  cmd->add_option("--quad", rc.quad, "Gauss-Legendre points per axis");
  cmd->add_option("--quad-mode", rc.quad_mode)->check(CLI::IsMember({"alcove", "full-cube"}));
  cmd->add_option("--precision", rc.precision)->check(CLI::IsMember({"standard", "extended"}));
  cmd->add_option("--seed", rc.seed, "seed for sampling and quadrature jitter");
  cmd->add_option("--samples", rc.samples, "random spectral points per check");
  cmd->add_option("--format", rc.format)->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--delta-gen", rc.delta_gen, "genericity margin");
  cmd->add_option("--delta-sing", rc.delta_sing, "singularity cutoff");
  auto& t = rc.tol;
  cmd->add_option("--tol-algebra", t.algebra);
  cmd->add_option("--tol-operator-forms", t.operator_forms);
  cmd->add_option("--tol-h0-limit", t.h0_limit);
  cmd->add_option("--tol-eigen", t.eigen);
  cmd->add_option("--tol-pieri", t.pieri);
  cmd->add_option("--tol-pieri-coefficients", t.pieri_coefficients);
  cmd->add_option("--tol-principal", t.principal);
  cmd->add_option("--tol-gram-one", t.gram_one);
  cmd->add_option("--tol-gram-many", t.gram_many);
  cmd->add_option("--tol-roundtrip-one", t.roundtrip_one);
  cmd->add_option("--tol-roundtrip-many", t.roundtrip_many);
  cmd->add_option("--tol-psi-agreement", t.psi_agreement);
  cmd->add_option("--tol-unimodular", t.unimodular);
  cmd->add_option("--tol-weight", t.weight);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-boson lattice with boundary interaction: evaluation and verification"};
  app.require_subcommand(1);
  RunConfig rc;

  std::string kind, suite;
  auto* eval = app.add_subcommand("eval", "evaluate a single quantity");
  eval->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "C", "Delta", "N", "E", "tau", "Shat", "s", "s0"}));
  eval->add_option("--method", rc.psi_method, "psi evaluation method")
      ->check(CLI::IsMember({"renormalized", "sign-sum"}));
  add_common(eval, rc);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(verify::suite_names()));
  add_common(ver, rc);

  auto* scatter = app.add_subcommand("scatter", "wave-operator decay table for a wave packet");
  scatter->add_option("--window", rc.window, "largest lattice site kept")->capture_default_str();
  scatter->add_option("--center", rc.center, "packet centre")->capture_default_str();
  scatter->add_option("--width", rc.width, "packet width")->capture_default_str();
  scatter->add_option("--momentum", rc.momentum, "packet momentum")->capture_default_str();
  add_common(scatter, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  std::string command;
  if (*eval) command = "eval " + kind;
  if (*ver) command = "verify " + suite;
  if (*scatter) command = "scatter";

  json report = {{"command", command}};
  const auto start = std::chrono::steady_clock::now();
  int code = exit_pass;
  std::optional<std::string> csv;
  try {
    const ModelParams p = resolve_params(rc);
    Outcome out;
    if (*eval) out = run_eval(kind, rc, p);
    if (*ver) out = run_verify(suite, rc, p);
    if (*scatter) out = run_scatter(rc, p);
    report["config"] = config_json(rc, p);
    report["result"] = out.result;
    report["checks"] = checks_json(out.checks);
    for (const auto& c : out.checks)
      if (!c.pass) code = exit_fail;
    csv = out.csv;
  } catch (const qboson::error& e) {
    report["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    code = exit_usage;
  } catch (const usage_error& e) {
    report["error"] = {{"kind", "usage"}, {"message", e.what()}};
    code = exit_usage;
  } catch (const std::invalid_argument& e) {
    report["error"] = {{"kind", "invalid_argument"}, {"message", e.what()}};
    code = exit_usage;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report["runtime_ms"] = elapsed.count();

  if (csv && code != exit_usage)
    std::cout << *csv;
  else
    std::cout << report.dump(2) << '\n';
  return code;
}
