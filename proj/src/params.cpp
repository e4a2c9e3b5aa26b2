#include "qboson/params.hpp"

#include <cmath>
#include <sstream>

#include "qboson/errors.hpp"

namespace qboson {

ModelParams ModelParams::from_ac(double q, double a, double c) {
  ModelParams p{q, a, c};
  p.require_algebra_valid();
  return p;
}

ModelParams ModelParams::from_roots(double q, double r1, double r2) {
  return from_ac(q, r1 + r2, r1 * r2);
}

std::optional<std::pair<double, double>> ModelParams::real_roots() const {
  const double half = a / 2;
  const double disc = half * half - c;
  if (disc < 0) return std::nullopt;
  const double s = std::sqrt(disc);
  return std::pair{half + s, half - s};
}

std::complex<double> ModelParams::r() const {
  const double half = a / 2;
  return half + std::sqrt(std::complex<double>(half * half - c, 0.0));
}

bool ModelParams::in_orthogonality_domain() const {
  if (!(std::abs(q) > 0 && std::abs(q) < 1)) return false;
  const auto roots = real_roots();
  if (!roots) return false;
  return roots->first > -1 && roots->first < 1 && roots->second > -1 && roots->second < 1;
}

void ModelParams::require_algebra_valid() const {
  if (!std::isfinite(q) || !std::isfinite(a) || !std::isfinite(c))
    throw domain_error("model parameters must be finite");
  if (q == 0 || std::abs(q) == 1) throw domain_error("|q| must differ from 0 and 1");
}

void ModelParams::require_orthogonality_domain() const {
  require_algebra_valid();
  if (!in_orthogonality_domain()) {
    std::ostringstream os;
    os << "parameters outside the orthogonality domain (q=" << q << ", a=" << a << ", c=" << c
       << "): need 0<|q|<1 and real roots r1, r2 in (-1,1)";
    throw domain_error(os.str());
  }
}

}  // namespace qboson
