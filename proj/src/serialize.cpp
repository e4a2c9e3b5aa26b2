#include "qboson/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace qboson {

void to_json(nlohmann::json& j, const Partition& lambda) { j = lambda.as_vector(); }

void from_json(const nlohmann::json& j, Partition& lambda) { lambda = Partition(j.get<std::vector<int>>()); }

void to_json(nlohmann::json& j, const FockVector& f) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& [lambda, v] : f.amplitudes())
    amps.push_back({{"partition", lambda}, {"re", v.real()}, {"im", v.imag()}});
  j = {{"n", f.grade()}, {"amplitudes", amps}};
}

void from_json(const nlohmann::json& j, FockVector& f) {
  FockVector out(j.at("n").get<int>());
  for (const auto& entry : j.at("amplitudes"))
    out.add(entry.at("partition").get<Partition>(),
            amplitude(entry.at("re").get<double>(), entry.value("im", 0.0)));
  f = std::move(out);
}

void to_json(nlohmann::json& j, const Evaluated& value) {
  j = {{"re", value.value.real()},
       {"im", value.value.imag()},
       {"condition", value.diagnostics.condition},
       {"terms", value.diagnostics.term_count},
       {"max_term", value.diagnostics.max_term_magnitude},
       {"extended_precision", value.diagnostics.extended_precision}};
}

std::string gram_csv(const ComplexMatrix& g, std::span<const double> expected) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "i,j,re,im,expected,abs_error\n";
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double target = i == k ? expected[i] : 0.0;
      os << i << ',' << k << ',' << g(i, k).real() << ',' << g(i, k).imag() << ',' << target << ','
         << std::abs(g(i, k) - target) << '\n';
    }
  return os.str();
}

std::string probe_csv(const ProbeTable& table) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "t,distance,window_size,quadrature_points\n";
  for (const auto& row : table.rows)
    os << row.t << ',' << row.distance << ',' << row.window_size << ',' << row.quadrature_points << '\n';
  return os.str();
}

}  // namespace qboson
