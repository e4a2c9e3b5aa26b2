#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "qboson/fock.hpp"
#include "qboson/hall_littlewood.hpp"
#include "qboson/scattering.hpp"
#include "qboson/spectral.hpp"

namespace qboson {

// Partition <-> [3,1,0]
void to_json(nlohmann::json& j, const Partition& lambda);
void from_json(const nlohmann::json& j, Partition& lambda);

// FockVector <-> {"n": 2, "amplitudes": [{"partition": [1,0], "re": 1.0, "im": 0.0}]}
void to_json(nlohmann::json& j, const FockVector& f);
void from_json(const nlohmann::json& j, FockVector& f);

// {"re": ..., "im": ..., "condition": ..., "terms": ...}
void to_json(nlohmann::json& j, const Evaluated& value);

/// Columns i, j, re, im, expected, abs_error; expected[i] is the diagonal target.
std::string gram_csv(const ComplexMatrix& g, std::span<const double> expected);

/// Columns t, distance, window_size, quadrature_points.
std::string probe_csv(const ProbeTable& table);

}  // namespace qboson
