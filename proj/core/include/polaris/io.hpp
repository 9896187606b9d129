#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "polaris/majorana.hpp"
#include "polaris/multipole.hpp"

namespace polaris {

using Json = nlohmann::json;

// State schema: {"S": "7/2", "amps": [{"m": "-7/2", "re": ..., "im": ...}, ...]}
// with amplitudes ordered m = -S..S.
Json state_to_json(const SpinState& state);
SpinState state_from_json(const Json& j);

// Spectrum schema: {"S": "...", "multipoles": [{"K": 0, "q": 0, "re": ..., "im": ...}, ...]}
Json spectrum_to_json(const MultipoleSpectrum& spec);

// Constellation schema: {"S": "...", "points": [{"theta": ..., "phi": ...}, ...]}
Json constellation_to_json(const Constellation& c);
Constellation constellation_from_json(const Json& j);

// Bare point sets (design-order input) accept either the constellation schema
// or {"points": [...]} without "S".
std::vector<SpherePoint> points_from_json(const Json& j);
Json points_to_json(const std::vector<SpherePoint>& pts);

// CSV emitters. qgrid: one row per theta sample, comma-separated phi samples.
void write_qgrid_csv(std::ostream& os, const Eigen::MatrixXd& grid);
void write_spectrum_csv(std::ostream& os, const MultipoleSpectrum& spec);
void write_cumulative_csv(std::ostream& os, const SpinState& state);

/// Resolve "fixture:S" pseudo-paths or read a state JSON file.
SpinState load_state(const std::string& path_or_fixture);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace polaris
