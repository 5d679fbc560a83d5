#pragma once

#include <string>

#include <json.hpp>

#include "geostat/core/hole_set.hpp"
#include "geostat/flat/convergence.hpp"
#include "geostat/geom/volume.hpp"

namespace geostat::io {

using Json = nlohmann::ordered_json;

// {"holes":[{"p":[x,y,z],"alpha":a,"beta":b},...],"strict_beta":true}
HoleSet holes_from_json(const Json& j);
Json holes_to_json(const HoleSet& holes);
HoleSet load_holes(const std::string& path);

// {"outer":{"c":[0,0,0],"r":10},"excluded":[{"c":[2,0,0],"r":0.004}]}
Region region_from_json(const Json& j);
Json region_to_json(const Region& region);

// {"positions":[[x,y,z],...],"alpha_coef":0.25,"beta_coef":0.25,
//  "base":10.0,"k_from":3,"k_to":7}
SequenceSpec sequence_from_json(const Json& j);
SequenceSpec load_sequence(const std::string& path);

Json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace geostat::io
