#pragma once

#include <string>
#include <vector>

#include "etainv/surface.hpp"

namespace etainv {

struct SurfaceConfig {
    SurfaceData surface;
    std::vector<HyperbolicClass> classes;
};

// Parse the surface JSON schema:
//   { "genus": int, "cusps": int,
//     "spin": { "x": [+-1...], "y": [+-1...], "h": [+-1...], "k": +-1 },
//     "hyperbolic_classes": [ { "u": float, "chi_trace": float, "index": int } ] }
// Strict: unknown keys, wrong types, or wrong lengths raise config_error with
// the offending field named; JSON syntax errors carry the parser's byte/line
// position.
SurfaceConfig load_surface_config(const std::string& path);
SurfaceConfig parse_surface_config(const std::string& json_text);

}  // namespace etainv
