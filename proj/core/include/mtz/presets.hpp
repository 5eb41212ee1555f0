#pragma once

#include <string>
#include <vector>

#include "mtz/fan.hpp"

namespace mtz {

// Accepted names: P1, P2, P1xP1, P1xP2, Bl1P2, Hirzebruch(a) (alias Fa) for a >= 0.
Fan preset_fan(const std::string& name);
std::vector<std::string> preset_names();
// The five fans every identity check runs over.
std::vector<Fan> standard_presets();

}  // namespace mtz
