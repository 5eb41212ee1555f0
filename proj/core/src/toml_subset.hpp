#pragma once

#include <string>

namespace mtz::detail {

// Top-level `key = value` pairs with strings, integers, booleans and (nested, possibly
// multi-line) arrays; '#' comments. Tables and dotted keys are rejected. Returns JSON text.
std::string toml_subset_to_json(const std::string& text);

}  // namespace mtz::detail
