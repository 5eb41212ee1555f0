#pragma once

#include <string>

#include "mtz/characters.hpp"
#include "mtz/cone_zeta.hpp"
#include "mtz/fan.hpp"
#include "mtz/graded_series.hpp"
#include "mtz/height_zeta.hpp"
#include "mtz/lattice.hpp"
#include "mtz/lefschetz.hpp"

// Text serialization. Every reader throws Error(ParseError) with a line:column or a key path.
namespace mtz {

// {"2":"1","0":"-1"} for L^2 - 1, exponents descending.
std::string to_json(const LL& a);
LL ll_from_json(const std::string& text);

std::string to_json(const GradedSeries& s);
GradedSeries series_from_json(const std::string& text);

std::string to_json(const CharFunction& f);
CharFunction char_function_from_json(const std::string& text);

std::string to_json(const Sublattice& s);
Sublattice sublattice_from_json(const std::string& text);

std::string to_json(const ZetaSeries& z);
std::string count_to_json(const std::string& fan, const IVec& d, int q, const Int& count);

std::string to_json(const RawFan& f);
RawFan fan_from_json(const std::string& text);
// Flat subset of TOML: name = "..", rank = n, rays = [[..], ..], max_cones = [[..], ..].
RawFan fan_from_toml(const std::string& text);
// Picks TOML for a ".toml" suffix, JSON otherwise.
RawFan read_fan_file(const std::string& path);

// Same as a fan, plus an optional "support" list of generators.
RawConeFan cone_fan_from_json(const std::string& text);
std::string to_json(const RawConeFan& f);

}  // namespace mtz
