#include "mtz/presets.hpp"

#include <regex>

#include "mtz/errors.hpp"

namespace mtz {

namespace {

Fan hirzebruch(long long a) {
  return validate_fan({"Hirzebruch(" + std::to_string(a) + ")", 2,
                       {{1, 0}, {0, 1}, {-1, a}, {0, -1}},
                       {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
}

}  // namespace

Fan preset_fan(const std::string& name) {
  if (name == "P1") return validate_fan({"P1", 1, {{1}, {-1}}, {{0}, {1}}});
  if (name == "P2") return validate_fan({"P2", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}}});
  if (name == "P1xP1") {
    Fan f = product_fan(preset_fan("P1"), preset_fan("P1"));
    RawFan r = f.raw();
    r.name = "P1xP1";
    return validate_fan(r);
  }
  if (name == "P1xP2") {
    RawFan r = product_fan(preset_fan("P1"), preset_fan("P2")).raw();
    r.name = "P1xP2";
    return validate_fan(r);
  }
  if (name == "Bl1P2")
    return validate_fan({"Bl1P2", 2, {{1, 0}, {1, 1}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}});
  static const std::regex hz(R"((?:Hirzebruch\((\d+)\))|(?:F(\d+)))");
  std::smatch m;
  if (std::regex_match(name, m, hz)) return hirzebruch(std::stoll(m[1].matched ? m[1].str() : m[2].str()));
  throw Error(ErrorKind::InvalidArgument, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"P1", "P2", "P1xP1", "Hirzebruch(1)", "Bl1P2", "P1xP2"}; }

std::vector<Fan> standard_presets() {
  return {preset_fan("P1"), preset_fan("P2"), preset_fan("P1xP1"), preset_fan("Hirzebruch(1)"), preset_fan("Bl1P2")};
}

}  // namespace mtz
