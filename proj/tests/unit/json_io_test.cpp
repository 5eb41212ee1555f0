#include <gtest/gtest.h>

#include <fstream>

#include "mtz/errors.hpp"
#include "mtz/json_io.hpp"
#include "mtz/presets.hpp"
#include "test_util.hpp"

using namespace mtz;

namespace {

std::string parse_error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    return e.message();
  }
  ADD_FAILURE() << "no error";
  return "";
}

}  // namespace

TEST(JsonIo, LaurentRoundTripSeeded) {
  Rng rng(91);
  for (int t = 0; t < 100; ++t) {
    const LL a = test::random_ll(rng, -5, 5, 4);
    EXPECT_EQ(ll_from_json(to_json(a)), a);
  }
  EXPECT_EQ(to_json(LL::monomial(2) - LL(1)), R"({"2":"1","0":"-1"})");
}

TEST(JsonIo, SeriesRoundTrip) {
  GradedSeries s(2, 1, 4, std::vector<int>{3, 3});
  s.add_term({{1, 2}, {-1}}, LL::L());
  s.add_term({{0, 0}, {0}}, LL(1));
  EXPECT_EQ(series_from_json(to_json(s)), s);
}

TEST(JsonIo, CharFunctionAndSublattice) {
  CharFunction f(2);
  f.add({1, -2}, LL::monomial(3));
  EXPECT_EQ(char_function_from_json(to_json(f)), f);
  const Sublattice h(2, {{2, 0}, {1, 3}});
  const Sublattice back = sublattice_from_json(to_json(h));
  EXPECT_EQ(back.hermite_rows(), h.hermite_rows());
}

TEST(JsonIo, FanRoundTripAndToml) {
  for (const Fan& f : standard_presets()) {
    const RawFan back = fan_from_json(to_json(f.raw()));
    EXPECT_EQ(back.rays, f.rays());
    EXPECT_EQ(back.max_cones, f.max_cones());
  }
  const RawFan t = fan_from_toml("name = \"p1\" # comment\nrank = 1\nrays = [[1], [-1]]\nmax_cones = [[0], [1]]\n");
  EXPECT_EQ(t.name, "p1");
  EXPECT_EQ(t.rays, std::vector<IVec>({{1}, {-1}}));
}

TEST(JsonIo, ShippedDataFiles) {
  const std::string dir = MTZ_DATA_DIR;
  for (const char* name : {"P1", "P2", "P1xP1", "P1xP2", "Bl1P2", "F1", "F2"})
    EXPECT_NO_THROW(validate_fan(read_fan_file(dir + "/fans/" + name + ".json"))) << name;
  const Fan toml = validate_fan(read_fan_file(dir + "/fans/F1.toml"));
  EXPECT_EQ(toml.rays(), preset_fan("F1").rays());
  for (const char* name : {"quadrant", "subdivided", "ray"}) {
    std::ifstream in(dir + "/cones/" + name + ".json");
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_NO_THROW(validate_cone_fan(cone_fan_from_json(text))) << name;
  }
}

TEST(JsonIo, ErrorsCarryLocation) {
  const std::string syntax = parse_error_of([] { fan_from_json("{\"name\": \"x\",\n  \"rank\": }"); });
  EXPECT_NE(syntax.find("2:"), std::string::npos) << syntax;
  const std::string schema = parse_error_of([] { fan_from_json(R"({"name":"x","rank":1,"rays":[[1],["a"]],"max_cones":[]})"); });
  EXPECT_NE(schema.find("rays"), std::string::npos) << schema;
  const std::string toml = parse_error_of([] { fan_from_toml("name = \"x\"\n[table]\n"); });
  EXPECT_NE(toml.find("2:"), std::string::npos) << toml;
  EXPECT_THROW(read_fan_file("/nonexistent/fan.json"), Error);
}
