#include <gtest/gtest.h>

#include "mtz/cone_zeta.hpp"
#include "mtz/errors.hpp"
#include "suites.hpp"
#include "test_util.hpp"

using namespace mtz;

namespace {

ErrorKind kind_of(const RawConeFan& raw) {
  try {
    validate_cone_fan(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(ConeZeta, ResiduesByHand) {
  // 1/(1 - T^3): a = 3, ((1 - T^3) L)(1) = 1.
  const ResidueData ray = residue_check(preset_cone_fan("ray"), {3});
  EXPECT_EQ(ray.a, 3);
  EXPECT_EQ(ray.chi, Rational(1, 3));
  EXPECT_EQ(ray.special_value, 1);
  // 1/((1 - T)(1 - T^2)): a = 2, ((1 - T^2)^2 L)(1) = (1 + T)(1) = 2.
  const ResidueData quad = residue_check(preset_cone_fan("quadrant"), {1, 2});
  EXPECT_EQ(quad.a, 2);
  EXPECT_EQ(quad.chi, Rational(1, 2));
  EXPECT_EQ(quad.special_value, 2);
  const ResidueData sub = residue_check(preset_cone_fan("subdivided"), {1, 1});
  EXPECT_EQ(sub.a, 6);
  EXPECT_EQ(sub.chi, Rational(2, 3));
  EXPECT_EQ(sub.special_value, 24);
}

TEST(ConeZeta, QuadrantLevels) {
  const auto levels = brute_force_levels(preset_cone_fan("quadrant"), {1, 1}, 6);
  for (long k = 0; k <= 6; ++k) EXPECT_EQ(levels[size_t(k)], k + 1);
}

TEST(ConeZeta, LSeriesMatchesEnumerationSeeded) {
  Rng rng(61);
  for (int t = 0; t < 25; ++t) {
    const size_t n = size_t(test::uniform(rng, 1, 3));
    const ConeFan cf = validate_cone_fan(random_subdivided_orthant(n, int(test::uniform(rng, 0, 2)), rng));
    const IVec lambda = test::random_vec(rng, n, 1, 3);
    EXPECT_EQ(l_series_direction(cf, lambda).expand(10), brute_force_levels(cf, lambda, 10));
  }
}

TEST(ConeZeta, ValidationErrors) {
  EXPECT_EQ(kind_of({"bad", 2, {{1, 0}, {1, 2}}, {{0, 1}}, {}}), ErrorKind::NonUnimodularCone);
  EXPECT_EQ(kind_of({"bad", 2, {{1, 0}, {1, 1}, {0, 1}}, {{0, 1}}, {{1, 0}, {0, 1}}}), ErrorKind::SupportViolation);
  EXPECT_EQ(kind_of({"bad", 1, {{2}}, {{0}}, {}}), ErrorKind::NonPrimitiveRay);
}

TEST(ConeZeta, LocateAndMembership) {
  const ConeFan sub = preset_cone_fan("subdivided");
  EXPECT_TRUE(sub.in_support({3, 4}));
  EXPECT_FALSE(sub.in_support({1, 3}));
  const auto hit = sub.locate({2, 3});
  ASSERT_TRUE(hit);
  IVec y(2, 0);
  for (size_t i = 0; i < hit->first.size(); ++i) y = y + hit->second[i] * sub.rays()[hit->first[i]];
  EXPECT_EQ(y, IVec({2, 3}));
}

TEST(ConeZeta, CharacterRestrictionSeeded) {
  Rng rng(71);
  for (int t = 0; t < 15; ++t) {
    const size_t n = size_t(test::uniform(rng, 1, 3));
    const size_t k = size_t(test::uniform(rng, 0, long(n)));
    const ExactSequence seq = random_exact_sequence(n, k, rng);
    const ConeFan cf = validate_cone_fan(random_subdivided_orthant(n, int(test::uniform(rng, 0, 1)), rng));
    const auto rep = char_restrict_check(seq, cf, IVec(n, 1), 6);
    EXPECT_TRUE(rep.ok()) << "trial " << t;
  }
}

TEST(ConeZeta, ShiftedConeSeeded) {
  Rng rng(73);
  for (int t = 0; t < 15; ++t) {
    const size_t n = size_t(test::uniform(rng, 1, 3));
    const ConeFan cf = validate_cone_fan(random_subdivided_orthant(n, int(test::uniform(rng, 0, 2)), rng));
    const auto rep = shifted_cone_check(cf, test::random_vec(rng, n, 0, 3), 8);
    EXPECT_TRUE(rep.identity);
    EXPECT_TRUE(rep.cardinality_bound);
    EXPECT_TRUE(rep.degree_bound);
  }
}

TEST(ConeZeta, InexactSequenceRejected) {
  const ExactSequence bad{{{1}, {1}}, {{1, 1}}};
  try {
    bad.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InexactSequence);
  }
}

TEST(ConeZeta, RestrictedFanNeedsSmallRank) {
  Rng rng(5);
  EXPECT_THROW(restricted_cone_fan(random_exact_sequence(3, 3, rng)), Error);
}

TEST(ConeZeta, ConvolutionInstances) {
  for (const auto& inst : cli::shipped_convolution_instances()) {
    std::string detail;
    EXPECT_TRUE(cli::check_convolution(inst, &detail)) << inst.name << ": " << detail;
  }
}
