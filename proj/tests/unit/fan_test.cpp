#include <gtest/gtest.h>

#include <map>

#include "mtz/errors.hpp"
#include "mtz/fan.hpp"
#include "mtz/presets.hpp"
#include "test_util.hpp"

using namespace mtz;

namespace {

ErrorKind kind_of(const RawFan& raw) {
  try {
    validate_fan(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;  // sentinel: nothing thrown
}

// Hand count of F_q-points: q^2 + q + 1 style polynomials in L.
LL poly(std::initializer_list<long> c) {
  LL r;
  long e = 0;
  for (long x : c) r.add_term(e++, Int(x));
  return r;
}

}  // namespace

TEST(ToricFan, ValidationErrors) {
  EXPECT_EQ(kind_of({"bad", 1, {{2}, {-1}}, {{0}, {1}}}), ErrorKind::NonPrimitiveRay);
  EXPECT_EQ(kind_of({"bad", 1, {{1}, {1}}, {{0}, {1}}}), ErrorKind::DuplicateRay);
  EXPECT_EQ(kind_of({"bad", 2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}}), ErrorKind::NonUnimodularCone);
  // Complete support but the last cone overlaps the first.
  EXPECT_NE(kind_of({"bad", 2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}}),
            ErrorKind::InvariantViolation);
  // Missing a maximal cone: not complete.
  EXPECT_NE(kind_of({"bad", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}}}), ErrorKind::InvariantViolation);
}

TEST(ToricFan, PresetsAndAliases) {
  EXPECT_EQ(preset_fan("Hirzebruch(1)").rays(), preset_fan("F1").rays());
  for (const Fan& f : standard_presets()) EXPECT_EQ(f.pic_rank(), f.num_rays() - f.rank());
  EXPECT_THROW(preset_fan("P7"), Error);
}

TEST(ToricFan, ClassesByHand) {
  const LL L = LL::L();
  EXPECT_EQ(class_of_X(preset_fan("P1")), poly({1, 1}));
  EXPECT_EQ(class_of_X(preset_fan("P2")), poly({1, 1, 1}));
  EXPECT_EQ(class_of_X(preset_fan("P1xP1")), poly({1, 2, 1}));
  EXPECT_EQ(class_of_X(preset_fan("Bl1P2")), poly({1, 2, 1}));
  EXPECT_EQ(class_of_X(preset_fan("P1xP2")), poly({1, 2, 2, 1}));
  EXPECT_EQ(class_of_X(preset_fan("Hirzebruch(3)")), (L + LL(1)) * (L + LL(1)));
}

TEST(ToricFan, QSigmaOfP1) {
  ZPoly expect;
  expect.nvars = 2;
  expect.add({0, 0}, 1);
  expect.add({1, 1}, -1);
  EXPECT_EQ(q_sigma(preset_fan("P1")), expect);
}

TEST(ToricFan, QSigmaMatchesLatticeSum) {
  // prod (1 - X_a) * sum_m X^{deg(m)} over a box, compared degree by degree with Q_Sigma.
  const int bound = 4;
  for (const Fan& f : standard_presets()) {
    const size_t k = f.num_rays();
    std::map<std::vector<int>, Int> sum;
    std::vector<long long> m(f.rank(), -bound * 2);
    const long long lo = -bound * 2, hi = bound * 2;
    while (true) {
      const IVec deg = cone_decompose(f, m).ray_degrees(k);
      long total = 0;
      for (auto x : deg) total += x;
      if (total <= bound) sum[std::vector<int>(deg.begin(), deg.end())] += 1;
      size_t i = 0;
      while (i < m.size() && m[i] == hi) m[i++] = lo;
      if (i == m.size()) break;
      ++m[i];
    }
    for (size_t a = 0; a < k; ++a) {
      std::map<std::vector<int>, Int> next = sum;
      for (const auto& [e, c] : sum) {
        auto e2 = e;
        ++e2[a];
        int total = 0;
        for (int x : e2) total += x;
        if (total <= bound) next[e2] -= c;
      }
      sum = next;
    }
    const ZPoly q = q_sigma(f);
    for (const auto& [e, c] : sum) {
      int total = 0;
      for (int x : e) total += x;
      if (total > bound) continue;
      const auto it = q.terms.find(e);
      EXPECT_EQ(c, it == q.terms.end() ? Int(0) : it->second) << f.name();
    }
  }
}

TEST(ToricFan, DecompositionRoundTripSeeded) {
  Rng rng(31);
  for (const Fan& f : standard_presets())
    for (int t = 0; t < 60; ++t) {
      const IVec m = test::random_vec(rng, f.rank(), -9, 9);
      const ConeDecomposition c = cone_decompose(f, m);
      for (auto x : c.coeffs) EXPECT_GT(x, 0);
      EXPECT_EQ(recompose(f, c), m);
      EXPECT_EQ(f.sequence().apply_gamma_dual(c.ray_degrees(f.num_rays())), m);
    }
}

TEST(ToricFan, SpecialValueAndProducts) {
  for (const Fan& f : standard_presets()) {
    const LL expect = (LL(1) - LL::monomial(-1)).pow(unsigned(f.pic_rank())) * class_of_X(f).shifted(-long(f.rank()));
    EXPECT_EQ(q_sigma_at_Linv(f), expect) << f.name();
    EXPECT_GE(q_sigma(f).min_nonconstant_degree(), 2) << f.name();
  }
  const Fan pp = product_fan(preset_fan("P1"), preset_fan("P1"));
  EXPECT_EQ(class_of_X(pp), class_of_X(preset_fan("P1xP1")));
  const LL u = LL::monomial(-1);
  const LL one = q_sigma(preset_fan("P1")).evaluate_all_at(u);
  EXPECT_EQ(q_sigma(pp).evaluate_all_at(u), one * one);
}

TEST(ToricFan, AnticanonicalDegree) { EXPECT_EQ(anticanonical_degree({1, 2, 3}), 6); }
