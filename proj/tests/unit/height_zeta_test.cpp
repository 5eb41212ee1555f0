#include <gtest/gtest.h>

#include "mtz/errors.hpp"
#include "mtz/fq_oracle.hpp"
#include "mtz/height_zeta.hpp"
#include "mtz/presets.hpp"
#include "test_util.hpp"

using namespace mtz;

namespace {

LL Lp(long e) { return LL::monomial(e); }

}  // namespace

TEST(HeightZeta, ProjectiveLineClosedForm) {
  const Fan p1 = preset_fan("P1");
  const ZetaSeries direct = zeta_direct_genus0(p1, {6});
  const ZetaSeries fourier = zeta_fourier_genus0(p1, {6});
  EXPECT_EQ(direct, fourier);
  EXPECT_EQ(direct.coeff({0, 0}), LL::L() - LL(1));
  for (long d = 1; d <= 6; ++d) EXPECT_EQ(direct.coeff({d, d}), Lp(2 * d + 1) - Lp(2 * d - 1)) << d;
  EXPECT_TRUE(direct.coeff({2, 3}).is_zero());
}

TEST(HeightZeta, LocalFourierIdentity) {
  for (const Fan& f : standard_presets()) EXPECT_TRUE(local_fourier_check(f, 5)) << f.name();
}

TEST(HeightZeta, RoutesAgreeOnMoreFans) {
  for (const char* name : {"Hirzebruch(2)", "Bl1P2", "P2"}) {
    const Fan f = preset_fan(name);
    const IVec dmax = expand_dmax(f, {2});
    EXPECT_EQ(zeta_direct_genus0(f, dmax), zeta_fourier_genus0(f, dmax)) << name;
  }
}

TEST(HeightZeta, SupportedOnTheKernel) {
  const Fan f = preset_fan("Hirzebruch(1)");
  const ZetaSeries z = zeta_direct_genus0(f, expand_dmax(f, {3}));
  for (const auto& [d, c] : z.coeffs) EXPECT_TRUE(f.sequence().in_kernel_of_dual(d)) << to_string(d);
}

TEST(HeightZeta, AgreesWithFiniteFieldCounts) {
  const Fan f = preset_fan("P2");
  const ZetaSeries z = zeta_fourier_genus0(f, {2, 2, 2});
  for (const auto& [d, c] : z.coeffs)
    for (int q : {2, 3}) EXPECT_EQ(Rational(count_hom_fq(f, d, q)), specialize_q(c, Int(q))) << to_string(d);
  const Fan pp = preset_fan("P1xP1");
  const IVec d{1, 1, 2, 2};
  EXPECT_EQ(Rational(count_hom_fq(pp, d, 3)), specialize_q(zeta_direct_genus0(pp, d).coeff(d), Int(3)));
}

TEST(HeightZeta, DmaxBroadcast) {
  const Fan f = preset_fan("P2");
  EXPECT_EQ(expand_dmax(f, {4}), IVec({4, 4, 4}));
  EXPECT_THROW(expand_dmax(f, {1, 2}), Error);
}

TEST(HeightZeta, LeadingConstants) {
  const CurveData c = CurveData::projective_line();
  const LL g1 = LL::L() - Lp(-1);
  const LeadingConstant p1 = leading_constant(preset_fan("P1"), c, 10);
  ASSERT_TRUE(p1.exact);
  EXPECT_EQ(*p1.exact, g1);
  // Leading constants multiply over products.
  const LeadingConstant pp = leading_constant(preset_fan("P1xP1"), c, 10);
  ASSERT_TRUE(pp.exact);
  EXPECT_EQ(*pp.exact, g1 * g1);
  const LeadingConstant p2 = leading_constant(preset_fan("P2"), c, 10);
  ASSERT_TRUE(p2.exact);
  EXPECT_EQ(*p2.exact, Lp(2) + LL::L() - Lp(-1) - Lp(-2));
  EXPECT_EQ(p2.truncated.value(), *p2.exact);
}

TEST(HeightZeta, LeadingConstantNumericOracle) {
  for (const char* name : {"P1", "P2", "P1xP1", "Hirzebruch(1)"}) {
    const Fan f = preset_fan(name);
    const LeadingConstant lc = leading_constant(f, CurveData::projective_line(), 12);
    for (long q : {5, 7}) {
      const long double sym = specialize_q_numeric(lc.truncated.value(), (long double)q);
      const long double num = closed_point_product(lc.local_polynomial, long(f.rank()), long(f.pic_rank()), q);
      EXPECT_NEAR(double(sym / num), 1.0, 1e-3) << name << " q=" << q;
    }
  }
}

TEST(HeightZeta, StabilizationOfP1IsExact) {
  const StabilizationReport rep = stabilization_check(preset_fan("P1"), 5, 10);
  EXPECT_TRUE(rep.exact_from_one);
  for (const auto& row : rep.rows)
    if (row.k > 0) EXPECT_TRUE(row.dim.is_minus_infinity());
}

TEST(HeightZeta, StabilizationOfP2Decreases) {
  const StabilizationReport rep = stabilization_check(preset_fan("P2"), 3, 10);
  EXPECT_EQ(rep.direction, IVec({1, 1, 1}));
  EXPECT_TRUE(rep.strictly_decreasing);
}

TEST(HeightZeta, StabilizationDirectionInKernel) {
  for (const Fan& f : standard_presets()) {
    const IVec d = stabilization_direction(f);
    EXPECT_TRUE(f.sequence().in_kernel_of_dual(d)) << f.name();
    for (auto x : d) EXPECT_GT(x, 0);
  }
}
