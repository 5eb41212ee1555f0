#include <gtest/gtest.h>

#include "mtz/errors.hpp"
#include "mtz/fq_field.hpp"
#include "mtz/fq_oracle.hpp"
#include "mtz/presets.hpp"

using namespace mtz;

TEST(FqOracle, NecklaceCountsOfP1) {
  // q + 1 points of degree 1, (q^2 - q)/2 of degree 2, (q^3 - q)/3 of degree 3.
  const auto n = closed_point_counts(3, 3);
  EXPECT_EQ(n[1], 4);
  EXPECT_EQ(n[2], 3);
  EXPECT_EQ(n[3], 8);
}

TEST(FqOracle, WeilNumeratorOfP1IsTrivial) {
  EXPECT_EQ(closed_point_counts(4, 6, {Int(1)}), closed_point_counts(4, 6));
}

TEST(FqOracle, WeilNumeratorOfEllipticCurve) {
  // y^2 = x^3 + x + 1 over F_5 has 9 points: a = q + 1 - 9 = -3, P(T) = 1 + 3T + 5T^2.
  const auto n = closed_point_counts(5, 2, {Int(1), Int(3), Int(5)});
  EXPECT_EQ(n[1], 9);
  // #E(F_25) = 25 + 1 - (alpha^2 + beta^2) with alpha + beta = -3, alpha beta = 5: 25 + 1 - (9 - 10) = 27.
  EXPECT_EQ(n[2], (27 - 9) / 2);
}

TEST(FqOracle, FieldArithmetic) {
  for (int q : {2, 3, 4, 8, 9}) {
    const FqField f(q);
    for (int a = 1; a < q; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1) << q;
    for (int a = 0; a < q; ++a) EXPECT_EQ(f.add(a, f.neg(a)), 0) << q;
  }
}

TEST(FqOracle, IrreducibleCountsMatchNecklaces) {
  for (int q : {2, 3, 4}) {
    const FqField f(q);
    const auto n = closed_point_counts(q, 3);
    // Closed points of the affine line of degree e are the monic irreducibles of degree e.
    EXPECT_EQ(Int(monic_irreducibles(f, 1).size()), n[1] - 1);
    for (int e = 2; e <= 3; ++e) EXPECT_EQ(Int(monic_irreducibles(f, e).size()), n[size_t(e)]);
  }
}

TEST(FqOracle, CountsOfMapsToP1) {
  const Fan p1 = preset_fan("P1");
  for (long q : {2, 3})
    for (long d = 1; d <= 3; ++d)
      EXPECT_EQ(count_hom_fq(p1, {d, d}, int(q)), count_rational_maps_closed_form(d, q)) << d << " " << q;
  EXPECT_EQ(count_hom_fq(p1, {0, 0}, 3), 2);
  EXPECT_EQ(count_hom_fq(p1, {2, 1}, 2), 0);
}

TEST(FqOracle, BudgetIsEnforced) {
  try {
    count_hom_fq(preset_fan("P2"), {3, 3, 3}, 3, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
  }
}

TEST(FqOracle, ClosedPointProductOfP1) {
  // E(u) = 1 - u^2; the product over points is 1/Z(q^-2) = (1 - q^-1)(1 - q^-2), leaving q - 1/q.
  const long double v = closed_point_product({Int(1), Int(0), Int(-1)}, 1, 1, 5);
  EXPECT_NEAR(double(v), 5.0 - 0.2, 1e-9);
}
