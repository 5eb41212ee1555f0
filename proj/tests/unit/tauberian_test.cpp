#include <gtest/gtest.h>

#include "mtz/tauberian.hpp"
#include "test_util.hpp"

using namespace mtz;

TEST(Tauberian, TransferOfConstant) {
  // a = 1 at 0: b_d = L^{rho d}, so b_d L^{-rho d} - F(L^-rho) vanishes.
  const MultiSeries b = tauberian_transfer({{{0}, LL(1)}}, {2}, {4});
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(b.at({d}), LL::monomial(2 * d));
  const TauberianReport rep = tauberian_check({{{0}, LL(1)}}, {2}, 5, 10);
  for (const auto& row : rep.rows) EXPECT_TRUE(row.dim.is_minus_infinity());
}

TEST(Tauberian, CancellingNumerator) {
  // (1 - L T) / (1 - L T) = 1: b_0 = 1 and every later coefficient vanishes.
  const MultiSeries b = tauberian_transfer({{{0}, LL(1)}, {{1}, -LL::L()}}, {1}, {3});
  EXPECT_EQ(b.at({0}), LL(1));
  for (int d = 1; d <= 3; ++d) {
    const auto it = b.find({d});
    EXPECT_TRUE(it == b.end() || it->second.is_zero()) << d;
  }
}

TEST(Tauberian, EvaluationAtLinvRho) {
  // 1 + L T^2 at T = L^-1 is 1 + L^-1.
  const MultiSeries a = {{{0}, LL(1)}, {{2}, LL::L()}};
  EXPECT_EQ(evaluate_at_Linv_rho(a, {1}, 6).value(), LL(1) + LL::monomial(-1));
}

TEST(Tauberian, ShippedExamplesDecay) {
  for (const auto& ex : shipped_tauberian_examples(30)) {
    const TauberianReport rep = tauberian_check(ex.a, ex.rho, 8, 20);
    ASSERT_TRUE(rep.eta) << ex.name;
    EXPECT_GT(*rep.eta, 0) << ex.name;
    EXPECT_TRUE(rep.monotone) << ex.name;
  }
}

TEST(Tauberian, GeometricTailHasRateOne) {
  // a_j = L^j at T^{2j}, rho = 1: the tail after d has dimension about -d/2.
  const auto ex = shipped_tauberian_examples(30)[1];
  const TauberianReport rep = tauberian_check(ex.a, ex.rho, 8, 20);
  for (const auto& row : rep.rows) {
    ASSERT_FALSE(row.dim.is_minus_infinity());
    EXPECT_LE(row.dim.value(), -(row.min_rho_d / 2));
  }
}
