#include <gtest/gtest.h>

#include "mtz/completion.hpp"
#include "mtz/errors.hpp"
#include "test_util.hpp"

using namespace mtz;

TEST(Lefschetz, Printing) {
  const LL a = LL::monomial(3) - LL::L();
  EXPECT_EQ(a.to_string(), "L^3 - L");
  EXPECT_EQ(LL().to_string(), "0");
  EXPECT_EQ((LL(1) - LL::monomial(-2, 2)).to_string(), "1 - 2*L^-2");
}

TEST(Lefschetz, VirtualDimension) {
  EXPECT_TRUE(virtual_dim(LL()).is_minus_infinity());
  EXPECT_EQ(virtual_dim(LL::monomial(4) - LL(7)).value(), 4);
  EXPECT_LT(VirtualDim::minus_infinity(), VirtualDim::of(-1000));
}

TEST(Lefschetz, RingAxiomsSeeded) {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const LL a = test::random_ll(rng), b = test::random_ll(rng), c = test::random_ll(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, LL());
    EXPECT_EQ(a.shifted(2), a * LL::monomial(2));
  }
}

TEST(Lefschetz, DimensionIsAdditiveOnProducts) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const LL a = test::random_ll(rng), b = test::random_ll(rng);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(virtual_dim(a * b).value(), virtual_dim(a).value() + virtual_dim(b).value());
  }
}

TEST(Lefschetz, SpecializationIsARingMap) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const LL a = test::random_ll(rng), b = test::random_ll(rng);
    for (long q : {2, 3, 7}) {
      EXPECT_EQ(specialize_q(a * b, Int(q)), specialize_q(a, Int(q)) * specialize_q(b, Int(q)));
      EXPECT_EQ(specialize_q(a + b, Int(q)), specialize_q(a, Int(q)) + specialize_q(b, Int(q)));
    }
  }
  EXPECT_EQ(specialize_q(LL::monomial(-2), Int(3)), Rational(1, 9));
}

TEST(Lefschetz, ExactDivision) {
  const LL l1 = LL::L() - LL(1);
  const LL p = (LL::monomial(3) + LL(2)) * l1;
  ASSERT_TRUE(p.divide_exact(l1));
  EXPECT_EQ(*p.divide_exact(l1), LL::monomial(3) + LL(2));
  EXPECT_FALSE((LL::monomial(2) + LL(1)).divide_exact(l1));
}

TEST(Lefschetz, RadiusEstimate) {
  std::vector<LL> prefix;
  for (long i = 1; i <= 6; ++i) prefix.push_back(LL::monomial(2 * i) + LL(1));
  ASSERT_TRUE(radius_estimate(prefix));
  EXPECT_EQ(*radius_estimate(prefix), Rational(2));
  EXPECT_FALSE(radius_estimate({LL(), LL()}));
}

TEST(Completion, GeometricInverseTimesFactorIsOne) {
  for (long k : {1, 2, 3}) {
    const CompletionElement g = CompletionElement::geometric_inverse(k, 12);
    const CompletionElement f(LL(1) - LL::monomial(-k), 12);
    EXPECT_EQ((g * f).value(), LL(1));
  }
}

TEST(Completion, TruncationDropsDeepTerms) {
  const CompletionElement a(LL::L() + LL::monomial(-5) + LL::monomial(-9), 6);
  EXPECT_EQ(a.value(), LL::L() + LL::monomial(-5));
  EXPECT_EQ(a.dim().value(), 1);
}

TEST(Completion, MixedPrecisionRejected) {
  const CompletionElement a(LL(1), 4), b(LL(1), 5);
  try {
    (void)(a + b);
    FAIL() << "expected MixedPrecision";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedPrecision);
  }
}
