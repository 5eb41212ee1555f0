#include <gtest/gtest.h>

#include "mtz/characters.hpp"
#include "mtz/errors.hpp"
#include "test_util.hpp"

using namespace mtz;

namespace {

CharFunction random_function(Rng& rng, size_t n, int points) {
  CharFunction psi(n);
  for (int p = 0; p < points; ++p) psi.add(test::random_vec(rng, n, -4, 4), test::random_ll(rng, -2, 2, 2));
  return psi;
}

// H = U diag(a) Z^n; x lies in H iff U^-1 x is divisible by a entrywise.
struct ScaledLattice {
  IMat u, u_inv;
  IVec a;
  Sublattice sub() const {
    std::vector<IVec> gens;
    const IMat cols = transpose(u);
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) gens.push_back(a[i] * cols[i]);
    return Sublattice(a.size(), gens);
  }
  bool member(const IVec& x) const {
    const IVec y = matvec(u_inv, x);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0 && y[i] != 0) return false;
      if (a[i] != 0 && y[i] % a[i] != 0) return false;
    }
    return true;
  }
};

ScaledLattice random_scaled(Rng& rng, size_t n) {
  ScaledLattice s;
  s.u = random_unimodular(n, rng, 4);
  s.u_inv = unimodular_inverse(s.u);
  s.a = test::random_vec(rng, n, 0, 3);
  return s;
}

}  // namespace

TEST(Characters, FourierOfDeltaIsEvaluationMonomial) {
  CharFunction delta(2);
  delta.add({3, -1}, LL::L());
  EXPECT_EQ(fourier(delta), CharSum::ev({3, -1}, LL::L()));
}

TEST(Characters, InversionRecoversValuesSeeded) {
  Rng rng(101);
  for (int t = 0; t < 100; ++t) {
    const size_t n = size_t(test::uniform(rng, 1, 3));
    const CharFunction psi = random_function(rng, n, 4);
    const CharSum s = fourier(psi);
    for (const auto& [m, v] : psi.support()) EXPECT_EQ(fourier_invert(s, m), v);
    const IVec probe = test::random_vec(rng, n, -6, 6);
    EXPECT_EQ(fourier_invert(s, probe), psi.value(probe));
  }
}

TEST(Characters, PoissonAgainstExplicitMembership) {
  Rng rng(202);
  for (int t = 0; t < 150; ++t) {
    const size_t n = size_t(test::uniform(rng, 1, 3));
    const CharFunction psi = random_function(rng, n, 5);
    const ScaledLattice h = random_scaled(rng, n);
    const IVec g = test::random_vec(rng, n, -3, 3);
    LL expect;
    for (const auto& [x, v] : psi.support())
      if (h.member(x - g)) expect += v;
    const auto [left, right] = poisson_both_sides(psi, h.sub(), g);
    EXPECT_EQ(left, expect);
    EXPECT_EQ(right, expect);
  }
}

TEST(Characters, ProductIsConvolutionOfExponents) {
  const CharSum a = CharSum::ev({1, 0}, LL(2)) + CharSum::ev({0, 1});
  const CharSum b = CharSum::ev({-1, 0}, LL::L());
  const CharSum p = a * b;
  EXPECT_EQ(p.coeff({0, 0}), LL::L() * LL(2));
  EXPECT_EQ(p.coeff({-1, 1}), LL::L());
  EXPECT_EQ(p.dim().value(), 1);
}

TEST(Characters, ReductionModuloTorsion) {
  const CharSum s = CharSum::ev({3}) + CharSum::ev({1}) + CharSum::ev({2}, LL(5));
  const CharSum r = s.reduced_modulo(Sublattice(1, {{2}}));
  EXPECT_EQ(r.coeff({1}), LL(2));
  EXPECT_EQ(r.coeff({0}), LL(5));
}

TEST(Characters, PartialIntegration) {
  // M' = span(e1), M'' = span(e2); integrating over N = 0 keeps the terms with e1-coordinate 0.
  const LatticeSplit split({{1, 0}}, {{0, 1}});
  const CharSum s = CharSum::ev({0, 2}, LL(3)) + CharSum::ev({1, 2}) + CharSum::ev({0, -1}, LL::L());
  const CharSum r = partial_integrate(s, split, Sublattice::zero(1));
  EXPECT_EQ(r.coeff({2}), LL(3));
  EXPECT_EQ(r.coeff({-1}), LL::L());
  EXPECT_EQ(r.terms().size(), 2u);
}

TEST(Characters, NonComplementarySplitRejected) {
  try {
    LatticeSplit bad({{2, 0}}, {{0, 1}});
    FAIL() << "expected NonComplementaryBasis";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonComplementaryBasis);
  }
}
