#include <gtest/gtest.h>

#include "mtz/euler_product.hpp"
#include "mtz/fq_oracle.hpp"
#include "test_util.hpp"

using namespace mtz;

namespace {

GradedMonomial t_pow(int e) { return {{e}, {}}; }

GradedSeries one_var(int trunc, std::initializer_list<std::pair<int, LL>> terms) {
  GradedSeries f(1, 0, trunc);
  for (const auto& [e, c] : terms) f.add_term(t_pow(e), c);
  return f;
}

LL sum_of_powers(long n) {
  LL r;
  for (long i = 0; i <= n; ++i) r.add_term(i, 1);
  return r;
}

}  // namespace

TEST(EulerProduct, KapranovZetaOfP1) {
  // prod over points of 1/(1 - T) is sum_n [Sym^n P^1] T^n = sum_n [P^n] T^n.
  const int trunc = 8;
  GradedSeries geometric(1, 0, trunc);
  for (int e = 0; e <= trunc; ++e) geometric.add_term(t_pow(e), LL(1));
  const GradedSeries z = euler_product_genus0(geometric);
  for (int n = 0; n <= trunc; ++n) EXPECT_EQ(z.coeff(t_pow(n)), sum_of_powers(n)) << n;
}

TEST(EulerProduct, LinearTermCountsPoints) {
  const GradedSeries z = euler_product_genus0(one_var(3, {{0, LL(1)}, {1, LL::L()}}));
  EXPECT_EQ(z.coeff(t_pow(1)), (LL::L() + LL(1)) * LL::L());
}

TEST(EulerProduct, PlethysticRoundTripSeeded) {
  Rng rng(41);
  const std::vector<LL> pool = {LL(1), LL::L(), LL::L() + LL(1), LL::monomial(2) - LL::L()};
  for (int t = 0; t < 40; ++t) {
    const size_t k = size_t(test::uniform(rng, 1, 2));
    GradedSeries f = GradedSeries::one(k, 0, 6);
    for (int j = 0; j < 3; ++j) {
      std::vector<int> e(k);
      for (auto& x : e) x = int(test::uniform(rng, 0, 3));
      if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) continue;
      f.add_term({e, {}}, pool[size_t(test::uniform(rng, 0, 3))]);
    }
    EXPECT_EQ(plethystic_exp(plethystic_log(f)), f);
  }
}

TEST(EulerProduct, SingleLineElement) {
  PlethysticSeries g{1, 0, 5, std::nullopt, {}};
  g.add({2, {}, {1}}, Int(1));
  const GradedSeries pe = plethystic_exp(g);
  for (int e = 0; e <= 5; ++e) EXPECT_EQ(pe.coeff(t_pow(e)), LL::monomial(2 * e)) << e;
}

TEST(EulerProduct, ConfigurationClassesTwoRoutes) {
  const std::vector<std::vector<int>> cases = {{1}, {2}, {1, 1}, {2, 1}, {1, 1, 1}, {3, 1}, {2, 2}, {2, 1, 1}};
  for (const auto& pi : cases) EXPECT_EQ(config_class(pi), config_class_by_expansion(pi));
  // Entry i counts the points carrying label i: {2} is an unordered pair, {1, 1} an ordered one.
  EXPECT_EQ(config_class(std::vector<int>{1}), LL::L() + LL(1));
  EXPECT_EQ(config_class(std::vector<int>{2}), LL::monomial(2));
  EXPECT_EQ(config_class(std::vector<int>{1, 1}), LL::monomial(2) + LL::L());
}

TEST(EulerProduct, TorsorTwist) {
  const LabeledPartition pi = LabeledPartition::from_multiplicities({2, 1});
  EXPECT_EQ(pi.size(), 3);
  EXPECT_EQ(torsor_twist(pi), (LL::L() - LL(1)).pow(3) * config_class(pi));
}

TEST(EulerProduct, SpecializationMatchesPointProduct) {
  const GradedSeries f = one_var(6, {{0, LL(1)}, {1, LL::L()}, {2, LL::monomial(2) - LL::L()}});
  const GradedSeries symbolic = euler_product_genus0(f);
  for (long q : {2, 3, 4}) EXPECT_EQ(specialize_series(symbolic, q), euler_product_specialize(f, q, 6)) << q;
}
