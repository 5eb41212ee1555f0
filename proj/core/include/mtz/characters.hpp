#pragma once

#include <map>
#include <utility>

#include "mtz/lattice.hpp"
#include "mtz/lefschetz.hpp"

namespace mtz {

using PointMap = std::map<IVec, LL>;

// Finitely supported function Z^n -> Z[L, L^-1].
class CharFunction {
 public:
  explicit CharFunction(size_t rank) : rank_(rank) {}
  size_t rank() const { return rank_; }
  const PointMap& support() const { return support_; }
  void add(const IVec& m, const LL& v);
  LL value(const IVec& m) const;
  // x -> psi(x - a)
  CharFunction translated(const IVec& a) const;
  friend bool operator==(const CharFunction&, const CharFunction&) = default;

 private:
  size_t rank_;
  PointMap support_;
};

// sum_m c_m ev(m, .), in the evaluation-monomial basis.
class CharSum {
 public:
  explicit CharSum(size_t rank) : rank_(rank) {}
  static CharSum ev(const IVec& m, const LL& c = LL(1));

  size_t rank() const { return rank_; }
  const PointMap& terms() const { return terms_; }
  LL coeff(const IVec& m) const;
  void add(const IVec& m, const LL& c);

  CharSum& operator+=(const CharSum& o);
  friend CharSum operator+(CharSum a, const CharSum& b) { return a += b; }
  friend CharSum operator*(const CharSum& a, const CharSum& b);
  friend bool operator==(const CharSum&, const CharSum&) = default;

  // Character part ignored: max over coefficients.
  VirtualDim dim() const;
  // Exponents reduced modulo a relation lattice (torsion quotient Z^n / R).
  CharSum reduced_modulo(const Sublattice& relations) const;

 private:
  size_t rank_;
  PointMap terms_;
};

// M = M' (+) M'' presented by complementary bases; rows are basis vectors of Z^n.
class LatticeSplit {
 public:
  LatticeSplit(const std::vector<IVec>& prime_basis, const std::vector<IVec>& second_basis);
  size_t prime_rank() const { return k_; }
  size_t second_rank() const { return n_ - k_; }
  // Coordinates of m in the combined basis: first k entries in M', rest in M''.
  IVec coordinates(const IVec& m) const;

 private:
  size_t n_, k_;
  IMat inv_;  // inverse of the column matrix [prime | second]
};

CharSum fourier(const CharFunction& psi);
LL integrate_dual(const CharSum& s, const Sublattice& n);
// N is a sublattice of M' in M'-coordinates; result lives on M'' in M''-coordinates.
CharSum partial_integrate(const CharSum& s, const LatticeSplit& split, const Sublattice& n);
LL fourier_invert(const CharSum& s, const IVec& x);
// (sum_{h in H} psi(g + h),  integrate_dual(fourier(psi) ev(-g), H))
std::pair<LL, LL> poisson_both_sides(const CharFunction& psi, const Sublattice& h, const IVec& g);

}  // namespace mtz
