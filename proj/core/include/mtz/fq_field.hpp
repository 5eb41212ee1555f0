#pragma once

#include <vector>

namespace mtz {

// Finite field F_q, q = p^k <= 256, elements encoded as 0..q-1 (base-p digits of a polynomial
// over F_p modulo a fixed irreducible). Arithmetic through full tables.
class FqField {
 public:
  explicit FqField(int q);
  int q() const { return q_; }
  int p() const { return p_; }
  int add(int a, int b) const { return add_[size_t(a * q_ + b)]; }
  int sub(int a, int b) const { return add(a, neg_[size_t(b)]); }
  int mul(int a, int b) const { return mul_[size_t(a * q_ + b)]; }
  int neg(int a) const { return neg_[size_t(a)]; }
  int inv(int a) const;  // a != 0

 private:
  int q_, p_, k_;
  std::vector<int> add_, mul_, neg_, inv_;
};

// Polynomials over F_q, lowest degree first, no trailing zeros (zero polynomial is empty).
using FqPoly = std::vector<int>;

void fq_trim(FqPoly& f);
FqPoly fq_mul(const FqField& F, const FqPoly& a, const FqPoly& b);
// Remainder of a modulo a monic b.
FqPoly fq_mod(const FqField& F, FqPoly a, const FqPoly& b);
// All monic irreducible polynomials of degree e, in lexicographic coefficient order.
std::vector<FqPoly> monic_irreducibles(const FqField& F, int e);

}  // namespace mtz
