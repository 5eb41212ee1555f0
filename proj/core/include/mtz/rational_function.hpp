#pragma once

#include <vector>

#include "mtz/lefschetz.hpp"

namespace mtz {

// Dense univariate polynomial over Z, lowest degree first, trailing zeros trimmed.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c);
  static IntPoly monomial(size_t e, const Int& c = 1);
  static IntPoly one_minus_t_pow(size_t a);  // 1 - T^a

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return long(c_.size()) - 1; }
  Int coeff(size_t e) const { return e < c_.size() ? c_[e] : Int(0); }
  Int eval_at_one() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  IntPoly pow(unsigned n) const;
  // Quotient when `d` divides exactly (leading coefficient +-1 assumed for d); throws otherwise.
  IntPoly divide_exact(const IntPoly& d) const;

 private:
  void trim();
  std::vector<Int> c_;
};

// numerator(T) / prod_i (1 - T^{den_i}), with den_i > 0.
struct RationalTerm {
  IntPoly numerator;
  std::vector<long> denominators;

  // Power series coefficients of degree 0..level.
  std::vector<Int> expand(long level) const;
  // ((1 - T^a)^k * this)(1); every den_i must divide a and |den| <= k.
  Int special_value(long a, unsigned k) const;
};

std::vector<Int> expand_sum(const std::vector<RationalTerm>& terms, long level);

}  // namespace mtz
