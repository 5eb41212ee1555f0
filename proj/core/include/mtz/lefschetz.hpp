#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mtz {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Top L-exponent of a class; the zero class sits below every integer.
class VirtualDim {
 public:
  static VirtualDim minus_infinity() { return VirtualDim(); }
  static VirtualDim of(long v) { return VirtualDim(v); }

  bool is_minus_infinity() const { return !v_.has_value(); }
  long value() const;

  friend bool operator==(const VirtualDim&, const VirtualDim&) = default;
  friend std::strong_ordering operator<=>(const VirtualDim& a, const VirtualDim& b);

  std::string to_string() const;

 private:
  VirtualDim() = default;
  explicit VirtualDim(long v) : v_(v) {}
  std::optional<long> v_;
};

// Element of Z[L, L^-1]. Stored sparsely; zero coefficients never kept.
class LefschetzLaurent {
 public:
  using Terms = std::map<long, Int>;

  LefschetzLaurent() = default;
  LefschetzLaurent(long c) { add_term(0, Int(c)); }  // NOLINT: integers embed
  LefschetzLaurent(const Int& c) { add_term(0, c); }  // NOLINT

  static LefschetzLaurent L() { return monomial(1); }
  static LefschetzLaurent monomial(long exp, const Int& c = 1);
  static LefschetzLaurent from_terms(const Terms& t);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(long exp) const;
  long top_exponent() const;     // requires nonzero
  long bottom_exponent() const;  // requires nonzero

  void add_term(long exp, const Int& c);

  LefschetzLaurent& operator+=(const LefschetzLaurent& o);
  LefschetzLaurent& operator-=(const LefschetzLaurent& o);
  LefschetzLaurent& operator*=(const LefschetzLaurent& o);
  friend LefschetzLaurent operator+(LefschetzLaurent a, const LefschetzLaurent& b) { return a += b; }
  friend LefschetzLaurent operator-(LefschetzLaurent a, const LefschetzLaurent& b) { return a -= b; }
  friend LefschetzLaurent operator*(const LefschetzLaurent& a, const LefschetzLaurent& b);
  LefschetzLaurent operator-() const;
  friend bool operator==(const LefschetzLaurent&, const LefschetzLaurent&) = default;

  LefschetzLaurent shifted(long k) const;  // times L^k
  LefschetzLaurent pow(unsigned n) const;
  // Drop every term with exponent < -precision.
  LefschetzLaurent truncated_below(long precision) const;

  // Exact quotient if `d` divides this in Z[L^{+-1}], else nullopt.
  std::optional<LefschetzLaurent> divide_exact(const LefschetzLaurent& d) const;

  // "L^3 - L", "0", "2*L^-1 + 1".
  std::string to_string() const;

 private:
  Terms terms_;
};

using LL = LefschetzLaurent;

VirtualDim virtual_dim(const LL& a);
Rational specialize_q(const LL& a, const Int& q);
long double specialize_q_numeric(const LL& a, long double q);

// Finite-prefix estimate of limsup dim(A_i)/i, A indexed from i = 1.
// nullopt encodes -infinity (every coefficient zero).
std::optional<Rational> radius_estimate(const std::vector<LL>& prefix);

std::string rational_to_string(const Rational& r);

}  // namespace mtz
