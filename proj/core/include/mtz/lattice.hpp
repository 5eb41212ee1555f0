#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtz/lefschetz.hpp"

namespace mtz {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>;  // row-major

IVec operator+(const IVec& a, const IVec& b);
IVec operator-(const IVec& a, const IVec& b);
IVec operator*(long long k, const IVec& a);
long long dot(const IVec& a, const IVec& b);
long long gcd_of(const IVec& v);
bool is_zero(const IVec& v);
std::string to_string(const IVec& v);

IMat transpose(const IMat& a);
IMat matmul(const IMat& a, const IMat& b);
IVec matvec(const IMat& a, const IVec& v);
IMat identity(size_t n);
Int determinant(const IMat& a);
size_t matrix_rank(const IMat& a);
// Exact inverse of a square matrix with det = +-1.
IMat unimodular_inverse(const IMat& a);
// Unique rational solution x of A x = b for square nonsingular A.
std::vector<Rational> solve_rational(const IMat& a, const IVec& b);
// gcd of all k x k minors of a k x n (k <= n) matrix; 0 if rank-deficient.
Int gcd_maximal_minors(const IMat& a);
// Integer basis (as rows) of {x : A x = 0}.
IMat integer_kernel(const IMat& a);

// Subgroup of Z^n generated by a finite set; canonical Hermite form kept as rows.
class Sublattice {
 public:
  Sublattice(size_t ambient_rank, const std::vector<IVec>& generators);
  static Sublattice zero(size_t n) { return Sublattice(n, {}); }
  static Sublattice full(size_t n);

  size_t ambient_rank() const { return n_; }
  size_t rank() const { return hnf_.size(); }
  const IMat& hermite_rows() const { return hnf_; }
  const std::vector<IVec>& generators() const { return gens_; }

  bool contains(const IVec& v) const;
  // Canonical representative of v modulo this sublattice.
  IVec reduce(const IVec& v) const;
  // Index in Z^n when of full rank, else nullopt.
  std::optional<Int> index() const;

 private:
  size_t n_;
  std::vector<IVec> gens_;
  IMat hnf_;
  std::vector<size_t> pivots_;
};

}  // namespace mtz
