#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtz/lefschetz.hpp"

namespace mtz {

// T^t z^z. Ordered by t, then z, lexicographically.
struct GradedMonomial {
  std::vector<int> t;
  std::vector<long> z;

  int total_degree() const;
  GradedMonomial operator*(const GradedMonomial& o) const;
  friend auto operator<=>(const GradedMonomial&, const GradedMonomial&) = default;
};

// A monomial L^j z^m T^e viewed as a line element (psi_k raises it to the k-th power).
struct LineMonomial {
  long j = 0;
  std::vector<long> z;
  std::vector<int> t;
  friend auto operator<=>(const LineMonomial&, const LineMonomial&) = default;
};

// Truncated series in T_1..T_k and z^m (m in Z^n) over Z[L, L^-1].
// Terms with total T-degree > trunc, or exceeding the optional per-variable box, are dropped.
class GradedSeries {
 public:
  using Terms = std::map<GradedMonomial, LL>;

  GradedSeries(size_t num_t, size_t num_z, int trunc, std::optional<std::vector<int>> box = std::nullopt);
  static GradedSeries one(size_t num_t, size_t num_z, int trunc,
                          std::optional<std::vector<int>> box = std::nullopt);

  size_t num_t() const { return num_t_; }
  size_t num_z() const { return num_z_; }
  int trunc() const { return trunc_; }
  const std::optional<std::vector<int>>& box() const { return box_; }
  const std::vector<std::string>& t_vars() const { return t_vars_; }
  void set_t_vars(std::vector<std::string> names);

  bool admits(const GradedMonomial& m) const;
  bool admits_t(const std::vector<int>& t) const;
  GradedSeries empty_like() const;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LL coeff(const GradedMonomial& m) const;
  LL constant_term() const;
  void add_term(const GradedMonomial& m, const LL& c);

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  GradedSeries scaled(const LL& c) const;
  friend bool operator==(const GradedSeries& a, const GradedSeries& b) { return a.terms_ == b.terms_; }

  // In place: this /= (1 - mu)^k for k >= 0 (forward passes).
  void divide_one_minus(const LineMonomial& mu, unsigned k = 1);
  // In place: this *= (1 - mu)^k.
  void multiply_one_minus(const LineMonomial& mu, unsigned k = 1);
  // this *= (1 - mu)^{-c}; c may be negative.
  void apply_factor(const LineMonomial& mu, const Int& c);

  // Terms with z = 0, z-rank kept.
  GradedSeries z_zero_part() const;
  // Forget z (set every character marker to 1).
  GradedSeries z_to_one() const;
  // Re-truncate to a smaller bound / box.
  GradedSeries retruncated(int trunc, std::optional<std::vector<int>> box = std::nullopt) const;

  std::string to_string() const;

 private:
  size_t num_t_, num_z_;
  int trunc_;
  std::optional<std::vector<int>> box_;
  std::vector<std::string> t_vars_;
  Terms terms_;
};

}  // namespace mtz
