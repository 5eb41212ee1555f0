#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtz/lattice.hpp"
#include "mtz/lefschetz.hpp"

namespace mtz {

using Cone = std::vector<size_t>;  // sorted ray indices

// Sparse polynomial over Z in variables X_1..X_k.
struct ZPoly {
  std::map<std::vector<int>, Int> terms;
  size_t nvars = 0;

  void add(const std::vector<int>& exps, const Int& c);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly&, const ZPoly&) = default;
  int min_nonconstant_degree() const;  // 0 if no nonconstant terms
  LL evaluate_all_at(const LL& x) const;
  std::string to_string(const std::string& var = "X") const;
};

struct RawFan {
  std::string name;
  size_t rank = 0;
  std::vector<IVec> rays;
  std::vector<Cone> max_cones;
};

struct ToricSequence {
  IMat gamma;  // |Sigma(1)| x n; row alpha is rho_alpha, so gamma(m)_alpha = <m, rho_alpha>
  size_t pic_rank = 0;

  IVec apply_gamma(const IVec& m) const;
  IVec apply_gamma_dual(const IVec& d) const;  // sum_alpha d_alpha rho_alpha
  bool in_kernel_of_dual(const IVec& d) const { return is_zero(apply_gamma_dual(d)); }
};

class Fan {
 public:
  const std::string& name() const { return name_; }
  size_t rank() const { return rank_; }
  size_t num_rays() const { return rays_.size(); }
  size_t pic_rank() const { return rays_.size() - rank_; }
  const std::vector<IVec>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  // Every cone of the fan, zero cone first, sorted by size then lexicographically.
  const std::vector<Cone>& faces() const { return faces_; }
  const ToricSequence& sequence() const { return seq_; }
  RawFan raw() const { return {name_, rank_, rays_, max_cones_}; }

  // Inverse of the column matrix of max_cones()[i].
  const IMat& cone_inverse(size_t i) const { return inverses_[i]; }

 private:
  friend Fan validate_fan(const RawFan& raw);
  std::string name_;
  size_t rank_ = 0;
  std::vector<IVec> rays_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> faces_;
  std::vector<IMat> inverses_;
  ToricSequence seq_;
};

Fan validate_fan(const RawFan& raw);

struct ConeDecomposition {
  Cone cone;                       // rays with positive coefficient
  std::vector<long long> coeffs;   // aligned with cone
  // Full-length vector indexed by Sigma(1).
  IVec ray_degrees(size_t num_rays) const;
};

ConeDecomposition cone_decompose(const Fan& fan, const IVec& m);
IVec recompose(const Fan& fan, const ConeDecomposition& c);

ZPoly q_sigma(const Fan& fan);
LL class_of_X(const Fan& fan);
// Q_Sigma(L^-1, ..., L^-1), checked against (1 - L^-1)^r [X] L^-n.
LL q_sigma_at_Linv(const Fan& fan);
long long anticanonical_degree(const IVec& d);

Fan product_fan(const Fan& a, const Fan& b);

}  // namespace mtz
