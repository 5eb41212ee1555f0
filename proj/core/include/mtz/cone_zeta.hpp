#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtz/fan.hpp"
#include "mtz/graded_series.hpp"
#include "mtz/lattice.hpp"
#include "mtz/rational_function.hpp"

namespace mtz {

struct RawConeFan {
  std::string name;
  size_t rank = 0;
  std::vector<IVec> rays;
  std::vector<Cone> max_cones;
  // Generators of the support cone; defaults to the cone over all rays.
  std::vector<IVec> support_generators;
};

// Regular fan whose support is a (not necessarily full-dimensional) cone in Z^n.
class ConeFan {
 public:
  const std::string& name() const { return name_; }
  size_t rank() const { return rank_; }
  size_t dim() const { return dim_; }
  const std::vector<IVec>& rays() const { return rays_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  const std::vector<Cone>& faces() const { return faces_; }
  const std::vector<IVec>& support_generators() const { return support_; }
  RawConeFan raw() const { return {name_, rank_, rays_, max_cones_, support_}; }

  bool in_support(const IVec& y) const;
  // The cone whose relative interior contains y with its (positive) coordinates, if y is in the support.
  std::optional<std::pair<Cone, std::vector<long long>>> locate(const IVec& y) const;

 private:
  friend ConeFan validate_cone_fan(const RawConeFan& raw, long sample_radius);
  std::string name_;
  size_t rank_ = 0, dim_ = 0;
  std::vector<IVec> rays_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> faces_;
  std::vector<IVec> support_;
};

// Primitive rays, unimodular pure cones, rays inside the support, and on every lattice point of
// the box [-R, R]^n: membership in the support iff it lies in exactly one relatively open cone.
ConeFan validate_cone_fan(const RawConeFan& raw, long sample_radius = 4);

bool in_cone(const std::vector<IVec>& gens, const IVec& y);

struct LSeriesRational {
  // One entry per cone of the fan (zero cone included): the exponents <lambda0, rho> of its rays.
  std::vector<std::vector<long>> summands;
  size_t dim = 0;

  std::vector<RationalTerm> terms() const;
  std::vector<Int> expand(long level) const;
};

struct ResidueData {
  long a = 1;
  Rational chi;
  size_t rank = 0;
  Int special_value;  // ((1 - T^a)^rank L)(1)
};

LSeriesRational l_series_direction(const ConeFan& cf, const IVec& lambda0);
Rational chi_value(const ConeFan& cf, const IVec& lambda0);
ResidueData residue_check(const ConeFan& cf, const IVec& lambda0);
// Number of lattice points of the support at each level <lambda0, y> <= level, by box enumeration.
std::vector<Int> brute_force_levels(const ConeFan& cf, const IVec& lambda0, long level);

// 0 -> M --i--> N --j--> Gamma -> 0; i is n x k (columns image a basis of M), j is g x n.
struct ExactSequence {
  IMat i;
  IMat j;
  size_t rank_m() const { return i.empty() ? 0 : i[0].size(); }
  size_t rank_n() const { return i.size(); }
  void validate() const;  // throws InexactSequence
};

struct CharRestrictReport {
  std::vector<Int> left, right;  // per level
  bool pointwise_equal = true;
  bool ok() const { return pointwise_equal && left == right; }
};
CharRestrictReport char_restrict_check(const ExactSequence& seq, const ConeFan& cf, const IVec& lambda, long level);

struct ShiftedConeReport {
  bool identity = true;
  bool cardinality_bound = true;
  bool degree_bound = true;
  long max_finite_part = 0;
  bool ok() const { return identity && cardinality_bound && degree_bound; }
};
// Lambda is the positive orthant; cf must be supported inside it.
ShiftedConeReport shifted_cone_check(const ConeFan& cf, const IVec& z, long level);

// delta^K(K, z): points sum_{l in delta \ delta(1)_K} c_l rho_l, c_l >= 1, with y_i < z_i for i in K.
std::vector<IVec> finite_part(const ConeFan& cf, const Cone& delta, const std::vector<size_t>& k, const IVec& z);

struct ConvolutionResult {
  GradedSeries series;               // f_1 by enumeration, total degree <= trunc
  std::vector<LL> coeffs;            // aligned with terms
  std::vector<RationalTerm> terms;   // f_1(T^lambda0) = sum coeffs[i] * terms[i]
  ResidueData residue;               // for the cone Lambda cap M_R in direction lambda0
  LL via_decomposition;              // ((1 - T^a)^{rk M} f_1(T^lambda0))(1) from the exact terms
  LL via_chi;                        // a^{rk M} (sum a(y)) chi
  bool agree() const { return via_decomposition == via_chi; }
};

// Regular fan on Lambda cap i(M_R) for rk M <= 2, in N-coordinates.
ConeFan restricted_cone_fan(const ExactSequence& seq);

ConvolutionResult convolution_f1(const std::map<IVec, LL>& a, const ExactSequence& seq,
                                 const std::optional<ConeFan>& cf, const IVec& lambda0, int trunc);

// Fans shipped with the library: "quadrant", "subdivided" (rays (1,0),(1,1),(1,2)), "ray".
ConeFan preset_cone_fan(const std::string& name);

}  // namespace mtz
