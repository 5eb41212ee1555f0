#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mtz/curve.hpp"
#include "mtz/graded_series.hpp"
#include "mtz/lattice.hpp"

namespace mtz {

// g = sum mult * L^j z^m T^e, read as a sum of line elements.
struct PlethysticSeries {
  size_t num_t = 0, num_z = 0;
  int trunc = 0;
  std::optional<std::vector<int>> box;
  std::map<LineMonomial, Int> terms;

  void add(const LineMonomial& mu, const Int& c);
  friend bool operator==(const PlethysticSeries&, const PlethysticSeries&) = default;
};

// prod (1 - L^j z^m T^e)^{-mult}
GradedSeries plethystic_exp(const PlethysticSeries& g);
// Inverse of plethystic_exp; f must have constant term 1.
PlethysticSeries plethystic_log(const GradedSeries& f);
// prod over the points of a genus-0 curve of the constant local factor f: PE[(1 + L) PL[f]].
GradedSeries euler_product_genus0(const GradedSeries& f, const CurveData& curve = CurveData::projective_line());

// Multiplicities n_i > 0 indexed by labels (lattice points, or 1-vectors for abstract indices).
struct LabeledPartition {
  std::map<IVec, int> mult;

  static LabeledPartition from_multiplicities(const std::vector<int>& n);
  int size() const;
  std::vector<int> multiplicities() const;  // sorted descending
};

// Class of Sym^pi(C)_*: configurations of distinct points on C labelled with multiplicities pi.
LL config_class(const LabeledPartition& pi, const CurveData& curve = CurveData::projective_line());
LL config_class(const std::vector<int>& multiplicities, const CurveData& curve = CurveData::projective_line());
// (L - 1)^{|pi|} config_class(pi)
LL torsor_twist(const LabeledPartition& pi, const CurveData& curve = CurveData::projective_line());

// The same class read off euler_product_genus0(1 + sum_i u_i) by series expansion.
LL config_class_by_expansion(const std::vector<int>& multiplicities);

}  // namespace mtz
