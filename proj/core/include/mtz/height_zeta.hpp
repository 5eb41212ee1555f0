#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtz/completion.hpp"
#include "mtz/curve.hpp"
#include "mtz/fan.hpp"
#include "mtz/graded_series.hpp"

namespace mtz {

// Coefficients of the height zeta function, indexed by ray-degree vectors d <= dmax.
struct ZetaSeries {
  std::string fan;
  IVec dmax;
  std::map<IVec, LL> coeffs;  // nonzero entries only
  LL coeff(const IVec& d) const;
  friend bool operator==(const ZetaSeries&, const ZetaSeries&) = default;
};

// Broadcast a one-entry bound to every ray; otherwise the length must be |Sigma(1)|.
IVec expand_dmax(const Fan& fan, const IVec& dmax);

// 1 + sum over nonzero m of z^m T^{n(m)}, T-degree <= trunc; T-variables are the rays, z has rank n.
GradedSeries local_height_factor(const Fan& fan, int trunc);
// Q_Sigma(X) / prod (1 - X_alpha) with X_alpha = z^{rho_alpha} T_alpha.
GradedSeries local_fourier_side(const Fan& fan, int trunc);
bool local_fourier_check(const Fan& fan, int trunc);

// Sum over degree-zero labelled partitions of (L - 1)^n [Sym^pi(C)_*].
ZetaSeries zeta_direct_genus0(const Fan& fan, const IVec& dmax);
// (L - 1)^n times the z-degree-0 part of prod_alpha EP(1/(1 - X_alpha)) EP(Q_Sigma(X)).
ZetaSeries zeta_fourier_genus0(const Fan& fan, const IVec& dmax);

struct LeadingConstant {
  std::optional<LL> exact;
  CompletionElement truncated{0};
  // E(u) = Q_Sigma(u, ..., u), constant term first.
  std::vector<Int> local_polynomial;
};
LeadingConstant leading_constant(const Fan& fan, const CurveData& curve, long precision);

struct StabilizationReport {
  struct Row {
    long k;
    IVec d;              // k * direction
    LL coeff;            // zeta coefficient at d
    VirtualDim dim;      // of coeff * L^{-|d|} - gamma
  };
  IVec direction;
  std::vector<Row> rows;
  bool exact_from_one = false;        // every difference with k >= 1 is 0
  bool strictly_decreasing = false;   // dims strictly decrease from k = 1
};
// (1, ..., 1) when it lies in ker gamma^v, else the smallest positive kernel vector.
IVec stabilization_direction(const Fan& fan);
// Rows along d = k * stabilization_direction(fan), k = 0..kmax.
StabilizationReport stabilization_check(const Fan& fan, long kmax, long precision);

}  // namespace mtz
