#pragma once

#include <map>
#include <vector>

#include "mtz/fan.hpp"
#include "mtz/graded_series.hpp"
#include "mtz/lefschetz.hpp"

namespace mtz {

// N_1..N_dmax for P^1 over F_q (index 0 unused, set to 0).
std::vector<Int> closed_point_counts(long q, int dmax);
// Same for a curve with zeta function P(T) / ((1 - T)(1 - qT)); weil_numerator[0] must be 1.
std::vector<Int> closed_point_counts(long q, int dmax, const std::vector<Int>& weil_numerator);

// Truncated multivariate series over Q, keyed by T-exponent vectors.
using RationalSeries = std::map<std::vector<int>, Rational>;

// prod_{d >= 1} f_d(T^d)^{N_d}, where f_d is f with L -> q^d (the count at a degree-d point).
// f must carry no character markers.
RationalSeries euler_product_specialize(const GradedSeries& f, long q, int trunc);
RationalSeries specialize_series(const GradedSeries& f, long q);

// Budget in form evaluations: MTZ_BUDGET if set, else 1e8.
long long default_budget();

// Maps P^1 -> X_Sigma of ray-degree d over F_q, counted in Cox coordinates modulo the
// (F_q^*)^r action. Throws BudgetExceeded when the tuple count times |Sigma(1)| exceeds budget.
Int count_hom_fq(const Fan& fan, const IVec& d, int q, long long budget = default_budget());
Int count_rational_maps_closed_form(long d, long q);

// q^n (1 - 1/q)^{-r} prod_d E(q^{-d})^{N_d}, E given by its coefficients (constant first).
long double closed_point_product(const std::vector<Int>& e, long n, long r, long q);

}  // namespace mtz
