#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtz/completion.hpp"
#include "mtz/lefschetz.hpp"

namespace mtz {

using MultiIndex = std::vector<int>;
using MultiSeries = std::map<MultiIndex, LL>;

// b_d = sum_{0 <= delta <= d} a_delta L^{<rho, d - delta>}, for every d <= dmax componentwise.
MultiSeries tauberian_transfer(const MultiSeries& a, const std::vector<int>& rho, const MultiIndex& dmax);

// F(L^-rho) for a finitely supported F, as a completion element.
CompletionElement evaluate_at_Linv_rho(const MultiSeries& a, const std::vector<int>& rho, long precision);

struct TauberianReport {
  struct Row {
    MultiIndex d;
    long min_rho_d;
    VirtualDim dim;  // of b_d L^{-<rho,d>} - F(L^-rho)
  };
  std::vector<Row> rows;
  // Largest eta with dim <= -eta * min(rho_i d_i) on every row with min > 0; nullopt if none apply.
  std::optional<Rational> eta;
  bool monotone = true;
};

struct TauberianExample {
  std::string name;
  MultiSeries a;
  std::vector<int> rho;
};
// 1, 1/(1 - L T^2) and 1/(1 - L T1 T2), the series cut after `terms` line elements.
std::vector<TauberianExample> shipped_tauberian_examples(int terms);

// Rows are taken along the diagonal ray d = k * (1,...,1), k = 1..kmax.
TauberianReport tauberian_check(const MultiSeries& a, const std::vector<int>& rho, int kmax, long precision);

}  // namespace mtz
