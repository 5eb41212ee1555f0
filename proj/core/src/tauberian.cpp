#include "mtz/tauberian.hpp"

#include <algorithm>

#include "mtz/errors.hpp"

namespace mtz {

namespace {

long pairing(const std::vector<int>& rho, const MultiIndex& d) {
  long s = 0;
  for (size_t i = 0; i < rho.size(); ++i) s += long(rho[i]) * d[i];
  return s;
}

bool next_index(MultiIndex& d, const MultiIndex& dmax) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < dmax[i]) {
      ++d[i];
      return true;
    }
    d[i] = 0;
  }
  return false;
}

}  // namespace

MultiSeries tauberian_transfer(const MultiSeries& a, const std::vector<int>& rho, const MultiIndex& dmax) {
  if (rho.size() != dmax.size()) throw Error(ErrorKind::InvalidArgument, "rho/dmax rank mismatch");
  for (int r : rho)
    if (r <= 0) throw Error(ErrorKind::InvalidArgument, "rho must be positive");
  MultiSeries b;
  MultiIndex d(dmax.size(), 0);
  do {
    LL acc;
    for (const auto& [delta, c] : a) {
      if (delta.size() != d.size()) throw Error(ErrorKind::InvalidArgument, "index rank mismatch");
      bool le = true;
      MultiIndex diff(d.size());
      for (size_t i = 0; i < d.size(); ++i) {
        le &= delta[i] <= d[i];
        diff[i] = d[i] - delta[i];
      }
      if (le) acc += c.shifted(pairing(rho, diff));
    }
    if (!acc.is_zero()) b[d] = acc;
  } while (next_index(d, dmax));
  return b;
}

CompletionElement evaluate_at_Linv_rho(const MultiSeries& a, const std::vector<int>& rho, long precision) {
  LL v;
  for (const auto& [delta, c] : a) v += c.shifted(-pairing(rho, delta));
  return CompletionElement(v, precision);
}

TauberianReport tauberian_check(const MultiSeries& a, const std::vector<int>& rho, int kmax, long precision) {
  TauberianReport rep;
  const MultiIndex dmax(rho.size(), kmax);
  const MultiSeries b = tauberian_transfer(a, rho, dmax);
  const LL f = evaluate_at_Linv_rho(a, rho, precision).value();
  std::optional<VirtualDim> prev;
  for (int k = 1; k <= kmax; ++k) {
    MultiIndex d(rho.size(), k);
    auto it = b.find(d);
    LL bd = it == b.end() ? LL() : it->second;
    LL diff = (bd.shifted(-pairing(rho, d)) - f).truncated_below(precision);
    long m = *std::min_element(rho.begin(), rho.end()) * long(k);
    VirtualDim dim = virtual_dim(diff);
    rep.rows.push_back({d, m, dim});
    if (prev && dim > *prev) rep.monotone = false;
    prev = dim;
    if (m > 0) {
      // Below the working precision the difference is invisible; cap at precision + 1.
      long depth = dim.is_minus_infinity() ? precision + 1 : -dim.value();
      Rational e(depth, m);
      if (!rep.eta || e < *rep.eta) rep.eta = e;
    }
  }
  return rep;
}

std::vector<TauberianExample> shipped_tauberian_examples(int terms) {
  std::vector<TauberianExample> out;
  out.push_back({"constant", {{{0}, LL(1)}}, {2}});
  TauberianExample one_var{"1/(1-L*T^2)", {}, {1}};
  TauberianExample two_var{"1/(1-L*T1*T2)", {}, {1, 1}};
  for (int j = 0; j <= terms; ++j) {
    one_var.a[{2 * j}] = LL::monomial(j);
    two_var.a[{j, j}] = LL::monomial(j);
  }
  out.push_back(one_var);
  out.push_back(two_var);
  return out;
}

}  // namespace mtz
