#include "mtz/height_zeta.hpp"

#include <functional>
#include <numeric>

#include "mtz/errors.hpp"
#include "mtz/euler_product.hpp"
#include "mtz/rational_function.hpp"

namespace mtz {

namespace {

std::vector<long> to_z(const IVec& m) { return std::vector<long>(m.begin(), m.end()); }

LL torus_class(size_t n) { return (LL::L() - LL(1)).pow(unsigned(n)); }

// Every nonzero m = sum c_alpha rho_alpha over the relative interior of a cone, visited with its
// ray-degree vector; accept(t) bounds the degrees.
void for_each_cone_point(const Fan& fan, const std::function<bool(const std::vector<int>&)>& accept,
                         const std::function<void(const IVec&, const std::vector<int>&)>& visit) {
  const size_t k = fan.num_rays(), n = fan.rank();
  for (const Cone& c : fan.faces()) {
    if (c.empty()) continue;
    std::vector<int> t(k, 0);
    IVec m(n, 0);
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == c.size()) {
        visit(m, t);
        return;
      }
      const size_t a = c[i];
      while (true) {
        ++t[a];
        m = m + fan.rays()[a];
        if (!accept(t)) break;
        rec(i + 1);
      }
      m = m - static_cast<long long>(t[a]) * fan.rays()[a];
      t[a] = 0;
    };
    rec(0);
  }
}

GradedSeries q_sigma_series(const Fan& fan, int trunc, std::optional<std::vector<int>> box) {
  GradedSeries f(fan.num_rays(), fan.rank(), trunc, box);
  for (const auto& [e, c] : q_sigma(fan).terms) {
    IVec z(fan.rank(), 0);
    for (size_t a = 0; a < e.size(); ++a) z = z + static_cast<long long>(e[a]) * fan.rays()[a];
    f.add_term({e, to_z(z)}, LL(c));
  }
  return f;
}

LineMonomial ray_marker(const Fan& fan, size_t a, long j) {
  std::vector<int> t(fan.num_rays(), 0);
  t[a] = 1;
  return {j, to_z(fan.rays()[a]), t};
}

ZetaSeries collect(const Fan& fan, const IVec& dmax, const GradedSeries& s) {
  ZetaSeries z{fan.name(), dmax, {}};
  const LL tc = torus_class(fan.rank());
  for (const auto& [m, c] : s.terms()) {
    if (c.is_zero()) continue;
    z.coeffs[IVec(m.t.begin(), m.t.end())] = tc * c;
  }
  return z;
}

}  // namespace

LL ZetaSeries::coeff(const IVec& d) const {
  auto it = coeffs.find(d);
  return it == coeffs.end() ? LL() : it->second;
}

IVec expand_dmax(const Fan& fan, const IVec& dmax) {
  if (dmax.size() == 1) return IVec(fan.num_rays(), dmax[0]);
  if (dmax.size() != fan.num_rays())
    throw Error(ErrorKind::InvalidArgument, "Dmax needs 1 or " + std::to_string(fan.num_rays()) + " entries");
  for (long long x : dmax)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "Dmax entries must be nonnegative");
  return dmax;
}

GradedSeries local_height_factor(const Fan& fan, int trunc) {
  GradedSeries h = GradedSeries::one(fan.num_rays(), fan.rank(), trunc);
  auto accept = [&](const std::vector<int>& t) {
    int s = 0;
    for (int x : t) s += x;
    return s <= trunc;
  };
  for_each_cone_point(fan, accept, [&](const IVec& m, const std::vector<int>& t) { h.add_term({t, to_z(m)}, LL(1)); });
  return h;
}

GradedSeries local_fourier_side(const Fan& fan, int trunc) {
  GradedSeries f = q_sigma_series(fan, trunc, std::nullopt);
  for (size_t a = 0; a < fan.num_rays(); ++a) f.divide_one_minus(ray_marker(fan, a, 0));
  return f;
}

bool local_fourier_check(const Fan& fan, int trunc) { return local_fourier_side(fan, trunc) == local_height_factor(fan, trunc); }

ZetaSeries zeta_direct_genus0(const Fan& fan, const IVec& dmax_in) {
  const IVec dmax = expand_dmax(fan, dmax_in);
  const size_t k = fan.num_rays(), n = fan.rank();
  struct Label {
    IVec m;
    std::vector<int> t;
  };
  std::vector<Label> labels;
  auto accept = [&](const std::vector<int>& t) {
    for (size_t a = 0; a < k; ++a)
      if (t[a] > dmax[a]) return false;
    return true;
  };
  for_each_cone_point(fan, accept, [&](const IVec& m, const std::vector<int>& t) { labels.push_back({m, t}); });
  std::sort(labels.begin(), labels.end(), [](const Label& a, const Label& b) { return a.m < b.m; });

  std::map<IVec, LL> acc;
  std::vector<int> deg(k, 0);
  IVec msum(n, 0);
  std::vector<int> mults;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == labels.size()) {
      if (!is_zero(msum)) return;
      acc[IVec(deg.begin(), deg.end())] += config_class(mults);
      return;
    }
    rec(i + 1);
    const Label& lab = labels[i];
    int used = 0;
    while (true) {
      bool fits = true;
      for (size_t a = 0; a < k; ++a) fits &= deg[a] + lab.t[a] <= dmax[a];
      if (!fits) break;
      for (size_t a = 0; a < k; ++a) deg[a] += lab.t[a];
      msum = msum + lab.m;
      ++used;
      mults.push_back(used);
      rec(i + 1);
      mults.pop_back();
    }
    for (size_t a = 0; a < k; ++a) deg[a] -= used * lab.t[a];
    msum = msum - static_cast<long long>(used) * lab.m;
  };
  rec(0);

  ZetaSeries z{fan.name(), dmax, {}};
  const LL tc = torus_class(n);
  for (auto& [d, c] : acc)
    if (!c.is_zero()) z.coeffs[d] = tc * c;
  return z;
}

ZetaSeries zeta_fourier_genus0(const Fan& fan, const IVec& dmax_in) {
  const IVec dmax = expand_dmax(fan, dmax_in);
  int trunc = 0;
  for (long long x : dmax) trunc += int(x);
  std::vector<int> box(dmax.begin(), dmax.end());
  GradedSeries s = euler_product_genus0(q_sigma_series(fan, trunc, box));
  for (size_t a = 0; a < fan.num_rays(); ++a) {
    s.divide_one_minus(ray_marker(fan, a, 0));
    s.divide_one_minus(ray_marker(fan, a, 1));
  }
  return collect(fan, dmax, s.z_zero_part());
}

LeadingConstant leading_constant(const Fan& fan, const CurveData& curve, long precision) {
  curve.validate();
  if (curve.genus != 0) throw Error(ErrorKind::InvalidArgument, "the exact leading constant needs genus 0");
  if (precision < 0) throw Error(ErrorKind::InvalidArgument, "precision must be nonnegative");
  const long n = long(fan.rank());
  const unsigned r = unsigned(fan.pic_rank());
  LeadingConstant out;

  std::vector<Int> e;
  for (const auto& [exps, c] : q_sigma(fan).terms) {
    size_t d = 0;
    for (int x : exps) d += size_t(x);
    if (e.size() <= d) e.resize(d + 1, 0);
    e[d] += c;
  }
  out.local_polynomial = e;

  // u-degree k contributes with dimension <= -k/2, so 2(P + n) + 1 terms reach depth -(P + n).
  const int utrunc = int(2 * (precision + n) + 1);
  GradedSeries eu(1, 0, utrunc);
  for (size_t d = 0; d < e.size(); ++d) eu.add_term({{int(d)}, {}}, LL(e[d]));
  GradedSeries ep = euler_product_genus0(eu, curve);
  LL s;
  for (const auto& [m, c] : ep.terms()) s += c.shifted(-m.t[0]);

  const long deep = precision + n;
  CompletionElement acc(s, deep);
  for (unsigned i = 0; i < r; ++i) acc *= CompletionElement::geometric_inverse(1, deep);
  out.truncated = CompletionElement(acc.value().shifted(n), precision);

  // Closed form when E = prod (1 - u^k)^{-a_k} with finitely many a_k <= 0.
  PlethysticSeries pl = plethystic_log(eu);
  bool closes = true;
  IntPoly prod = IntPoly::monomial(0), target(e);
  LL exact = LL::monomial(n);
  for (const auto& [mu, a] : pl.terms) {
    if (mu.j != 0 || a > 0) {
      closes = false;
      break;
    }
    const size_t k = size_t(mu.t[0]);
    const unsigned p = unsigned(-a);
    prod = prod * IntPoly::one_minus_t_pow(k).pow(p);
    exact = exact * (LL(1) - LL::monomial(-long(k))).pow(p) * (LL(1) - LL::monomial(1 - long(k))).pow(p);
  }
  if (closes && prod == target) {
    auto q = exact.divide_exact((LL(1) - LL::monomial(-1)).pow(r));
    MTZ_ASSERT(q.has_value(), "closed-form leading constant is not divisible by (1 - L^-1)^r");
    MTZ_ASSERT(q->truncated_below(precision) == out.truncated.value(),
               "closed form " + q->to_string() + " disagrees with the truncated product");
    out.exact = *q;
  }
  return out;
}

IVec stabilization_direction(const Fan& fan) {
  const size_t k = fan.num_rays();
  const IVec ones(k, 1);
  if (fan.sequence().in_kernel_of_dual(ones)) return ones;
  // Smallest total, then lexicographically smallest, kernel vector with entries in [1, 6].
  std::optional<IVec> best;
  IVec d(k, 1);
  while (true) {
    if (fan.sequence().in_kernel_of_dual(d)) {
      auto total = [](const IVec& v) { return std::accumulate(v.begin(), v.end(), 0LL); };
      if (!best || total(d) < total(*best) || (total(d) == total(*best) && d < *best)) best = d;
    }
    size_t i = 0;
    while (i < k && d[i] == 6) d[i++] = 1;
    if (i == k) break;
    ++d[i];
  }
  if (!best) throw Error(ErrorKind::InvalidArgument, "no positive degree vector with entries <= 6 in the kernel");
  return *best;
}

StabilizationReport stabilization_check(const Fan& fan, long kmax, long precision) {
  StabilizationReport rep;
  const LeadingConstant gamma = leading_constant(fan, CurveData::projective_line(), precision);
  rep.direction = stabilization_direction(fan);
  const ZetaSeries z = zeta_direct_genus0(fan, kmax * rep.direction);
  for (long k = 0; k <= kmax; ++k) {
    IVec d = k * rep.direction;
    LL a = z.coeff(d);
    LL diff = (a.shifted(-anticanonical_degree(d)) - gamma.truncated.value()).truncated_below(precision);
    rep.rows.push_back({k, d, a, virtual_dim(diff)});
  }
  rep.exact_from_one = true;
  rep.strictly_decreasing = true;
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    if (!rep.rows[i].dim.is_minus_infinity()) rep.exact_from_one = false;
    if (i >= 2 && !(rep.rows[i].dim < rep.rows[i - 1].dim)) rep.strictly_decreasing = false;
  }
  return rep;
}

}  // namespace mtz
