#include "mtz/fq_oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>

#include "mtz/errors.hpp"
#include "mtz/fq_field.hpp"

namespace mtz {

namespace {

int mobius(long n) {
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

Int ipow(long q, long e) { return boost::multiprecision::pow(Int(q), unsigned(e)); }

RationalSeries truncated_product(const RationalSeries& a, const RationalSeries& b, int trunc) {
  RationalSeries r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea);
      int s = 0;
      for (size_t i = 0; i < e.size(); ++i) s += (e[i] += eb[i]);
      if (s > trunc) continue;
      r[e] += ca * cb;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

RationalSeries truncated_power(RationalSeries base, Int n, int trunc, size_t nvars) {
  RationalSeries r{{std::vector<int>(nvars, 0), Rational(1)}};
  while (n > 0) {
    if (n % 2 == 1) r = truncated_product(r, base, trunc);
    n /= 2;
    if (n > 0) base = truncated_product(base, base, trunc);
  }
  return r;
}

}  // namespace

std::vector<Int> closed_point_counts(long q, int dmax) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
  std::vector<Int> n(size_t(std::max(dmax, 0) + 1), 0);
  for (long d = 1; d <= dmax; ++d) {
    Int s = 0;
    for (long e = 1; e <= d; ++e)
      if (d % e == 0) s += mobius(e) * ipow(q, d / e);
    n[size_t(d)] = s / d;
  }
  if (dmax >= 1) n[1] += 1;  // the point at infinity
  return n;
}

std::vector<Int> closed_point_counts(long q, int dmax, const std::vector<Int>& weil_numerator) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "q must be at least 2");
  if (weil_numerator.empty() || weil_numerator[0] != 1)
    throw Error(ErrorKind::InvalidArgument, "Weil numerator must have constant term 1");
  // s_m = -[T^m] (T P'(T) / P(T)) are the power sums of the inverse roots.
  const size_t m = size_t(std::max(dmax, 0));
  std::vector<Int> tp(m + 1, 0), quot(m + 1, 0);
  for (size_t i = 1; i < weil_numerator.size() && i <= m; ++i) tp[i] = Int(long(i)) * weil_numerator[i];
  for (size_t i = 0; i <= m; ++i) {
    Int c = tp[i];
    for (size_t j = 1; j <= i && j < weil_numerator.size(); ++j) c -= weil_numerator[j] * quot[i - j];
    quot[i] = c;
  }
  std::vector<Int> points(m + 1, 0);
  for (size_t e = 1; e <= m; ++e) points[e] = ipow(q, long(e)) + 1 + quot[e];
  std::vector<Int> n(m + 1, 0);
  for (long d = 1; d <= dmax; ++d) {
    Int s = 0;
    for (long e = 1; e <= d; ++e)
      if (d % e == 0) s += mobius(d / e) * points[size_t(e)];
    if (s % d != 0) throw Error(ErrorKind::NonIntegerQuotient, "Weil numerator gives fractional point counts");
    n[size_t(d)] = s / d;
  }
  return n;
}

RationalSeries specialize_series(const GradedSeries& f, long q) {
  RationalSeries r;
  for (const auto& [m, c] : f.terms()) {
    for (long z : m.z)
      if (z != 0) throw Error(ErrorKind::InvalidArgument, "series carries character markers");
    Rational v = specialize_q(c, Int(q));
    if (v != 0) r[m.t] += v;
  }
  return r;
}

RationalSeries euler_product_specialize(const GradedSeries& f, long q, int trunc) {
  const size_t k = f.num_t();
  const auto counts = closed_point_counts(q, trunc);
  RationalSeries r{{std::vector<int>(k, 0), Rational(1)}};
  for (int d = 1; d <= trunc; ++d) {
    const Int qd = ipow(q, d);
    RationalSeries fd;
    for (const auto& [m, c] : f.terms()) {
      for (long z : m.z)
        if (z != 0) throw Error(ErrorKind::InvalidArgument, "series carries character markers");
      std::vector<int> e(m.t);
      int s = 0;
      for (auto& x : e) s += (x *= d);
      if (s > trunc) continue;
      fd[e] += specialize_q(c, qd);
    }
    std::erase_if(fd, [](const auto& kv) { return kv.second == 0; });
    r = truncated_product(r, truncated_power(fd, counts[size_t(d)], trunc, k), trunc);
  }
  return r;
}

long long default_budget() {
  if (const char* env = std::getenv("MTZ_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100000000LL;
}

Int count_hom_fq(const Fan& fan, const IVec& d, int q, long long budget) {
  const size_t k = fan.num_rays();
  if (d.size() != k) throw Error(ErrorKind::InvalidArgument, "degree vector needs one entry per ray");
  for (long long x : d)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative degree");
  if (k > 30) throw Error(ErrorKind::InvalidArgument, "too many rays for the enumeration");
  // Forms of these degrees glue to a map only when gamma^v(d) = 0.
  if (!fan.sequence().in_kernel_of_dual(d)) return 0;

  long double tuples = 1;
  for (long long x : d) tuples *= std::pow((long double)q, (long double)(x + 1)) - 1;
  if (tuples * (long double)k > (long double)budget)
    throw Error(ErrorKind::BudgetExceeded, "enumeration of " + std::to_string((long long)tuples) +
                                               " tuples exceeds the budget " + std::to_string(budget));

  const FqField F(q);
  long long dmax = 0;
  for (long long x : d) dmax = std::max(dmax, x);
  std::vector<FqPoly> points;  // finite closed points; index points.size() is infinity
  for (int e = 1; e <= dmax; ++e)
    for (auto& p : monic_irreducibles(F, e)) points.push_back(p);
  const size_t inf = points.size(), npts = points.size() + 1;

  std::vector<bool> allowed(size_t(1) << k, false);
  for (const Cone& c : fan.faces()) {
    size_t mask = 0;
    for (size_t a : c) mask |= size_t(1) << a;
    allowed[mask] = true;
  }

  // Zero loci of every nonzero form of degree d_alpha, as point lists.
  std::vector<std::vector<std::vector<size_t>>> zeros(k);
  for (size_t a = 0; a < k; ++a) {
    const size_t len = size_t(d[a]) + 1;
    FqPoly f(len, 0);
    while (true) {
      size_t i = 0;
      while (i < len && f[i] == q - 1) f[i++] = 0;
      if (i == len) break;
      ++f[i];
      std::vector<size_t> z;
      if (f[len - 1] == 0) z.push_back(inf);
      for (size_t p = 0; p < points.size(); ++p)
        if (fq_mod(F, f, points[p]).empty()) z.push_back(p);
      zeros[a].push_back(std::move(z));
    }
  }

  std::vector<size_t> masks(npts, 0);
  Int raw = 0;
  std::function<void(size_t)> rec = [&](size_t a) {
    if (a == k) {
      ++raw;
      return;
    }
    const size_t bit = size_t(1) << a;
    for (const auto& z : zeros[a]) {
      bool ok = true;
      for (size_t p : z) ok &= allowed[masks[p] | bit];
      if (!ok) continue;
      for (size_t p : z) masks[p] |= bit;
      rec(a + 1);
      for (size_t p : z) masks[p] &= ~bit;
    }
  };
  rec(0);

  const Int torus = ipow(q - 1, long(fan.pic_rank()));
  if (raw % torus != 0)
    throw Error(ErrorKind::NonIntegerQuotient, "raw count " + raw.str() + " is not divisible by (q-1)^r");
  return raw / torus;
}

Int count_rational_maps_closed_form(long d, long q) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "degree must be at least 1");
  return ipow(q, 2 * d + 1) - ipow(q, 2 * d - 1);
}

long double closed_point_product(const std::vector<Int>& e, long n, long r, long q) {
  const long double Q = (long double)q;
  long double log_total = (long double)n * std::log(Q) - (long double)r * std::log1p(-1 / Q);
  for (long d = 1; d <= 400; ++d) {
    long double nd = 0;
    for (long f = 1; f <= d; ++f)
      if (d % f == 0) nd += (long double)mobius(f) * std::pow(Q, (long double)(d / f));
    nd /= (long double)d;
    if (d == 1) nd += 1;
    const long double x = std::pow(Q, -(long double)d);
    long double em1 = 0;
    for (size_t k = 1; k < e.size(); ++k) em1 += e[k].convert_to<long double>() * std::pow(x, (long double)k);
    const long double term = nd * std::log1p(em1);
    log_total += term;
    if (d > 3 && std::fabs(term) < 1e-22L) break;
  }
  return std::exp(log_total);
}

}  // namespace mtz
