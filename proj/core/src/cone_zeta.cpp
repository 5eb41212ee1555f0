#include "mtz/cone_zeta.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "mtz/characters.hpp"
#include "mtz/errors.hpp"

namespace mtz {

namespace {

using RVec = std::vector<Rational>;

// Solve sum_k c_k cols[k] = y over Q. nullopt if inconsistent; cols must be independent.
std::optional<RVec> express(const std::vector<IVec>& cols, const IVec& y) {
  const size_t n = y.size(), k = cols.size();
  if (k == 0) {
    if (is_zero(y)) return RVec{};
    return std::nullopt;
  }
  std::vector<RVec> m(n, RVec(k + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < k; ++c) m[r][c] = cols[c][r];
    m[r][k] = y[r];
  }
  size_t row = 0;
  std::vector<size_t> piv;
  for (size_t c = 0; c <= k && row < n; ++c) {
    size_t p = row;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) continue;
    if (c == k) return std::nullopt;  // inconsistent
    std::swap(m[row], m[p]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (size_t cc = 0; cc <= k; ++cc) m[r][cc] -= f * m[row][cc];
    }
    piv.push_back(c);
    ++row;
  }
  if (piv.size() != k) throw Error(ErrorKind::InvalidArgument, "cone generators are dependent");
  RVec x(k);
  for (size_t r = 0; r < k; ++r) x[piv[r]] = m[r][k];
  return x;
}

std::vector<IVec> rays_of(const std::vector<IVec>& rays, const Cone& c) {
  std::vector<IVec> r;
  for (size_t i : c) r.push_back(rays[i]);
  return r;
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

void for_each_subset(size_t n, const std::function<void(const std::vector<size_t>&)>& f) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<size_t> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    f(s);
  }
}

// Points sum c_l rho_l, c_l >= 1, of the relatively open cone with level sum c_l e_l <= level.
void relint_points(const std::vector<IVec>& rays, const std::vector<long>& e, long level, size_t n,
                   const std::function<void(const IVec&, long)>& f) {
  IVec y(n, 0);
  std::function<void(size_t, long)> rec = [&](size_t k, long used) {
    if (k == rays.size()) {
      f(y, used);
      return;
    }
    for (long c = 1; used + c * e[k] <= level; ++c) {
      y = y + rays[k];
      rec(k + 1, used + c * e[k]);
    }
    // undo
    long cmax = 0;
    while (used + (cmax + 1) * e[k] <= level) ++cmax;
    y = y - cmax * rays[k];
  };
  rec(0, 0);
}

std::vector<long> exponents(const std::vector<IVec>& rays, const IVec& lambda) {
  std::vector<long> e;
  for (const auto& r : rays) {
    long v = long(dot(r, lambda));
    if (v <= 0)
      throw Error(ErrorKind::NonPositiveDirection, "<lambda, rho> = " + std::to_string(v) + " for ray " + to_string(r));
    e.push_back(v);
  }
  return e;
}

void box_points(size_t n, long lo, long hi, const std::function<void(const IVec&)>& f) {
  IVec y(n, lo);
  if (n == 0) {
    f(y);
    return;
  }
  while (true) {
    f(y);
    size_t i = 0;
    while (i < n && y[i] == hi) y[i++] = lo;
    if (i == n) return;
    ++y[i];
  }
}

}  // namespace

bool in_cone(const std::vector<IVec>& gens, const IVec& y) {
  if (is_zero(y)) return true;
  std::vector<IVec> nz;
  for (const auto& g : gens)
    if (!is_zero(g)) nz.push_back(g);
  const size_t k = matrix_rank(nz);
  if (k == 0) return false;
  // Caratheodory: y lies in the cone over some k independent generators.
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  const size_t m = nz.size();
  while (true) {
    std::vector<IVec> sub;
    for (size_t i : idx) sub.push_back(nz[i]);
    if (matrix_rank(sub) == k) {
      auto x = express(sub, y);
      if (!x) return false;  // y outside the span
      if (std::all_of(x->begin(), x->end(), [](const Rational& v) { return v >= 0; })) return true;
    }
    long i = long(k) - 1;
    while (i >= 0 && idx[size_t(i)] == m - k + size_t(i)) --i;
    if (i < 0) return false;
    ++idx[size_t(i)];
    for (size_t j = size_t(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool ConeFan::in_support(const IVec& y) const { return in_cone(support_, y); }

std::optional<std::pair<Cone, std::vector<long long>>> ConeFan::locate(const IVec& y) const {
  for (const Cone& c : faces_) {
    auto x = express(rays_of(rays_, c), y);
    if (!x) continue;
    if (!std::all_of(x->begin(), x->end(), [](const Rational& v) { return v > 0; })) continue;
    std::vector<long long> coeffs;
    for (const auto& v : *x) {
      MTZ_ASSERT(denominator(v) == 1, "non-integral coordinates in a regular cone");
      coeffs.push_back(static_cast<long long>(numerator(v)));
    }
    return std::make_pair(c, coeffs);
  }
  return std::nullopt;
}

ConeFan validate_cone_fan(const RawConeFan& raw, long sample_radius) {
  ConeFan f;
  f.name_ = raw.name;
  f.rank_ = raw.rank;
  f.rays_ = raw.rays;
  for (size_t i = 0; i < raw.rays.size(); ++i) {
    const IVec& r = raw.rays[i];
    if (r.size() != raw.rank) throw Error(ErrorKind::InvalidArgument, "ray " + std::to_string(i) + " has wrong length");
    if (is_zero(r)) throw Error(ErrorKind::InvalidArgument, "zero ray");
    if (gcd_of(r) != 1) throw Error(ErrorKind::NonPrimitiveRay, "ray " + to_string(r) + " is not primitive");
    for (size_t j = 0; j < i; ++j)
      if (raw.rays[j] == r) throw Error(ErrorKind::DuplicateRay, "ray " + to_string(r) + " repeated");
  }
  f.support_ = raw.support_generators.empty() ? raw.rays : raw.support_generators;
  for (const auto& g : f.support_)
    if (g.size() != raw.rank) throw Error(ErrorKind::InvalidArgument, "support generator has wrong length");
  f.dim_ = matrix_rank(f.support_);

  std::set<Cone> faces;
  std::vector<Cone> maxc = raw.max_cones;
  if (maxc.empty()) maxc.push_back({});
  for (Cone c : maxc) {
    std::sort(c.begin(), c.end());
    for (size_t i : c)
      if (i >= raw.rays.size()) throw Error(ErrorKind::InvalidArgument, "cone index out of range");
    if (c.size() != f.dim_)
      throw Error(ErrorKind::NonUnimodularCone, "maximal cone has " + std::to_string(c.size()) +
                                                    " rays but the support has dimension " + std::to_string(f.dim_));
    auto rs = rays_of(raw.rays, c);
    if (!rs.empty() && gcd_maximal_minors(rs) != 1)
      throw Error(ErrorKind::NonUnimodularCone, "cone is not unimodular");
    for (const auto& r : rs)
      if (!in_cone(f.support_, r))
        throw Error(ErrorKind::SupportViolation, "ray " + to_string(r) + " lies outside the support");
    f.max_cones_.push_back(c);
    const size_t k = c.size();
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      Cone s;
      for (size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) s.push_back(c[i]);
      faces.insert(s);
    }
  }
  f.faces_.assign(faces.begin(), faces.end());
  std::stable_sort(f.faces_.begin(), f.faces_.end(),
                   [](const Cone& a, const Cone& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });

  box_points(raw.rank, -sample_radius, sample_radius, [&](const IVec& y) {
    size_t hits = 0;
    for (const Cone& c : f.faces_) {
      auto x = express(rays_of(f.rays_, c), y);
      if (x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return v > 0; })) ++hits;
    }
    const bool inside = in_cone(f.support_, y);
    if (inside && hits == 0)
      throw Error(ErrorKind::SupportViolation, "point " + to_string(y) + " of the support is not covered");
    if (hits > 1)
      throw Error(ErrorKind::SupportViolation, "point " + to_string(y) + " lies in " + std::to_string(hits) + " open cones");
  });
  return f;
}

std::vector<RationalTerm> LSeriesRational::terms() const {
  std::vector<RationalTerm> out;
  for (const auto& e : summands) {
    long shift = std::accumulate(e.begin(), e.end(), 0L);
    out.push_back({IntPoly::monomial(size_t(shift)), e});
  }
  return out;
}

std::vector<Int> LSeriesRational::expand(long level) const { return expand_sum(terms(), level); }

LSeriesRational l_series_direction(const ConeFan& cf, const IVec& lambda0) {
  const auto e = exponents(cf.rays(), lambda0);
  LSeriesRational l;
  l.dim = cf.dim();
  for (const Cone& c : cf.faces()) {
    std::vector<long> ex;
    for (size_t i : c) ex.push_back(e[i]);
    l.summands.push_back(ex);
  }
  return l;
}

Rational chi_value(const ConeFan& cf, const IVec& lambda0) {
  const auto e = exponents(cf.rays(), lambda0);
  Rational chi = 0;
  for (const Cone& c : cf.faces()) {
    if (c.size() != cf.dim()) continue;
    Rational p = 1;
    for (size_t i : c) p /= e[i];
    chi += p;
  }
  return chi;
}

ResidueData residue_check(const ConeFan& cf, const IVec& lambda0) {
  const auto e = exponents(cf.rays(), lambda0);
  ResidueData r;
  r.rank = cf.dim();
  for (long v : e) r.a = long(lcm_ll(r.a, v));
  r.chi = chi_value(cf, lambda0);
  r.special_value = 0;
  for (const auto& t : l_series_direction(cf, lambda0).terms()) r.special_value += t.special_value(r.a, unsigned(r.rank));
  Rational expect = r.chi * Rational(boost::multiprecision::pow(Int(r.a), unsigned(r.rank)));
  MTZ_ASSERT(Rational(r.special_value) == expect,
             "residue " + r.special_value.str() + " differs from a^rank chi = " + rational_to_string(expect));
  return r;
}

std::vector<Int> brute_force_levels(const ConeFan& cf, const IVec& lambda0, long level) {
  const auto e = exponents(cf.rays(), lambda0);
  long maxabs = 1;
  for (const auto& r : cf.rays())
    for (long long x : r) maxabs = std::max(maxabs, long(std::llabs(x)));
  const long emin = *std::min_element(e.begin(), e.end());
  const long radius = long(cf.dim()) * (level / emin) * maxabs;
  std::vector<Int> counts(size_t(level + 1), 0);
  box_points(cf.rank(), -radius, radius, [&](const IVec& y) {
    long v = long(dot(y, lambda0));
    if (v < 0 || v > level) return;
    if (cf.in_support(y)) counts[size_t(v)] += 1;
  });
  return counts;
}

void ExactSequence::validate() const {
  const size_t n = rank_n(), k = rank_m(), g = j.size();
  for (const auto& row : i)
    if (row.size() != k) throw Error(ErrorKind::InexactSequence, "ragged matrix i");
  for (const auto& row : j)
    if (row.size() != n) throw Error(ErrorKind::InexactSequence, "j has the wrong number of columns");
  if (k + g != n) throw Error(ErrorKind::InexactSequence, "ranks do not add up: " + std::to_string(k) + " + " +
                                                              std::to_string(g) + " != " + std::to_string(n));
  if (k > 0 && g > 0) {
    IMat ji = matmul(j, i);
    for (const auto& row : ji)
      if (!is_zero(row)) throw Error(ErrorKind::InexactSequence, "j o i != 0");
  }
  if (k > 0 && gcd_maximal_minors(transpose(i)) != 1)
    throw Error(ErrorKind::InexactSequence, "i is not injective with torsion-free cokernel");
  if (g > 0 && gcd_maximal_minors(j) != 1) throw Error(ErrorKind::InexactSequence, "j is not surjective");
}

namespace {

std::vector<IVec> image_basis(const ExactSequence& seq) {
  std::vector<IVec> cols;
  const IMat t = transpose(seq.i);
  for (const auto& c : t) cols.push_back(c);
  return cols;
}

std::vector<std::pair<IVec, long>> fan_points(const ConeFan& cf, const IVec& lambda, long level) {
  const auto e = exponents(cf.rays(), lambda);
  std::vector<std::pair<IVec, long>> pts;
  for (const Cone& c : cf.faces()) {
    std::vector<long> ec;
    for (size_t i : c) ec.push_back(e[i]);
    relint_points(rays_of(cf.rays(), c), ec, level, cf.rank(), [&](const IVec& y, long lv) { pts.emplace_back(y, lv); });
  }
  return pts;
}

}  // namespace

CharRestrictReport char_restrict_check(const ExactSequence& seq, const ConeFan& cf, const IVec& lambda, long level) {
  seq.validate();
  if (cf.rank() != seq.rank_n()) throw Error(ErrorKind::InvalidArgument, "fan rank differs from rk N");
  const size_t g = seq.j.size();
  const Sublattice im(seq.rank_n(), image_basis(seq));
  const Sublattice trivial = Sublattice::zero(g);
  std::vector<CharSum> graded(size_t(level + 1), CharSum(g));
  CharRestrictReport rep;
  rep.right.assign(size_t(level + 1), 0);
  for (const auto& [y, lv] : fan_points(cf, lambda, level)) {
    const IVec jy = g ? matvec(seq.j, y) : IVec{};
    CharSum ev = CharSum::ev(jy);
    graded[size_t(lv)] += ev;
    const bool kept_left = integrate_dual(ev, trivial) == LL(1);
    const bool kept_right = im.contains(y);
    if (kept_left != kept_right) rep.pointwise_equal = false;
    if (kept_right) rep.right[size_t(lv)] += 1;
  }
  for (const auto& s : graded) rep.left.push_back(integrate_dual(s, trivial).coeff(0));
  return rep;
}

std::vector<IVec> finite_part(const ConeFan& cf, const Cone& delta, const std::vector<size_t>& k, const IVec& z) {
  std::vector<IVec> rest;
  for (size_t l : delta) {
    const IVec& r = cf.rays()[l];
    bool in_k_face = std::all_of(k.begin(), k.end(), [&](size_t i) { return r[i] == 0; });
    if (!in_k_face) rest.push_back(r);
  }
  std::vector<IVec> out;
  const size_t n = cf.rank();
  auto ok = [&](const IVec& y) {
    return std::all_of(k.begin(), k.end(), [&](size_t i) { return y[i] < z[i]; });
  };
  std::function<void(size_t, const IVec&)> rec = [&](size_t idx, const IVec& y) {
    if (idx == rest.size()) {
      if (ok(y)) out.push_back(y);
      return;
    }
    // Every remaining ray has a positive entry in K, so c is bounded.
    IVec cur = y + rest[idx];
    while (ok(cur)) {
      rec(idx + 1, cur);
      cur = cur + rest[idx];
    }
  };
  // With rays left, the first step already moves into K-coordinates; the loop bound handles it.
  rec(0, IVec(n, 0));
  return out;
}

ShiftedConeReport shifted_cone_check(const ConeFan& cf, const IVec& z, long level) {
  const size_t n = cf.rank();
  if (z.size() != n) throw Error(ErrorKind::InvalidArgument, "z has the wrong rank");
  for (long long x : z)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "z must lie in the orthant");
  for (const auto& r : cf.rays())
    for (long long x : r)
      if (x < 0) throw Error(ErrorKind::SupportViolation, "fan is not contained in the orthant");
  const IVec ones(n, 1);
  const long zl = long(dot(z, ones));
  long rho_max = 0;
  for (const auto& r : cf.rays()) rho_max = std::max(rho_max, long(dot(r, ones)));

  std::map<IVec, long> lhs, rhs;
  box_points(n, 0, level, [&](const IVec& y) {
    if (dot(y, ones) > level) return;
    for (size_t i = 0; i < n; ++i)
      if (y[i] < z[i]) return;
    if (cf.in_support(y)) lhs[y] += 1;
  });

  ShiftedConeReport rep;
  for (const Cone& delta : cf.faces()) {
    for_each_subset(n, [&](const std::vector<size_t>& k) {
      const long sign = k.size() % 2 ? -1 : 1;
      std::vector<IVec> open_rays;
      for (size_t l : delta) {
        const IVec& r = cf.rays()[l];
        if (std::all_of(k.begin(), k.end(), [&](size_t i) { return r[i] == 0; })) open_rays.push_back(r);
      }
      auto fin = finite_part(cf, delta, k, z);
      if (!k.empty()) {
        Int bound = boost::multiprecision::pow(Int(zl), unsigned(n));
        if (Int(fin.size()) > bound) rep.cardinality_bound = false;
        for (const auto& y : fin)
          if (dot(y, ones) > long(n) * zl * rho_max) rep.degree_bound = false;
      } else if (!(fin.size() == 1 && is_zero(fin[0]))) {
        rep.cardinality_bound = false;
      }
      rep.max_finite_part = std::max(rep.max_finite_part, long(fin.size()));
      std::vector<long> e;
      for (const auto& r : open_rays) e.push_back(long(dot(r, ones)));
      for (const auto& f : fin) {
        const long fl = long(dot(f, ones));
        if (fl > level) continue;
        relint_points(open_rays, e, level - fl, n, [&](const IVec& y, long) { rhs[f + y] += sign; });
      }
    });
  }
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  rep.identity = lhs == rhs;
  return rep;
}

ConeFan restricted_cone_fan(const ExactSequence& seq) {
  seq.validate();
  const size_t k = seq.rank_m(), n = seq.rank_n();
  auto to_n = [&](const IVec& x) { return matvec(seq.i, x); };
  auto feasible = [&](const IVec& x) {
    IVec y = to_n(x);
    return std::all_of(y.begin(), y.end(), [](long long v) { return v >= 0; });
  };
  RawConeFan raw;
  raw.name = "restricted";
  raw.rank = n;
  if (k == 0) return validate_cone_fan(raw, 1);
  if (k == 1) {
    for (long long s : {1LL, -1LL})
      if (feasible({s})) {
        raw.rays = {to_n({s})};
        raw.max_cones = {{0}};
        break;
      }
    if (raw.rays.empty()) raw.support_generators = {IVec(n, 0)};
    return validate_cone_fan(raw, 2);
  }
  if (k != 2) throw Error(ErrorKind::InvalidArgument, "automatic restricted fan needs rk M <= 2; supply one");
  std::vector<IVec> cand;
  for (const auto& row : seq.i) {
    if (is_zero(row)) continue;
    IVec v{-row[1], row[0]};
    long long g = gcd_of(v);
    v = IVec{v[0] / g, v[1] / g};
    for (const IVec& w : {v, IVec{-v[0], -v[1]}})
      if (feasible(w) && std::find(cand.begin(), cand.end(), w) == cand.end()) cand.push_back(w);
  }
  auto det2 = [](const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; };
  if (cand.empty()) {
    raw.support_generators = {IVec(n, 0)};
    return validate_cone_fan(raw, 2);
  }
  IVec u = cand[0], v = cand[0];
  bool two_dim = false;
  for (size_t a = 0; a < cand.size() && !two_dim; ++a)
    for (size_t b = 0; b < cand.size() && !two_dim; ++b) {
      if (det2(cand[a], cand[b]) <= 0) continue;
      bool all_in = true;
      for (const auto& c : cand) all_in &= det2(cand[a], c) >= 0 && det2(c, cand[b]) >= 0;
      if (all_in) {
        u = cand[a];
        v = cand[b];
        two_dim = true;
      }
    }
  if (!two_dim) {
    raw.rays = {to_n(u)};
    raw.max_cones = {{0}};
    return validate_cone_fan(raw, 2);
  }
  // Hilbert basis of cone(u, v): irreducible lattice points of the closed parallelogram.
  std::vector<IVec> para;
  const long long xs[] = {0, u[0], v[0], u[0] + v[0]}, ys[] = {0, u[1], v[1], u[1] + v[1]};
  const long long x0 = *std::min_element(xs, xs + 4), x1 = *std::max_element(xs, xs + 4);
  const long long y0 = *std::min_element(ys, ys + 4), y1 = *std::max_element(ys, ys + 4);
  const long long d = det2(u, v);
  for (long long x = x0; x <= x1; ++x)
    for (long long y = y0; y <= y1; ++y) {
      IVec p{x, y};
      if (is_zero(p)) continue;
      long long s = det2(p, v), t = det2(u, p);  // p = (s u + t v) / d
      if (s >= 0 && t >= 0 && s <= d && t <= d) para.push_back(p);
    }
  auto in2 = [&](const IVec& p) { return det2(p, v) >= 0 && det2(u, p) >= 0; };
  std::vector<IVec> hilbert;
  for (const auto& p : para) {
    bool reducible = false;
    for (const auto& q : para)
      if (q != p && !is_zero(p - q) && in2(p - q)) reducible = true;
    if (!reducible) hilbert.push_back(p);
  }
  std::sort(hilbert.begin(), hilbert.end(), [&](const IVec& a, const IVec& b) { return det2(a, b) > 0; });
  for (const auto& h : hilbert) raw.rays.push_back(to_n(h));
  for (size_t a = 0; a + 1 < hilbert.size(); ++a) {
    MTZ_ASSERT(det2(hilbert[a], hilbert[a + 1]) == 1, "Hilbert basis does not give a regular subdivision");
    raw.max_cones.push_back({a, a + 1});
  }
  raw.support_generators = {to_n(u), to_n(v)};
  return validate_cone_fan(raw, 2);
}

ConvolutionResult convolution_f1(const std::map<IVec, LL>& a, const ExactSequence& seq,
                                 const std::optional<ConeFan>& cf_in, const IVec& lambda0, int trunc) {
  seq.validate();
  const size_t n = seq.rank_n(), k = seq.rank_m();
  const ConeFan cf = cf_in ? *cf_in : restricted_cone_fan(seq);
  if (cf.rank() != n) throw Error(ErrorKind::InvalidArgument, "fan rank differs from rk N");
  const Sublattice im(n, image_basis(seq));
  for (const auto& r : cf.rays()) {
    if (!im.contains(r)) throw Error(ErrorKind::SupportViolation, "fan ray " + to_string(r) + " is not in i(M)");
    for (long long x : r)
      if (x < 0) throw Error(ErrorKind::SupportViolation, "fan ray " + to_string(r) + " leaves the orthant");
  }
  if (cf.dim() != k)
    throw Error(ErrorKind::HypothesisViolation, "Lambda cap M_R has dimension " + std::to_string(cf.dim()) +
                                                    " < rk M = " + std::to_string(k));
  IVec total(n, 0);
  for (const auto& r : cf.rays()) total = total + r;
  if (n > 0 && !std::all_of(total.begin(), total.end(), [](long long x) { return x > 0; }))
    throw Error(ErrorKind::HypothesisViolation, "M_R meets no interior point of Lambda (Gamma^v cap Lambda^v != 0)");
  for (const auto& [y, c] : a)
    for (long long x : y)
      if (x < 0) throw Error(ErrorKind::InvalidArgument, "support of a must lie in the orthant");

  ConvolutionResult out{GradedSeries(n, 0, trunc), {}, {}, residue_check(cf, lambda0), LL(), LL()};
  const auto e = exponents(cf.rays(), lambda0);

  // f_1(T^lambda0) = sum_{y1} a(y1) sum_{delta, K} (-1)^|K| L_{delta_K open} * L_{delta^K(K, y1)}.
  LL mass;
  for (const auto& [y1, coeff] : a) {
    mass += coeff;
    for (const Cone& delta : cf.faces()) {
      for_each_subset(n, [&](const std::vector<size_t>& kk) {
        auto fin = finite_part(cf, delta, kk, y1);
        if (fin.empty()) return;
        std::vector<long> den;
        long shift = 0;
        for (size_t l : delta) {
          const IVec& r = cf.rays()[l];
          if (std::all_of(kk.begin(), kk.end(), [&](size_t i) { return r[i] == 0; })) {
            den.push_back(e[l]);
            shift += e[l];
          }
        }
        IntPoly num;
        for (const auto& f : fin) num += IntPoly::monomial(size_t(shift + dot(f, lambda0)));
        out.coeffs.push_back(kk.size() % 2 ? -coeff : coeff);
        out.terms.push_back({num, den});
      });
    }
  }
  for (size_t t = 0; t < out.terms.size(); ++t)
    out.via_decomposition += out.coeffs[t] * LL(out.terms[t].special_value(out.residue.a, unsigned(k)));
  Rational scaled = out.residue.chi * Rational(boost::multiprecision::pow(Int(out.residue.a), unsigned(k)));
  MTZ_ASSERT(denominator(scaled) == 1, "a^rk chi is not an integer");
  out.via_chi = mass * LL(numerator(scaled));

  // Brute force: sum_{y1} a(y1) sum_{y in Lambda cap i(M), y >= y1} T^y.
  box_points(n, 0, trunc, [&](const IVec& y) {
    long s = 0;
    for (long long x : y) s += long(x);
    if (s > trunc || !im.contains(y)) return;
    for (const auto& [y1, coeff] : a) {
      bool ge = true;
      for (size_t i = 0; i < n; ++i) ge &= y[i] >= y1[i];
      if (ge) {
        std::vector<int> t(y.begin(), y.end());
        out.series.add_term({t, {}}, coeff);
      }
    }
  });
  return out;
}

ConeFan preset_cone_fan(const std::string& name) {
  if (name == "quadrant") return validate_cone_fan({"quadrant", 2, {{1, 0}, {0, 1}}, {{0, 1}}, {}});
  if (name == "subdivided")
    return validate_cone_fan({"subdivided", 2, {{1, 0}, {1, 1}, {1, 2}}, {{0, 1}, {1, 2}}, {{1, 0}, {1, 2}}});
  if (name == "ray") return validate_cone_fan({"ray", 1, {{1}}, {{0}}, {}});
  throw Error(ErrorKind::InvalidArgument, "unknown cone fan preset '" + name + "'");
}

}  // namespace mtz
