#include "mtz/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mtz/errors.hpp"

namespace mtz {

void ZPoly::add(const std::vector<int>& exps, const Int& c) {
  if (c == 0) return;
  if (nvars == 0) nvars = exps.size();
  auto [it, inserted] = terms.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly r;
  r.nvars = std::max(a.nvars, b.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      std::vector<int> e(ea);
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add(e, ca * cb);
    }
  return r;
}

int ZPoly::min_nonconstant_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms) {
    int d = 0;
    for (int x : e) d += x;
    if (d > 0 && (best == 0 || d < best)) best = d;
  }
  return best;
}

LL ZPoly::evaluate_all_at(const LL& x) const {
  LL r;
  for (const auto& [e, c] : terms) {
    unsigned d = 0;
    for (int v : e) d += unsigned(v);
    r += LL(c) * x.pow(d);
  }
  return r;
}

std::string ZPoly::to_string(const std::string& var) const {
  if (terms.empty()) return "0";
  // Order by total degree, then reverse-lex on exponents so X1X2 precedes X3X4.
  std::vector<std::pair<std::vector<int>, Int>> v(terms.begin(), terms.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    if (da != db) return da < db;
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c0] : v) {
    Int c = c0;
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool constant = true;
    for (int x : e) constant &= x == 0;
    if (constant) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    bool firstvar = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << var << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

IVec ToricSequence::apply_gamma(const IVec& m) const { return matvec(gamma, m); }

IVec ToricSequence::apply_gamma_dual(const IVec& d) const { return matvec(transpose(gamma), d); }

namespace {

IMat cone_matrix(const std::vector<IVec>& rays, const Cone& c) {
  IMat cols;
  for (size_t i : c) cols.push_back(rays[i]);
  return transpose(cols);
}

}  // namespace

Fan validate_fan(const RawFan& raw) {
  const size_t n = raw.rank;
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "fan rank must be positive");
  if (raw.rays.empty()) throw Error(ErrorKind::InvalidArgument, "fan has no rays");
  for (size_t i = 0; i < raw.rays.size(); ++i) {
    const IVec& r = raw.rays[i];
    if (r.size() != n) throw Error(ErrorKind::InvalidArgument, "ray " + std::to_string(i) + " has wrong length");
    if (is_zero(r)) throw Error(ErrorKind::InvalidArgument, "ray " + std::to_string(i) + " is zero");
    if (gcd_of(r) != 1)
      throw Error(ErrorKind::NonPrimitiveRay, "ray " + std::to_string(i) + " " + to_string(r) + " is not primitive");
    for (size_t j = 0; j < i; ++j)
      if (raw.rays[j] == r)
        throw Error(ErrorKind::DuplicateRay, "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  Fan f;
  f.name_ = raw.name;
  f.rank_ = n;
  f.rays_ = raw.rays;
  std::set<Cone> seen;
  std::vector<bool> used(raw.rays.size(), false);
  for (const Cone& c0 : raw.max_cones) {
    Cone c = c0;
    std::sort(c.begin(), c.end());
    for (size_t i : c)
      if (i >= raw.rays.size()) throw Error(ErrorKind::InvalidArgument, "cone index " + std::to_string(i) + " out of range");
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(ErrorKind::InvalidArgument, "cone repeats a ray");
    if (!seen.insert(c).second) throw Error(ErrorKind::InvalidArgument, "maximal cone listed twice");
    if (c.size() != n)
      throw Error(ErrorKind::NonUnimodularCone, "maximal cone with " + std::to_string(c.size()) +
                                                    " rays is not simplicial of full dimension");
    IMat m = cone_matrix(raw.rays, c);
    Int d = determinant(m);
    if (d != 1 && d != -1)
      throw Error(ErrorKind::NonUnimodularCone, "cone determinant " + d.str());
    for (size_t i : c) used[i] = true;
    f.max_cones_.push_back(c);
    f.inverses_.push_back(unimodular_inverse(m));
  }
  if (f.max_cones_.empty()) throw Error(ErrorKind::InvalidArgument, "fan has no maximal cones");
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw Error(ErrorKind::InvalidArgument, "ray " + std::to_string(i) + " lies in no maximal cone");

  // Each wall borders exactly two maximal cones, lying on opposite sides of it.
  for (size_t ci = 0; ci < f.max_cones_.size(); ++ci) {
    const Cone& c = f.max_cones_[ci];
    for (size_t drop = 0; drop < c.size(); ++drop) {
      Cone wall;
      for (size_t k = 0; k < c.size(); ++k)
        if (k != drop) wall.push_back(c[k]);
      std::vector<size_t> others;
      for (size_t cj = 0; cj < f.max_cones_.size(); ++cj)
        if (cj != ci && std::includes(f.max_cones_[cj].begin(), f.max_cones_[cj].end(), wall.begin(), wall.end()))
          others.push_back(cj);
      if (others.size() != 1)
        throw Error(ErrorKind::WallConditionViolation,
                    "wall of cone " + std::to_string(ci) + " borders " + std::to_string(others.size() + 1) +
                        " maximal cones");
      const Cone& o = f.max_cones_[others[0]];
      size_t b = 0;
      for (size_t r : o)
        if (!std::binary_search(wall.begin(), wall.end(), r)) b = r;
      const IVec& normal = f.inverses_[ci][drop];
      if (dot(normal, raw.rays[b]) >= 0)
        throw Error(ErrorKind::WallConditionViolation,
                    "cones " + std::to_string(ci) + " and " + std::to_string(others[0]) + " overlap across a wall");
    }
  }

  std::set<Cone> faces;
  for (const Cone& c : f.max_cones_) {
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

  f.seq_.gamma = raw.rays;
  f.seq_.pic_rank = raw.rays.size() - n;
  if (matrix_rank(f.seq_.gamma) != n) throw Error(ErrorKind::InvalidArgument, "rays do not span");
  return f;
}

IVec ConeDecomposition::ray_degrees(size_t num_rays) const {
  IVec d(num_rays, 0);
  for (size_t i = 0; i < cone.size(); ++i) d[cone[i]] = coeffs[i];
  return d;
}

ConeDecomposition cone_decompose(const Fan& fan, const IVec& m) {
  if (m.size() != fan.rank()) throw Error(ErrorKind::InvalidArgument, "point rank mismatch");
  ConeDecomposition out;
  if (is_zero(m)) return out;
  for (size_t i = 0; i < fan.max_cones().size(); ++i) {
    IVec c = matvec(fan.cone_inverse(i), m);
    if (std::any_of(c.begin(), c.end(), [](long long x) { return x < 0; })) continue;
    const Cone& cone = fan.max_cones()[i];
    for (size_t k = 0; k < c.size(); ++k)
      if (c[k] > 0) {
        out.cone.push_back(cone[k]);
        out.coeffs.push_back(c[k]);
      }
    return out;
  }
  throw Error(ErrorKind::InvariantViolation, "point " + to_string(m) + " lies in no cone of a complete fan");
}

IVec recompose(const Fan& fan, const ConeDecomposition& c) {
  IVec m(fan.rank(), 0);
  for (size_t i = 0; i < c.cone.size(); ++i) m = m + c.coeffs[i] * fan.rays()[c.cone[i]];
  return m;
}

ZPoly q_sigma(const Fan& fan) {
  const size_t k = fan.num_rays();
  ZPoly q;
  q.nvars = k;
  for (const Cone& s : fan.faces()) {
    std::vector<size_t> rest;
    for (size_t a = 0; a < k; ++a)
      if (!std::binary_search(s.begin(), s.end(), a)) rest.push_back(a);
    // prod_{a in s} X_a * prod_{a in rest} (1 - X_a), expanded over subsets of rest.
    for (unsigned mask = 0; mask < (1u << rest.size()); ++mask) {
      std::vector<int> e(k, 0);
      for (size_t a : s) e[a] = 1;
      int sign = 1;
      for (size_t i = 0; i < rest.size(); ++i)
        if (mask & (1u << i)) {
          e[rest[i]] = 1;
          sign = -sign;
        }
      q.add(e, sign);
    }
  }
  return q;
}

LL class_of_X(const Fan& fan) {
  const LL lm1 = LL::L() - LL(1);
  LL r;
  for (const Cone& s : fan.faces()) r += lm1.pow(unsigned(fan.rank() - s.size()));
  return r;
}

LL q_sigma_at_Linv(const Fan& fan) {
  LL v = q_sigma(fan).evaluate_all_at(LL::monomial(-1));
  LL expect = (LL(1) - LL::monomial(-1)).pow(unsigned(fan.pic_rank())) * class_of_X(fan).shifted(-long(fan.rank()));
  MTZ_ASSERT(v == expect, "Q_Sigma(L^-1) = " + v.to_string() + " but (1-L^-1)^r [X] L^-n = " + expect.to_string());
  return v;
}

long long anticanonical_degree(const IVec& d) {
  long long s = 0;
  for (long long x : d) s += x;
  return s;
}

Fan product_fan(const Fan& a, const Fan& b) {
  RawFan r;
  r.name = a.name() + "x" + b.name();
  r.rank = a.rank() + b.rank();
  for (const IVec& v : a.rays()) {
    IVec w(v);
    w.resize(r.rank, 0);
    r.rays.push_back(w);
  }
  for (const IVec& v : b.rays()) {
    IVec w(a.rank(), 0);
    w.insert(w.end(), v.begin(), v.end());
    r.rays.push_back(w);
  }
  for (const Cone& ca : a.max_cones())
    for (const Cone& cb : b.max_cones()) {
      Cone c(ca);
      for (size_t i : cb) c.push_back(i + a.num_rays());
      r.max_cones.push_back(c);
    }
  return validate_fan(r);
}

}  // namespace mtz
