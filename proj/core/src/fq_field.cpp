#include "mtz/fq_field.hpp"

#include <set>

#include "mtz/errors.hpp"

namespace mtz {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Base-p digits <-> polynomial over F_p.
std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(size_t(k), 0);
  for (int i = 0; i < k; ++i, a /= p) d[size_t(i)] = a % p;
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

FqField::FqField(int q) : q_(q) {
  if (q < 2 || q > 256) throw Error(ErrorKind::InvalidArgument, "field size must lie in [2, 256]");
  p_ = 0;
  for (int p = 2; p <= q; ++p)
    if (q % p == 0) {
      p_ = p;
      break;
    }
  k_ = 0;
  for (int t = q; t > 1; t /= p_) {
    if (t % p_) throw Error(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
    ++k_;
  }
  if (!is_prime(p_)) throw Error(ErrorKind::InvalidArgument, "bad characteristic");

  // Modulus: first monic degree-k polynomial that is not a product of two lower-degree monics.
  std::vector<int> modulus;
  if (k_ > 1) {
    std::set<std::vector<int>> reducible;
    auto mul_p = [&](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> r(a.size() + b.size() - 1, 0);
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
      return r;
    };
    auto monic = [&](int deg, int idx) {
      std::vector<int> f = digits(idx, p_, deg);
      f.push_back(1);
      return f;
    };
    int count_small = 1;
    for (int a = 1; a <= k_ / 2; ++a) {
      count_small *= p_;
      int count_big = 1;
      for (int i = 0; i < k_ - a; ++i) count_big *= p_;
      for (int i = 0; i < count_small; ++i)
        for (int j = 0; j < count_big; ++j) reducible.insert(mul_p(monic(a, i), monic(k_ - a, j)));
    }
    for (int i = 0; i < q_; ++i) {
      auto f = monic(k_, i);
      if (!reducible.count(f)) {
        modulus = f;
        break;
      }
    }
  }

  add_.resize(size_t(q_ * q_));
  mul_.resize(size_t(q_ * q_));
  neg_.resize(size_t(q_));
  inv_.assign(size_t(q_), 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p_, k_);
    std::vector<int> dn(da);
    for (auto& x : dn) x = (p_ - x) % p_;
    neg_[size_t(a)] = undigits(dn, p_);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p_, k_);
      std::vector<int> s(static_cast<size_t>(k_));
      for (int i = 0; i < k_; ++i) s[size_t(i)] = (da[size_t(i)] + db[size_t(i)]) % p_;
      add_[size_t(a * q_ + b)] = undigits(s, p_);
      std::vector<int> m(size_t(2 * k_ - 1), 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) m[size_t(i + j)] = (m[size_t(i + j)] + da[size_t(i)] * db[size_t(j)]) % p_;
      for (int i = 2 * k_ - 2; i >= k_; --i) {
        int c = m[size_t(i)];
        if (!c) continue;
        for (int j = 0; j <= k_; ++j)
          m[size_t(i - k_ + j)] = ((m[size_t(i - k_ + j)] - c * modulus[size_t(j)]) % p_ + p_) % p_;
      }
      m.resize(size_t(k_));
      mul_[size_t(a * q_ + b)] = undigits(m, p_);
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) inv_[size_t(a)] = b;
  for (int a = 1; a < q_; ++a) MTZ_ASSERT(inv_[size_t(a)] != 0, "field table has a zero divisor");
}

int FqField::inv(int a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  return inv_[size_t(a)];
}

void fq_trim(FqPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FqPoly fq_mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  fq_trim(r);
  return r;
}

FqPoly fq_mod(const FqField& F, FqPoly a, const FqPoly& b) {
  fq_trim(a);
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    const int c = a.back();
    const size_t shift = a.size() - 1 - db;
    for (size_t j = 0; j <= db; ++j) a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    fq_trim(a);
  }
  return a;
}

std::vector<FqPoly> monic_irreducibles(const FqField& F, int e) {
  if (e < 1) return {};
  const int q = F.q();
  auto monic = [&](int deg, long idx) {
    FqPoly f(size_t(deg) + 1, 0);
    for (int i = 0; i < deg; ++i, idx /= q) f[size_t(i)] = int(idx % q);
    f[size_t(deg)] = 1;
    return f;
  };
  long total = 1;
  for (int i = 0; i < e; ++i) total *= q;
  std::vector<FqPoly> smaller;
  for (int a = 1; a <= e / 2; ++a)
    for (auto& f : monic_irreducibles(F, a)) smaller.push_back(f);
  std::vector<FqPoly> out;
  for (long i = 0; i < total; ++i) {
    FqPoly f = monic(e, i);
    bool irreducible = true;
    for (const auto& g : smaller)
      if (fq_mod(F, f, g).empty()) {
        irreducible = false;
        break;
      }
    if (irreducible) out.push_back(f);
  }
  return out;
}

}  // namespace mtz
