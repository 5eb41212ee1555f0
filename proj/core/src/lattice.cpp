#include "mtz/lattice.hpp"

#include <numeric>
#include <sstream>

#include "mtz/errors.hpp"

namespace mtz {

IVec operator+(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IVec operator-(const IVec& a, const IVec& b) {
  IVec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IVec operator*(long long k, const IVec& a) {
  IVec r(a);
  for (auto& x : r) x *= k;
  return r;
}

long long dot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long long gcd_of(const IVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  return g;
}

bool is_zero(const IVec& v) {
  for (long long x : v)
    if (x) return false;
  return true;
}

std::string to_string(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

IMat transpose(const IMat& a) {
  if (a.empty()) return {};
  IMat t(a[0].size(), IVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IMat matmul(const IMat& a, const IMat& b) {
  const size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  IMat r(a.size(), IVec(cols, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k)
      if (a[i][k])
        for (size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

IVec matvec(const IMat& a, const IVec& v) {
  IVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

IMat identity(size_t n) {
  IMat r(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

Int determinant(const IMat& a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
    for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  }
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

using RMat = std::vector<std::vector<Rational>>;

RMat to_rational(const IMat& a) {
  RMat r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (long long x : a[i]) r[i].emplace_back(x);
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(RMat& m) {
  std::vector<size_t> piv;
  if (m.empty()) return piv;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

size_t matrix_rank(const IMat& a) {
  RMat m = to_rational(a);
  return rref(m).size();
}

std::vector<Rational> solve_rational(const IMat& a, const IVec& b) {
  const size_t n = a.size();
  RMat m = to_rational(a);
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::InvalidArgument, "solve_rational needs a square matrix");
    m[i].emplace_back(b[i]);
  }
  auto piv = rref(m);
  if (piv.size() != n || piv.back() != n - 1)
    throw Error(ErrorKind::InvalidArgument, "singular system");
  std::vector<Rational> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

IMat unimodular_inverse(const IMat& a) {
  const size_t n = a.size();
  Int d = determinant(a);
  if (d != 1 && d != -1) throw Error(ErrorKind::NonUnimodularCone, "matrix is not unimodular");
  IMat inv(n, IVec(n));
  for (size_t j = 0; j < n; ++j) {
    IVec e(n, 0);
    e[j] = 1;
    auto col = solve_rational(a, e);
    for (size_t i = 0; i < n; ++i) inv[i][j] = static_cast<long long>(numerator(col[i]));
  }
  return inv;
}

Int gcd_maximal_minors(const IMat& a) {
  const size_t k = a.size();
  if (k == 0) return 1;
  const size_t n = a[0].size();
  if (k > n) return 0;
  Int g = 0;
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    IMat sub(k, IVec(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) sub[i][j] = a[i][idx[j]];
    Int d = determinant(sub);
    if (d < 0) d = -d;
    g = boost::multiprecision::gcd(g, d);
    // next combination
    long i = long(k) - 1;
    while (i >= 0 && idx[i] == n - k + size_t(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (size_t j = size_t(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

namespace {

// Integer row echelon form of `rows`, carrying the same row operations on `track`.
// Zero rows are moved to the end; returns the number of nonzero rows.
size_t integer_echelon(IMat& rows, IMat* track, std::vector<size_t>* pivots) {
  const size_t m = rows.size();
  if (m == 0) return 0;
  const size_t n = rows[0].size();
  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(rows[i], rows[j]);
    if (track) std::swap((*track)[i], (*track)[j]);
  };
  auto axpy = [&](size_t dst, long long f, size_t src) {  // rows[dst] -= f * rows[src]
    for (size_t c = 0; c < n; ++c) rows[dst][c] -= f * rows[src][c];
    if (track)
      for (size_t c = 0; c < (*track)[dst].size(); ++c) (*track)[dst][c] -= f * (*track)[src][c];
  };
  auto negate = [&](size_t i) {
    for (auto& x : rows[i]) x = -x;
    if (track)
      for (auto& x : (*track)[i]) x = -x;
  };
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      // Smallest nonzero |entry| in column c among rows r.. becomes the pivot.
      size_t best = m;
      for (size_t i = r; i < m; ++i)
        if (rows[i][c] != 0 && (best == m || std::llabs(rows[i][c]) < std::llabs(rows[best][c]))) best = i;
      if (best == m) break;
      swap_rows(r, best);
      bool done = true;
      for (size_t i = r + 1; i < m; ++i) {
        if (rows[i][c] == 0) continue;
        axpy(i, rows[i][c] / rows[r][c], r);
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) negate(r);
    for (size_t i = 0; i < r; ++i) {
      long long q = rows[i][c] / rows[r][c];
      if (rows[i][c] - q * rows[r][c] < 0) --q;
      if (q) axpy(i, q, r);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

IMat integer_kernel(const IMat& a) {
  if (a.empty()) return {};
  const size_t n = a[0].size();
  IMat rows = transpose(a);
  IMat track = identity(n);
  size_t r = integer_echelon(rows, &track, nullptr);
  IMat ker;
  for (size_t i = r; i < n; ++i) ker.push_back(track[i]);
  return ker;
}

Sublattice::Sublattice(size_t ambient_rank, const std::vector<IVec>& generators)
    : n_(ambient_rank), gens_(generators) {
  IMat rows;
  for (const auto& g : generators) {
    if (g.size() != n_) throw Error(ErrorKind::InvalidArgument, "generator rank mismatch");
    if (!is_zero(g)) rows.push_back(g);
  }
  size_t r = integer_echelon(rows, nullptr, &pivots_);
  rows.resize(r);
  hnf_ = std::move(rows);
}

Sublattice Sublattice::full(size_t n) {
  std::vector<IVec> g;
  for (size_t i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    g.push_back(e);
  }
  return Sublattice(n, g);
}

IVec Sublattice::reduce(const IVec& v) const {
  if (v.size() != n_) throw Error(ErrorKind::InvalidArgument, "vector rank mismatch");
  IVec r = v;
  for (size_t i = 0; i < hnf_.size(); ++i) {
    const size_t c = pivots_[i];
    const long long h = hnf_[i][c];
    long long q = r[c] / h;
    if (r[c] - q * h < 0) --q;
    if (q)
      for (size_t j = 0; j < n_; ++j) r[j] -= q * hnf_[i][j];
  }
  return r;
}

bool Sublattice::contains(const IVec& v) const { return is_zero(reduce(v)); }

std::optional<Int> Sublattice::index() const {
  if (hnf_.size() != n_) return std::nullopt;
  Int d = 1;
  for (size_t i = 0; i < n_; ++i) d *= hnf_[i][pivots_[i]];
  return d;
}

}  // namespace mtz
