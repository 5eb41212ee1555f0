#include "mtz/rational_function.hpp"

#include "mtz/errors.hpp"

namespace mtz {

IntPoly::IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(size_t e, const Int& c) {
  std::vector<Int> v(e + 1, 0);
  v[e] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::one_minus_t_pow(size_t a) { return monomial(0) - monomial(a); }

Int IntPoly::eval_at_one() const {
  Int s = 0;
  for (const auto& x : c_) s += x;
  return s;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != 0)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned n) const {
  IntPoly r = monomial(0);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (is_zero()) return {};
  std::vector<Int> num = c_;
  const size_t dn = d.c_.size();
  if (num.size() < dn) throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
  std::vector<Int> q(num.size() - dn + 1, 0);
  const Int& lead = d.c_.back();
  for (long i = long(q.size()) - 1; i >= 0; --i) {
    const Int& top = num[size_t(i) + dn - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
    q[size_t(i)] = top / lead;
    for (size_t k = 0; k < dn; ++k) num[size_t(i) + k] -= q[size_t(i)] * d.c_[k];
  }
  for (const auto& x : num)
    if (x != 0) throw Error(ErrorKind::InvariantViolation, "inexact polynomial division");
  return IntPoly(std::move(q));
}

std::vector<Int> RationalTerm::expand(long level) const {
  std::vector<Int> s(size_t(level + 1), 0);
  for (size_t i = 0; i < numerator.coeffs().size() && long(i) <= level; ++i) s[i] = numerator.coeffs()[i];
  for (long e : denominators) {
    if (e <= 0) throw Error(ErrorKind::InvalidArgument, "denominator exponent must be positive");
    for (long k = e; k <= level; ++k) s[size_t(k)] += s[size_t(k - e)];
  }
  return s;
}

Int RationalTerm::special_value(long a, unsigned k) const {
  if (denominators.size() > k) throw Error(ErrorKind::InvalidArgument, "pole order exceeds the clearing power");
  IntPoly p = numerator;
  const IntPoly clear = IntPoly::one_minus_t_pow(size_t(a));
  for (long e : denominators) {
    if (a % e != 0) throw Error(ErrorKind::InvalidArgument, "denominator exponent does not divide a");
    p = p * clear.divide_exact(IntPoly::one_minus_t_pow(size_t(e)));
  }
  p = p * clear.pow(unsigned(k - denominators.size()));
  return p.eval_at_one();
}

std::vector<Int> expand_sum(const std::vector<RationalTerm>& terms, long level) {
  std::vector<Int> s(size_t(level + 1), 0);
  for (const auto& t : terms) {
    auto e = t.expand(level);
    for (size_t i = 0; i < s.size(); ++i) s[i] += e[i];
  }
  return s;
}

}  // namespace mtz
