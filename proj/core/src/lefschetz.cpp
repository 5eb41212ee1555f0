#include "mtz/lefschetz.hpp"

#include <cmath>
#include <sstream>

#include "mtz/errors.hpp"

namespace mtz {

long VirtualDim::value() const {
  if (!v_) throw Error(ErrorKind::InvalidArgument, "virtual dimension is -infinity");
  return *v_;
}

std::strong_ordering operator<=>(const VirtualDim& a, const VirtualDim& b) {
  if (a.is_minus_infinity() || b.is_minus_infinity())
    return (!a.is_minus_infinity()) <=> (!b.is_minus_infinity());
  return *a.v_ <=> *b.v_;
}

std::string VirtualDim::to_string() const {
  return v_ ? std::to_string(*v_) : std::string("-inf");
}

LL LL::monomial(long exp, const Int& c) {
  LL r;
  r.add_term(exp, c);
  return r;
}

LL LL::from_terms(const Terms& t) {
  LL r;
  for (const auto& [e, c] : t) r.add_term(e, c);
  return r;
}

Int LL::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

long LL::top_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "top exponent of zero");
  return terms_.rbegin()->first;
}

long LL::bottom_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "bottom exponent of zero");
  return terms_.begin()->first;
}

void LL::add_term(long exp, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LL& LL::operator+=(const LL& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LL& LL::operator-=(const LL& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LL operator*(const LL& a, const LL& b) {
  LL r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LL& LL::operator*=(const LL& o) { return *this = *this * o; }

LL LL::operator-() const {
  LL r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LL LL::shifted(long k) const {
  LL r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LL LL::pow(unsigned n) const {
  LL result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

LL LL::truncated_below(long precision) const {
  LL r;
  for (auto it = terms_.lower_bound(-precision); it != terms_.end(); ++it)
    r.terms_.emplace(it->first, it->second);
  return r;
}

std::optional<LL> LL::divide_exact(const LL& d) const {
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero class");
  if (is_zero()) return LL();
  // Normalise both to polynomials with nonzero constant term, then long-divide from the top.
  const long a0 = bottom_exponent(), d0 = d.bottom_exponent();
  std::vector<Int> num(top_exponent() - a0 + 1), den(d.top_exponent() - d0 + 1);
  for (const auto& [e, c] : terms_) num[e - a0] = c;
  for (const auto& [e, c] : d.terms_) den[e - d0] = c;
  if (den.size() > num.size()) return std::nullopt;
  const Int& lead = den.back();
  LL q;
  for (long i = long(num.size()) - long(den.size()); i >= 0; --i) {
    const Int& top = num[i + den.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    Int f = top / lead;
    for (size_t k = 0; k < den.size(); ++k) num[i + k] -= f * den[k];
    q.add_term(i + a0 - d0, f);
  }
  for (const auto& c : num)
    if (c != 0) return std::nullopt;
  return q;
}

std::string LL::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Int c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "L";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

VirtualDim virtual_dim(const LL& a) {
  return a.is_zero() ? VirtualDim::minus_infinity() : VirtualDim::of(a.top_exponent());
}

Rational specialize_q(const LL& a, const Int& q) {
  if (q < 2) throw Error(ErrorKind::InvalidArgument, "specialize_q needs q >= 2");
  Rational r = 0;
  for (const auto& [e, c] : a.terms()) {
    Int p = boost::multiprecision::pow(q, static_cast<unsigned>(e < 0 ? -e : e));
    r += e >= 0 ? Rational(c * p) : Rational(c, p);
  }
  return r;
}

long double specialize_q_numeric(const LL& a, long double q) {
  long double r = 0;
  for (const auto& [e, c] : a.terms())
    r += static_cast<long double>(c) * std::pow(q, static_cast<long double>(e));
  return r;
}

std::optional<Rational> radius_estimate(const std::vector<LL>& prefix) {
  if (prefix.empty()) throw Error(ErrorKind::EmptyPrefix, "radius_estimate needs at least one coefficient");
  std::optional<Rational> best;
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i].is_zero()) continue;
    Rational v(prefix[i].top_exponent(), static_cast<long>(i + 1));
    if (!best || v > *best) best = v;
  }
  return best;
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace mtz
