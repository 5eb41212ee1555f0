#include "mtz/graded_series.hpp"

#include <numeric>
#include <sstream>

#include "mtz/errors.hpp"

namespace mtz {

int GradedMonomial::total_degree() const { return std::accumulate(t.begin(), t.end(), 0); }

GradedMonomial GradedMonomial::operator*(const GradedMonomial& o) const {
  GradedMonomial r = *this;
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] += o.t[i];
  for (size_t i = 0; i < r.z.size(); ++i) r.z[i] += o.z[i];
  return r;
}

GradedSeries::GradedSeries(size_t num_t, size_t num_z, int trunc, std::optional<std::vector<int>> box)
    : num_t_(num_t), num_z_(num_z), trunc_(trunc), box_(std::move(box)) {
  if (box_ && box_->size() != num_t_)
    throw Error(ErrorKind::InvalidArgument, "box bound has wrong length");
  for (size_t i = 0; i < num_t_; ++i) t_vars_.push_back("T" + std::to_string(i + 1));
}

GradedSeries GradedSeries::one(size_t num_t, size_t num_z, int trunc, std::optional<std::vector<int>> box) {
  GradedSeries s(num_t, num_z, trunc, std::move(box));
  s.add_term({std::vector<int>(num_t, 0), std::vector<long>(num_z, 0)}, LL(1));
  return s;
}

void GradedSeries::set_t_vars(std::vector<std::string> names) {
  if (names.size() != num_t_) throw Error(ErrorKind::InvalidArgument, "t_vars length mismatch");
  t_vars_ = std::move(names);
}

bool GradedSeries::admits_t(const std::vector<int>& t) const {
  int total = 0;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0) return false;
    if (box_ && t[i] > (*box_)[i]) return false;
    total += t[i];
  }
  return total <= trunc_;
}

bool GradedSeries::admits(const GradedMonomial& m) const { return admits_t(m.t); }

GradedSeries GradedSeries::empty_like() const {
  GradedSeries s(num_t_, num_z_, trunc_, box_);
  s.t_vars_ = t_vars_;
  return s;
}

LL GradedSeries::coeff(const GradedMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LL() : it->second;
}

LL GradedSeries::constant_term() const {
  return coeff({std::vector<int>(num_t_, 0), std::vector<long>(num_z_, 0)});
}

void GradedSeries::add_term(const GradedMonomial& m, const LL& c) {
  if (m.t.size() != num_t_ || m.z.size() != num_z_)
    throw Error(ErrorKind::InvalidArgument, "monomial shape mismatch");
  if (c.is_zero() || !admits(m)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  if (a.num_t_ != b.num_t_ || a.num_z_ != b.num_z_)
    throw Error(ErrorKind::InvalidArgument, "series shape mismatch");
  GradedSeries r = a.empty_like();
  r.trunc_ = std::min(a.trunc_, b.trunc_);
  if (b.box_) {
    if (!r.box_) r.box_ = b.box_;
    else
      for (size_t i = 0; i < a.num_t_; ++i) (*r.box_)[i] = std::min((*r.box_)[i], (*b.box_)[i]);
  }
  std::vector<int> t(a.num_t_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t i = 0; i < t.size(); ++i) t[i] = ma.t[i] + mb.t[i];
      if (!r.admits_t(t)) continue;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

GradedSeries GradedSeries::scaled(const LL& c) const {
  GradedSeries r = empty_like();
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

namespace {

GradedMonomial shift(const GradedMonomial& m, const LineMonomial& mu) {
  GradedMonomial r = m;
  for (size_t i = 0; i < r.t.size(); ++i) r.t[i] += mu.t[i];
  for (size_t i = 0; i < r.z.size(); ++i) r.z[i] += mu.z[i];
  return r;
}

void check_line(const LineMonomial& mu, size_t nt, size_t nz) {
  if (mu.t.size() != nt || mu.z.size() != nz)
    throw Error(ErrorKind::InvalidArgument, "line monomial shape mismatch");
  bool positive = false;
  for (int e : mu.t) {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative T-exponent in line monomial");
    positive |= e > 0;
  }
  if (!positive) throw Error(ErrorKind::InvalidArgument, "line monomial must carry a T-exponent");
}

}  // namespace

void GradedSeries::divide_one_minus(const LineMonomial& mu, unsigned k) {
  check_line(mu, num_t_, num_z_);
  for (unsigned pass = 0; pass < k; ++pass) {
    // Keys only move upward in the (t, z) order, so a single ascending sweep
    // accumulates the whole geometric series.
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
      GradedMonomial target = shift(it->first, mu);
      if (!admits(target)) continue;
      add_term(target, it->second.shifted(mu.j));
    }
  }
}

void GradedSeries::multiply_one_minus(const LineMonomial& mu, unsigned k) {
  check_line(mu, num_t_, num_z_);
  for (unsigned pass = 0; pass < k; ++pass) {
    GradedSeries r = *this;
    for (const auto& [m, c] : terms_) {
      GradedMonomial target = shift(m, mu);
      if (admits(target)) r.add_term(target, -c.shifted(mu.j));
    }
    terms_ = std::move(r.terms_);
  }
}

void GradedSeries::apply_factor(const LineMonomial& mu, const Int& c) {
  if (c > 0) divide_one_minus(mu, static_cast<unsigned>(c));
  else if (c < 0) multiply_one_minus(mu, static_cast<unsigned>(-c));
}

GradedSeries GradedSeries::z_zero_part() const {
  GradedSeries r = empty_like();
  for (const auto& [m, c] : terms_) {
    bool zero = true;
    for (long v : m.z) zero &= v == 0;
    if (zero) r.terms_.emplace(m, c);
  }
  return r;
}

GradedSeries GradedSeries::z_to_one() const {
  GradedSeries r(num_t_, 0, trunc_, box_);
  r.t_vars_ = t_vars_;
  for (const auto& [m, c] : terms_) r.add_term({m.t, {}}, c);
  return r;
}

GradedSeries GradedSeries::retruncated(int trunc, std::optional<std::vector<int>> box) const {
  GradedSeries r(num_t_, num_z_, trunc, box ? box : box_);
  r.t_vars_ = t_vars_;
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

std::string GradedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (size_t i = 0; i < m.t.size(); ++i)
      if (m.t[i]) os << "*" << t_vars_[i] << (m.t[i] > 1 ? "^" + std::to_string(m.t[i]) : "");
    bool zero = true;
    for (long v : m.z) zero &= v == 0;
    if (!zero) {
      os << "*z^(";
      for (size_t i = 0; i < m.z.size(); ++i) os << (i ? "," : "") << m.z[i];
      os << ")";
    }
  }
  return os.str();
}

}  // namespace mtz
