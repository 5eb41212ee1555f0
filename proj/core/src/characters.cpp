#include "mtz/characters.hpp"

#include "mtz/errors.hpp"

namespace mtz {

namespace {

void add_to(PointMap& map, const IVec& m, const LL& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) map.erase(it);
  }
}

void check_rank(const IVec& m, size_t n) {
  if (m.size() != n) throw Error(ErrorKind::InvalidArgument, "lattice point has rank " +
                                                                 std::to_string(m.size()) + ", expected " +
                                                                 std::to_string(n));
}

}  // namespace

void CharFunction::add(const IVec& m, const LL& v) {
  check_rank(m, rank_);
  add_to(support_, m, v);
}

LL CharFunction::value(const IVec& m) const {
  auto it = support_.find(m);
  return it == support_.end() ? LL() : it->second;
}

CharFunction CharFunction::translated(const IVec& a) const {
  check_rank(a, rank_);
  CharFunction r(rank_);
  for (const auto& [m, v] : support_) r.support_.emplace(m + a, v);
  return r;
}

CharSum CharSum::ev(const IVec& m, const LL& c) {
  CharSum s(m.size());
  s.add(m, c);
  return s;
}

LL CharSum::coeff(const IVec& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LL() : it->second;
}

void CharSum::add(const IVec& m, const LL& c) {
  check_rank(m, rank_);
  add_to(terms_, m, c);
}

CharSum& CharSum::operator+=(const CharSum& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

CharSum operator*(const CharSum& a, const CharSum& b) {
  if (a.rank_ != b.rank_) throw Error(ErrorKind::InvalidArgument, "character rank mismatch");
  CharSum r(a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) add_to(r.terms_, ma + mb, ca * cb);
  return r;
}

VirtualDim CharSum::dim() const {
  VirtualDim d = VirtualDim::minus_infinity();
  for (const auto& [m, c] : terms_) d = std::max(d, virtual_dim(c));
  return d;
}

CharSum CharSum::reduced_modulo(const Sublattice& relations) const {
  CharSum r(rank_);
  for (const auto& [m, c] : terms_) r.add(relations.reduce(m), c);
  return r;
}

LatticeSplit::LatticeSplit(const std::vector<IVec>& prime_basis, const std::vector<IVec>& second_basis)
    : k_(prime_basis.size()) {
  n_ = k_ + second_basis.size();
  IMat cols;
  for (const auto& v : prime_basis) cols.push_back(v);
  for (const auto& v : second_basis) cols.push_back(v);
  for (const auto& v : cols)
    if (v.size() != n_) throw Error(ErrorKind::NonComplementaryBasis, "basis vectors must have rank " + std::to_string(n_));
  const IMat b = transpose(cols);
  Int d = n_ ? determinant(b) : Int(1);
  if (d != 1 && d != -1)
    throw Error(ErrorKind::NonComplementaryBasis, "bases do not span a direct sum decomposition (det " +
                                                      d.str() + ")");
  inv_ = n_ ? unimodular_inverse(b) : IMat{};
}

IVec LatticeSplit::coordinates(const IVec& m) const {
  check_rank(m, n_);
  return matvec(inv_, m);
}

CharSum fourier(const CharFunction& psi) {
  CharSum s(psi.rank());
  for (const auto& [m, v] : psi.support()) s.add(m, v);
  return s;
}

LL integrate_dual(const CharSum& s, const Sublattice& n) {
  if (n.ambient_rank() != s.rank()) throw Error(ErrorKind::InvalidArgument, "sublattice rank mismatch");
  LL total;
  for (const auto& [m, c] : s.terms())
    if (n.contains(m)) total += c;
  return total;
}

CharSum partial_integrate(const CharSum& s, const LatticeSplit& split, const Sublattice& n) {
  if (n.ambient_rank() != split.prime_rank())
    throw Error(ErrorKind::InvalidArgument, "N must live in M'");
  const size_t k = split.prime_rank();
  CharSum r(split.second_rank());
  for (const auto& [m, c] : s.terms()) {
    IVec coords = split.coordinates(m);
    IVec mp(coords.begin(), coords.begin() + long(k));
    if (!n.contains(mp)) continue;
    r.add(IVec(coords.begin() + long(k), coords.end()), c);
  }
  return r;
}

LL fourier_invert(const CharSum& s, const IVec& x) {
  check_rank(x, s.rank());
  return integrate_dual(s * CharSum::ev(IVec(x.size(), 0) - x), Sublattice::zero(s.rank()));
}

std::pair<LL, LL> poisson_both_sides(const CharFunction& psi, const Sublattice& h, const IVec& g) {
  check_rank(g, psi.rank());
  LL left;
  for (const auto& [x, v] : psi.support())
    if (h.contains(x - g)) left += v;
  LL right = integrate_dual(fourier(psi) * CharSum::ev(IVec(g.size(), 0) - g), h);
  return {left, right};
}

}  // namespace mtz
