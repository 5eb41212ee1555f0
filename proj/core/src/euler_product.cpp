#include "mtz/euler_product.hpp"

#include <algorithm>
#include <mutex>

#include "mtz/errors.hpp"

namespace mtz {

void PlethysticSeries::add(const LineMonomial& mu, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

GradedSeries plethystic_exp(const PlethysticSeries& g) {
  GradedSeries r = GradedSeries::one(g.num_t, g.num_z, g.trunc, g.box);
  for (const auto& [mu, c] : g.terms) r.apply_factor(mu, c);
  return r;
}

PlethysticSeries plethystic_log(const GradedSeries& f) {
  if (f.constant_term() != LL(1))
    throw Error(ErrorKind::InvalidArgument, "plethystic_log needs constant term 1");
  PlethysticSeries g{f.num_t(), f.num_z(), f.trunc(), f.box(), {}};
  GradedSeries current = GradedSeries::one(f.num_t(), f.num_z(), f.trunc(), f.box());
  for (int deg = 1; deg <= f.trunc(); ++deg) {
    std::vector<std::pair<GradedMonomial, LL>> diff;
    for (const auto& [m, c] : f.terms())
      if (m.total_degree() == deg) {
        LL d = c - current.coeff(m);
        if (!d.is_zero()) diff.emplace_back(m, d);
      }
    for (const auto& [m, c] : current.terms())
      if (m.total_degree() == deg && f.coeff(m).is_zero()) diff.emplace_back(m, -c);
    // Factors of degree deg only touch degrees >= deg, and add exactly c * mu at degree deg.
    for (const auto& [m, c] : diff)
      for (const auto& [j, k] : c.terms()) {
        LineMonomial mu{j, m.z, m.t};
        g.add(mu, k);
        current.apply_factor(mu, k);
      }
  }
  return g;
}

GradedSeries euler_product_genus0(const GradedSeries& f, const CurveData& curve) {
  curve.validate();
  if (curve.genus != 0) throw Error(ErrorKind::InvalidArgument, "exact Euler products need genus 0");
  PlethysticSeries g = plethystic_log(f);
  // [C] = 1 + L: every line element mu contributes mu and L mu.
  PlethysticSeries h = g;
  for (const auto& [mu, c] : g.terms) {
    LineMonomial lm = mu;
    lm.j += 1;
    h.add(lm, c);
  }
  GradedSeries r = plethystic_exp(h);
  r.set_t_vars(f.t_vars());
  return r;
}

LabeledPartition LabeledPartition::from_multiplicities(const std::vector<int>& n) {
  LabeledPartition p;
  for (size_t i = 0; i < n.size(); ++i)
    if (n[i] > 0) p.mult[{static_cast<long long>(i)}] = n[i];
  return p;
}

int LabeledPartition::size() const {
  int s = 0;
  for (const auto& [k, v] : mult) s += v;
  return s;
}

std::vector<int> LabeledPartition::multiplicities() const {
  std::vector<int> v;
  for (const auto& [k, n] : mult) {
    if (n <= 0) throw Error(ErrorKind::InvalidArgument, "partition multiplicities must be positive");
    v.push_back(n);
  }
  std::sort(v.rbegin(), v.rend());
  return v;
}

namespace {

// Polynomials in L with rational coefficients.
using QPoly = std::map<long, Rational>;
using Partition = std::vector<int>;  // descending
using SymFn = std::map<Partition, QPoly>;

void qadd(QPoly& a, long e, const Rational& c) {
  if (c == 0) return;
  auto [it, ins] = a.try_emplace(e, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) a.erase(it);
  }
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) qadd(r, ea + eb, ca * cb);
  return r;
}

Partition merge(const Partition& a, const Partition& b) {
  Partition r;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r), std::greater<int>());
  return r;
}

void sym_add(SymFn& f, const Partition& p, const QPoly& c) {
  QPoly& slot = f[p];
  for (const auto& [e, v] : c) qadd(slot, e, v);
  if (slot.empty()) f.erase(p);
}

int mobius(int n) {
  int r = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

// Weight-graded pieces of exp(sum_m (1 + L^m)/m psi_m(PL[1 + p_1])) in the power-sum basis.
// The coefficient of u^pi in a symmetric function sum_lambda c_lambda p_lambda is
// sum_lambda c_lambda * #{assignments of the parts of lambda to labels with sums pi}.
class ConfigGenerator {
 public:
  const SymFn& weight(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    extend(n);
    return e_[n];
  }

  LL config(const std::vector<int>& mults) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(mults);
      if (it != cache_.end()) return it->second;
    }
    int total = 0;
    for (int x : mults) total += x;
    const SymFn& en = weight(total);
    QPoly acc;
    for (const auto& [lambda, c] : en) {
      Int ways = assignments(lambda, mults);
      if (ways == 0) continue;
      for (const auto& [e, v] : c) qadd(acc, e, v * Rational(ways));
    }
    LL r;
    for (const auto& [e, v] : acc) {
      MTZ_ASSERT(denominator(v) == 1, "configuration class has a non-integral coefficient");
      r.add_term(e, numerator(v));
    }
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(mults, r);
    return r;
  }

 private:
  static Int assignments(const Partition& lambda, std::vector<int> target) {
    Int count = 0;
    std::vector<int> rem = target;
    // Parts are placed in order; equal parts are still distinguishable positions.
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == lambda.size()) {
        ++count;
        return;
      }
      for (size_t l = 0; l < rem.size(); ++l) {
        if (rem[l] < lambda[i]) continue;
        rem[l] -= lambda[i];
        self(self, i + 1);
        rem[l] += lambda[i];
      }
    };
    rec(rec, 0);
    return count;
  }

  void extend(int n) {
    if (e_.empty()) e_.push_back({{Partition{}, QPoly{{0, Rational(1)}}}});
    while (int(h_.size()) <= n) h_.push_back(h_weight(int(h_.size())));
    while (int(e_.size()) <= n) {
      const int w = int(e_.size());
      SymFn ew;
      for (int k = 1; k <= w; ++k)
        for (const auto& [ph, ch] : h_[k])
          for (const auto& [pe, ce] : e_[w - k]) {
            QPoly c = qmul(ch, ce);
            for (auto& [e, v] : c) v *= Rational(k, w);
            sym_add(ew, merge(ph, pe), c);
          }
      e_.push_back(std::move(ew));
    }
  }

  static SymFn h_weight(int w) {
    SymFn h;
    if (w == 0) return h;
    for (int m = 1; m <= w; ++m) {
      if (w % m) continue;
      const int rest = w / m;  // k * j = rest
      for (int k = 1; k <= rest; ++k) {
        if (rest % k) continue;
        const int j = rest / k, mu = mobius(k);
        if (!mu) continue;
        Rational c(mu * (j % 2 ? 1 : -1), k * j);
        c /= m;
        QPoly coeff;
        qadd(coeff, 0, c);
        qadd(coeff, m, c);
        sym_add(h, Partition(j, k * m), coeff);
      }
    }
    return h;
  }

  std::mutex mu_;
  std::vector<SymFn> h_;
  std::vector<SymFn> e_;
  std::map<std::vector<int>, LL> cache_;
};

ConfigGenerator& generator() {
  static ConfigGenerator g;
  return g;
}

}  // namespace

LL config_class(const std::vector<int>& multiplicities, const CurveData& curve) {
  curve.validate();
  if (curve.genus != 0) throw Error(ErrorKind::InvalidArgument, "exact configuration classes need genus 0");
  std::vector<int> m;
  for (int x : multiplicities) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative multiplicity");
    if (x > 0) m.push_back(x);
  }
  std::sort(m.rbegin(), m.rend());
  if (m.empty()) return LL(1);
  return generator().config(m);
}

LL config_class(const LabeledPartition& pi, const CurveData& curve) {
  return config_class(pi.multiplicities(), curve);
}

LL torsor_twist(const LabeledPartition& pi, const CurveData& curve) {
  return (LL::L() - LL(1)).pow(unsigned(pi.size())) * config_class(pi, curve);
}

LL config_class_by_expansion(const std::vector<int>& multiplicities) {
  const size_t k = multiplicities.size();
  int total = 0;
  for (int x : multiplicities) total += x;
  GradedSeries f = GradedSeries::one(k, 0, total, multiplicities);
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> t(k, 0);
    t[i] = 1;
    f.add_term({t, {}}, LL(1));
  }
  GradedSeries ep = euler_product_genus0(f);
  return ep.coeff({multiplicities, {}});
}

}  // namespace mtz
