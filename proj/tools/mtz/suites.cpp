#include "suites.hpp"

#include "mtz/characters.hpp"
#include "mtz/errors.hpp"
#include "mtz/euler_product.hpp"
#include "mtz/fq_oracle.hpp"
#include "mtz/height_zeta.hpp"
#include "mtz/presets.hpp"
#include "mtz/rational_function.hpp"

namespace mtz::cli {

namespace {

constexpr size_t kMaxFailures = 5;

long trials_or(const SuiteOptions& o, long fallback) { return o.trials ? *o.trials : fallback; }

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

IVec random_point(Rng& rng, size_t n, int r) {
  IVec v(n);
  for (auto& x : v) x = uniform(rng, -r, r);
  return v;
}

LL random_class(Rng& rng) {
  static const LL pool[] = {LL(1), LL(-1), LL(2), LL::L(), LL::L() - LL(1), LL::monomial(2) - LL::L(),
                            LL::monomial(-1, 3), LL::L() + LL(1)};
  return pool[uniform(rng, 0, int(std::size(pool)) - 1)];
}

CharFunction random_char_function(Rng& rng, size_t n) {
  CharFunction f(n);
  const int pts = uniform(rng, 1, 6);
  for (int i = 0; i < pts; ++i) f.add(random_point(rng, n, 3), random_class(rng));
  return f;
}

Sublattice random_sublattice(Rng& rng, size_t n) {
  std::vector<IVec> gens;
  const int k = uniform(rng, 0, int(n));
  for (int i = 0; i < k; ++i) gens.push_back(random_point(rng, n, 3));
  return Sublattice(n, gens);
}

// 1 + (1-4 monomials of T-degree 1..3 in one or two variables), coefficients 1, L, L+1, L^2-L.
GradedSeries random_local_factor(Rng& rng, int trunc) {
  static const LL pool[] = {LL(1), LL::L(), LL::L() + LL(1), LL::monomial(2) - LL::L()};
  const size_t nv = size_t(uniform(rng, 1, 2));
  GradedSeries f = GradedSeries::one(nv, 0, trunc);
  const int terms = uniform(rng, 1, 4);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> t(nv, 0);
    const int deg = uniform(rng, 1, 3);
    for (int k = 0; k < deg; ++k) ++t[size_t(uniform(rng, 0, int(nv) - 1))];
    f.add_term({t, {}}, pool[uniform(rng, 0, 3)]);
  }
  return f;
}

std::string series_diff(const RationalSeries& a, const RationalSeries& b) {
  for (const auto& [e, c] : a) {
    auto it = b.find(e);
    Rational other = it == b.end() ? Rational(0) : it->second;
    if (other != c) {
      std::string s;
      for (int x : e) s += std::to_string(x) + " ";
      return "T^(" + s + ") " + rational_to_string(c) + " vs " + rational_to_string(other);
    }
  }
  return "extra terms on the right";
}

}  // namespace

void CheckResult::record(bool pass, const std::string& what) {
  ++total;
  if (pass) {
    ++passed;
  } else if (failures.size() < kMaxFailures) {
    failures.push_back(what);
  }
}

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok()) return false;
  return true;
}

bool SuiteReport::any_skipped() const {
  for (const auto& c : checks)
    if (c.skipped) return true;
  return false;
}

Rng suite_rng(std::uint64_t seed, const std::string& suite) {
  std::uint32_t tag = 2166136261u;  // FNV-1a: stable across standard libraries
  for (unsigned char c : suite) tag = (tag ^ c) * 16777619u;
  std::seed_seq seq{std::uint32_t(seed & 0xffffffffu), std::uint32_t(seed >> 32), tag};
  return Rng(seq);
}

SuiteReport run_poisson(const SuiteOptions& o) {
  Rng rng = suite_rng(o.seed, "poisson");
  SuiteReport rep{"poisson", {}};
  CheckResult poisson{"local-poisson"}, inversion{"fourier-inversion"};
  const long n_trials = trials_or(o, 300);
  for (long t = 0; t < n_trials; ++t) {
    const size_t n = size_t(uniform(rng, 1, 3));
    const CharFunction psi = random_char_function(rng, n);
    const Sublattice h = random_sublattice(rng, n);
    const IVec g = random_point(rng, n, 3);
    auto [left, right] = poisson_both_sides(psi, h, g);
    poisson.record(left == right, "trial " + std::to_string(t) + ": " + left.to_string() + " vs " + right.to_string());

    const CharFunction phi = random_char_function(rng, n);
    const CharSum s = fourier(phi);
    bool same = true;
    std::vector<IVec> probes;
    for (const auto& [x, v] : phi.support()) probes.push_back(x);
    for (int i = 0; i < 4; ++i) probes.push_back(random_point(rng, n, 4));
    for (const auto& x : probes) same &= fourier_invert(s, x) == phi.value(x);
    inversion.record(same, "trial " + std::to_string(t));
  }
  rep.checks = {poisson, inversion};
  return rep;
}

SuiteReport run_fourier(const SuiteOptions& o) {
  SuiteReport rep{"fourier", {}};
  CheckResult local{"local-fourier"}, routes{"zeta-routes"}, oracle{"fq-oracle"};
  for (const Fan& f : standard_presets()) local.record(local_fourier_check(f, 5), f.name());
  const std::vector<std::pair<std::string, long>> cases = {{"P1", 6}, {"P2", 2}, {"P1xP1", 2}, {"Hirzebruch(1)", 2}};
  for (const auto& [name, dm] : cases) {
    const Fan f = preset_fan(name);
    const ZetaSeries direct = zeta_direct_genus0(f, {dm});
    const ZetaSeries fourier = zeta_fourier_genus0(f, {dm});
    routes.record(direct == fourier, name + " Dmax " + std::to_string(dm));
    if (!o.oracle) continue;
    // Every degree vector in the box, including the ones off the Pic-dual sublattice.
    IVec d(f.num_rays(), 0);
    while (true) {
      try {
        const Int count = count_hom_fq(f, d, 2, o.budget);
        oracle.record(Rational(count) == specialize_q(direct.coeff(d), 2), name + " d=" + to_string(d));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        ++oracle.total;
        ++oracle.skipped;
      }
      size_t i = 0;
      while (i < d.size() && d[i] == dm) d[i++] = 0;
      if (i == d.size()) break;
      ++d[i];
    }
  }
  rep.checks = {local, routes};
  if (o.oracle) rep.checks.push_back(oracle);
  return rep;
}

SuiteReport run_euler(const SuiteOptions& o) {
  Rng rng = suite_rng(o.seed, "euler");
  SuiteReport rep{"euler", {}};
  CheckResult roundtrip{"plethystic-roundtrip"}, oracle{"closed-point-product"};
  const int trunc = 8;
  const long n_trials = trials_or(o, 50);
  for (long t = 0; t < n_trials; ++t) {
    const GradedSeries f = random_local_factor(rng, trunc);
    roundtrip.record(plethystic_exp(plethystic_log(f)) == f, "trial " + std::to_string(t));
    if (!o.oracle) continue;
    const GradedSeries ep = euler_product_genus0(f);
    for (long q : {2L, 3L}) {
      const RationalSeries sym = specialize_series(ep, q);
      const RationalSeries num = euler_product_specialize(f, q, trunc);
      oracle.record(sym == num, "trial " + std::to_string(t) + " q=" + std::to_string(q) + ": " + series_diff(sym, num));
    }
  }
  rep.checks = {roundtrip};
  if (o.oracle) rep.checks.push_back(oracle);
  return rep;
}

std::vector<ConvolutionInstance> shipped_convolution_instances() {
  std::vector<ConvolutionInstance> out;
  // Effective degrees of maps to P^2: M = Z (1,1,1) inside Z^3.
  out.push_back({"P2-degrees",
                 {{{0, 0, 0}, LL::L() + LL(1)}},
                 {{{1}, {1}, {1}}, {{1, 0, -1}, {0, 1, -1}}},
                 {1, 1, 1},
                 12});
  out.push_back({"P2-degrees-shifted",
                 {{{0, 0, 0}, LL(1)}, {{1, 0, 0}, -LL::L()}, {{1, 1, 0}, LL::monomial(2)}},
                 {{{1}, {1}, {1}}, {{1, 0, -1}, {0, 1, -1}}},
                 {1, 1, 1},
                 12});
  out.push_back({"P1xP1-degrees",
                 {{{0, 0, 0, 0}, LL(1)}, {{1, 0, 0, 0}, LL::L()}},
                 {{{1, 0}, {1, 0}, {0, 1}, {0, 1}}, {{1, -1, 0, 0}, {0, 0, 1, -1}}},
                 {1, 1, 1, 1},
                 10});
  out.push_back({"F1-degrees",
                 {{{0, 0, 0, 0}, LL(1)}, {{0, 1, 0, 1}, LL(-1)}, {{1, 0, 0, 0}, LL::L()}},
                 {{{1, 0}, {0, 1}, {1, 0}, {1, 1}}, {{1, 0, -1, 0}, {0, 1, 1, -1}}},
                 {1, 1, 1, 1},
                 10});
  return out;
}

bool check_convolution(const ConvolutionInstance& inst, std::string* detail) {
  const ConvolutionResult r = convolution_f1(inst.a, inst.seq, std::nullopt, inst.lambda0, inst.trunc);
  // Re-expand the exact terms along lambda0 and compare with the enumerated series.
  std::vector<LL> from_terms(size_t(inst.trunc) + 1);
  for (size_t i = 0; i < r.terms.size(); ++i) {
    const auto e = r.terms[i].expand(inst.trunc);
    for (size_t k = 0; k < e.size(); ++k) from_terms[k] += r.coeffs[i] * LL(e[k]);
  }
  std::vector<LL> from_series(size_t(inst.trunc) + 1);
  for (const auto& [m, c] : r.series.terms()) {
    long level = 0;
    for (size_t i = 0; i < m.t.size(); ++i) level += long(m.t[i]) * long(inst.lambda0[i]);
    if (level <= inst.trunc) from_series[size_t(level)] += c;
  }
  const bool ok = r.agree() && from_terms == from_series;
  if (detail)
    *detail = "decomposition " + r.via_decomposition.to_string() + ", chi route " + r.via_chi.to_string() +
              (from_terms == from_series ? "" : ", expansion mismatch");
  return ok;
}

SuiteReport run_cones(const SuiteOptions& o) {
  Rng rng = suite_rng(o.seed, "cones");
  SuiteReport rep{"cones", {}};
  CheckResult residue{"cone-residue"}, levels{"cone-levels"}, restrict{"character-restriction"},
      shifted{"shifted-cone"}, conv{"convolution-routes"};

  const ConeFan sub = preset_cone_fan("subdivided");
  const ResidueData rd = residue_check(sub, {1, 1});
  residue.record(rd.a == 6 && rd.chi == Rational(2, 3) && rd.special_value == 24,
                 "subdivided: a=" + std::to_string(rd.a) + " value " + rd.special_value.str());
  for (const char* name : {"quadrant", "subdivided", "ray"}) {
    const ConeFan cf = preset_cone_fan(name);
    const IVec lambda(cf.rank(), 1);
    residue_check(cf, lambda);
    levels.record(l_series_direction(cf, lambda).expand(30) == brute_force_levels(cf, lambda, 30), name);
  }

  const long n_trials = trials_or(o, 50);
  for (long t = 0; t < n_trials; ++t) {
    const size_t n = size_t(uniform(rng, 1, 3));
    const size_t k = size_t(uniform(rng, 0, int(n)));
    const ExactSequence seq = random_exact_sequence(n, k, rng);
    const ConeFan cf = validate_cone_fan(random_subdivided_orthant(n, uniform(rng, 0, 2), rng), 2);
    const long level = uniform(rng, 4, 12);
    const auto r = char_restrict_check(seq, cf, IVec(n, 1), level);
    restrict.record(r.ok(), "trial " + std::to_string(t));
  }
  for (long t = 0; t < n_trials; ++t) {
    const size_t n = size_t(uniform(rng, 1, 3));
    const ConeFan cf = validate_cone_fan(random_subdivided_orthant(n, uniform(rng, 0, 3), rng), 2);
    IVec z(n);
    for (auto& x : z) x = uniform(rng, 0, 3);
    const auto r = shifted_cone_check(cf, z, 10);
    shifted.record(r.ok(), "trial " + std::to_string(t) + " z=" + to_string(z));
  }
  for (const auto& inst : shipped_convolution_instances()) {
    std::string detail;
    const bool ok = check_convolution(inst, &detail);
    conv.record(ok, inst.name + ": " + detail);
  }
  rep.checks = {residue, levels, restrict, shifted, conv};
  return rep;
}

std::vector<std::string> suite_names() { return {"poisson", "fourier", "euler", "cones"}; }

SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
  if (name == "poisson") return run_poisson(o);
  if (name == "fourier") return run_fourier(o);
  if (name == "euler") return run_euler(o);
  if (name == "cones") return run_cones(o);
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace mtz::cli
