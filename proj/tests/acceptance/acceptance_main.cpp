// One line per criterion: "criterion N: PASS|FAIL  summary".
// Usage: acceptance [--criterion N] [--verbose]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "mtz/errors.hpp"
#include "mtz/fan.hpp"
#include "mtz/fq_oracle.hpp"
#include "mtz/height_zeta.hpp"
#include "mtz/presets.hpp"
#include "mtz/tauberian.hpp"
#include "suites.hpp"

namespace {

using namespace mtz;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream summary;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "    failed: " << what << "\n";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

void require_suite(Verdict& v, const cli::SuiteReport& rep, const std::vector<std::string>& checks) {
  for (const auto& name : checks) {
    const cli::CheckResult* found = nullptr;
    for (const auto& c : rep.checks)
      if (c.name == name) found = &c;
    if (!found) {
      v.require(false, rep.suite + "/" + name + " missing");
      continue;
    }
    v.summary << name << " " << found->passed << "/" << found->total << "; ";
    v.require(found->ok() && found->total > 0, rep.suite + "/" + name);
    for (const auto& f : found->failures) v.detail << "      " << f << "\n";
  }
}

const char* kFive[] = {"P1", "P2", "P1xP1", "Hirzebruch(1)", "Bl1P2"};

void c1(Verdict& v) {
  ZPoly expect;
  expect.nvars = 2;
  expect.add({0, 0}, 1);
  expect.add({1, 1}, -1);
  const ZPoly p1 = q_sigma(preset_fan("P1"));
  v.require(p1 == expect, "q_sigma(P1) = " + p1.to_string());
  v.summary << "Q(P1) = " << p1.to_string() << "; min degrees";
  for (const char* name : kFive) {
    const int deg = q_sigma(preset_fan(name)).min_nonconstant_degree();
    v.summary << " " << name << ":" << deg;
    v.require(deg >= 2, std::string(name) + " has a linear monomial");
  }
}

void c2(Verdict& v) {
  const auto t0 = Clock::now();
  for (const char* name : kFive) {
    const Fan f = preset_fan(name);
    const LL lhs = q_sigma(f).evaluate_all_at(LL::monomial(-1));
    const LL rhs = (LL(1) - LL::monomial(-1)).pow(unsigned(f.pic_rank())) * class_of_X(f).shifted(-long(f.rank()));
    v.require(lhs == rhs, std::string(name) + ": " + lhs.to_string() + " vs " + rhs.to_string());
  }
  const double s = seconds_since(t0);
  v.require(s < 1.0, "took " + fmt(s) + " s");
  v.summary << "5 fans exact, " << fmt(s) << " s (limit 1)";
}

void c3(Verdict& v) {
  const auto t0 = Clock::now();
  require_suite(v, cli::run_poisson({}), {"local-poisson", "fourier-inversion"});
  const double s = seconds_since(t0);
  v.require(s < 10.0, "took " + fmt(s) + " s");
  v.summary << fmt(s) << " s (limit 10)";
}

void c4(Verdict& v) {
  const auto t0 = Clock::now();
  require_suite(v, cli::run_euler({}), {"closed-point-product"});
  const double s = seconds_since(t0);
  v.require(s < 30.0, "took " + fmt(s) + " s");
  v.summary << fmt(s) << " s (limit 30)";
}

void c5(Verdict& v) {
  const Fan f = preset_fan("P1");
  const ZetaSeries direct = zeta_direct_genus0(f, {6, 6});
  const ZetaSeries fourier = zeta_fourier_genus0(f, {6, 6});
  const LL L = LL::L();
  long agree = 0, oracle = 0;
  for (long d = 0; d <= 6; ++d) {
    const LL expect = d == 0 ? L - LL(1) : LL::monomial(2 * d + 1) - LL::monomial(2 * d - 1);
    const IVec dd{d, d};
    v.require(direct.coeff(dd) == expect, "direct at d=" + std::to_string(d) + ": " + direct.coeff(dd).to_string());
    v.require(fourier.coeff(dd) == expect, "fourier at d=" + std::to_string(d));
    agree += direct.coeff(dd) == expect && fourier.coeff(dd) == expect;
    if (d > 3) continue;
    for (int q : {2, 3}) {
      const Int n = count_hom_fq(f, dd, q, default_budget());
      const bool ok = Rational(n) == specialize_q(expect, Int(q));
      v.require(ok, "count at d=" + std::to_string(d) + " q=" + std::to_string(q) + " is " + n.str());
      oracle += ok;
    }
  }
  // Unbalanced degrees vanish on every route.
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 6; ++b) {
      if (a == b) continue;
      v.require(direct.coeff({a, b}).is_zero() && fourier.coeff({a, b}).is_zero(),
                "nonzero coefficient at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  v.require(direct == fourier, "routes differ off the diagonal");
  v.summary << "d=0..6 routes " << agree << "/7; F_q counts " << oracle << "/8; off-diagonal zero";
}

void c6(Verdict& v) {
  const auto t0 = Clock::now();
  for (const char* name : {"P2", "P1xP1"}) {
    const Fan f = preset_fan(name);
    const IVec dmax(f.num_rays(), 3);
    const ZetaSeries direct = zeta_direct_genus0(f, dmax);
    const ZetaSeries fourier = zeta_fourier_genus0(f, dmax);
    v.require(direct == fourier, std::string(name) + ": routes differ");
    long matched = 0, skipped = 0;
    for (const auto& [d, c] : direct.coeffs) {
      try {
        const Int n = count_hom_fq(f, d, 2, default_budget());
        const bool ok = Rational(n) == specialize_q(c, Int(2));
        v.require(ok, std::string(name) + " count at " + to_string(d));
        matched += ok;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        ++skipped;
      }
    }
    v.summary << name << " " << direct.coeffs.size() << " coeffs equal, q=2 " << matched << " matched "
              << skipped << " over budget; ";
  }
  const double s = seconds_since(t0);
  v.require(s < 120.0, "took " + fmt(s) + " s");
  v.summary << fmt(s) << " s (limit 120)";
}

void c7(Verdict& v, bool verbose) {
  const long precision = 10;
  const Fan p1 = preset_fan("P1");
  const LL gamma_p1 = LL::L() - LL::monomial(-1);
  const LeadingConstant lc1 = leading_constant(p1, CurveData::projective_line(), precision);
  v.require(lc1.exact && *lc1.exact == gamma_p1, "gamma(P1) = " + lc1.truncated.to_string());
  const ZetaSeries z1 = zeta_direct_genus0(p1, {6, 6});
  long zeros = 0;
  for (long d = 1; d <= 6; ++d) {
    const bool ok = (z1.coeff({d, d}).shifted(-2 * d) - gamma_p1).is_zero();
    v.require(ok, "P1 difference at delta=" + std::to_string(d));
    zeros += ok;
  }
  v.summary << "P1 exact " << zeros << "/6; ";

  for (const char* name : {"P2", "P1xP1"}) {
    const Fan f = preset_fan(name);
    const StabilizationReport rep = stabilization_check(f, 4, precision);
    v.summary << name << " dims";
    for (const auto& row : rep.rows) {
      if (row.k == 0) continue;
      v.summary << " " << row.dim.to_string();
      if (verbose) v.detail << "    " << name << " d=" << to_string(row.d) << " coeff " << row.coeff.to_string() << "\n";
    }
    v.summary << (rep.strictly_decreasing ? " strict" : " NOT strict") << "; ";
    v.require(rep.strictly_decreasing,
              std::string(name) + ": virtual dimension not strictly decreasing" +
                  (rep.exact_from_one ? " (difference is identically 0 for k >= 1)" : ""));
  }

  for (const char* name : {"P1", "P2", "P1xP1"}) {
    const Fan f = preset_fan(name);
    const LeadingConstant lc = leading_constant(f, CurveData::projective_line(), precision);
    const long double sym = specialize_q_numeric(lc.truncated.value(), 5.0L);
    const long double num = closed_point_product(lc.local_polynomial, long(f.rank()), long(f.pic_rank()), 5);
    const long double rel = std::fabs(sym - num) / std::fabs(num);
    v.require(rel <= 1e-3L, std::string(name) + " q=5 relative error " + fmt(double(rel)));
    v.summary << name << " q=5 rel " << fmt(double(rel)) << " ";
  }
}

void c8(Verdict& v) {
  const auto t0 = Clock::now();
  require_suite(v, cli::run_cones({}),
                {"cone-residue", "cone-levels", "character-restriction", "shifted-cone", "convolution-routes"});
  const double s = seconds_since(t0);
  v.require(s < 60.0, "took " + fmt(s) + " s");
  v.summary << fmt(s) << " s (limit 60)";
}

void c9(Verdict& v) {
  const int kmax = 8;
  const long precision = 20;
  for (const auto& ex : shipped_tauberian_examples(int(precision) + kmax)) {
    const TauberianReport rep = tauberian_check(ex.a, ex.rho, kmax, precision);
    const bool eta_ok = rep.eta && *rep.eta > 0;
    v.require(eta_ok, ex.name + ": no positive eta");
    v.require(rep.monotone, ex.name + ": decay not monotone");
    v.summary << ex.name << " eta=" << (rep.eta ? rational_to_string(*rep.eta) : "none")
              << (rep.monotone ? " monotone" : " non-monotone") << "; ";
  }
}

void c10(Verdict& v) {
  std::ostringstream a, b, ea, eb;
  const int ca = cli::run({"verify", "all", "--seed", "42"}, a, ea);
  const int cb = cli::run({"verify", "all", "--seed", "42"}, b, eb);
  v.require(ca == cb, "exit codes differ");
  v.require(ca == cli::kPass, "verify all exited " + std::to_string(ca));
  v.require(a.str() == b.str() && !a.str().empty(), "reports differ");
  v.summary << "two reports of " << a.str().size() << " bytes, " << (a.str() == b.str() ? "identical" : "different");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
    else if (arg == "--verbose") verbose = true;
    else {
      std::cerr << "usage: acceptance [--criterion N] [--verbose]\n";
      return 1;
    }
  }
  const std::vector<std::function<void(Verdict&)>> criteria = {
      c1, c2, c3, c4, c5, c6, [&](Verdict& v) { c7(v, verbose); }, c8, c9, c10};
  if (only < 0 || only > int(criteria.size())) {
    std::cerr << "criterion must be in 1.." << criteria.size() << "\n";
    return 1;
  }
  bool all = true;
  for (int n = 1; n <= int(criteria.size()); ++n) {
    if (only && n != only) continue;
    Verdict v;
    try {
      criteria[size_t(n - 1)](v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << n << ": " << (v.pass ? "PASS" : "FAIL") << "  " << v.summary.str() << "\n"
              << v.detail.str();
    all &= v.pass;
  }
  return all ? 0 : 1;
}
