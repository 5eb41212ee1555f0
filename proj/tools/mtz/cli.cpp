#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <optional>

#include "mtz/errors.hpp"
#include "mtz/fan.hpp"
#include "mtz/fq_oracle.hpp"
#include "mtz/height_zeta.hpp"
#include "mtz/json_io.hpp"
#include "mtz/presets.hpp"
#include "suites.hpp"

namespace mtz::cli {

namespace {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string fan_path;
  std::string preset;
  std::vector<long long> dmax{3};
  std::vector<long long> degree;
  long precision = 10;
  std::vector<long> q;
  std::uint64_t seed = 42;
  std::optional<long> trials;
  std::string route = "both";
  std::string format = "json";
  std::optional<long long> budget;
  bool no_oracle = false;
  std::string suite = "all";
};

Fan load_fan(const RunConfig& c) {
  if (!c.fan_path.empty() && !c.preset.empty())
    throw Error(ErrorKind::InvalidArgument, "--fan and --preset are exclusive");
  if (!c.fan_path.empty()) return validate_fan(read_fan_file(c.fan_path));
  return preset_fan(c.preset.empty() ? "P1" : c.preset);
}

long long effective_budget(const RunConfig& c) {
  // MTZ_BUDGET wins over the flag.
  if (std::getenv("MTZ_BUDGET")) return default_budget();
  return c.budget ? *c.budget : default_budget();
}

json ll(const LL& a) { return json::parse(to_json(a)); }

std::string fixed(long double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string r = "\"";
  for (char ch : s) r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return r + "\"";
}

// Flat key/value objects print as two-column CSV and as `key: value` text.
void emit_flat(const json& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") out << "key,value\n";
  for (const auto& [k, v] : doc.items()) {
    const std::string val = v.is_string() ? v.get<std::string>() : v.dump();
    if (format == "csv") out << csv_escape(k) << "," << csv_escape(val) << "\n";
    else out << k << ": " << val << "\n";
  }
}

int cmd_fan_check(const RunConfig& c, std::ostream& out) {
  const Fan f = load_fan(c);
  const ZPoly q = q_sigma(f);
  const LL cls = class_of_X(f);
  const LL special = q_sigma_at_Linv(f);  // throws InvariantViolation if the identity fails
  json doc;
  doc["fan"] = f.name();
  doc["rank"] = f.rank();
  doc["rays"] = f.rays();
  doc["max_cones"] = f.max_cones();
  doc["pic_rank"] = f.pic_rank();
  doc["q_sigma"] = q.to_string();
  doc["q_sigma_min_degree"] = q.min_nonconstant_degree();
  doc["class"] = cls.to_string();
  doc["q_sigma_at_Linv"] = special.to_string();
  doc["special_value_identity"] = true;
  doc["local_fourier_trunc4"] = local_fourier_check(f, 4);
  emit_flat(doc, c.format, out);
  return kPass;
}

int cmd_zeta(const RunConfig& c, std::ostream& out) {
  const Fan f = load_fan(c);
  if (c.route != "direct" && c.route != "fourier" && c.route != "both")
    throw Error(ErrorKind::InvalidArgument, "--route must be direct, fourier or both");
  const IVec dmax = expand_dmax(f, IVec(c.dmax.begin(), c.dmax.end()));
  std::optional<ZetaSeries> direct, fourier;
  if (c.route != "fourier") direct = zeta_direct_genus0(f, dmax);
  if (c.route != "direct") fourier = zeta_fourier_genus0(f, dmax);
  const ZetaSeries& primary = direct ? *direct : *fourier;

  std::map<IVec, bool> keys;
  if (direct)
    for (const auto& [d, v] : direct->coeffs) keys[d] = true;
  if (fourier)
    for (const auto& [d, v] : fourier->coeffs) keys[d] = true;

  bool all_equal = true, oracle_ok = true, over_budget = false;
  const bool use_oracle = !c.no_oracle && !c.q.empty();
  const long long budget = effective_budget(c);
  json rows = json::array();
  for (const auto& [d, unused] : keys) {
    json row;
    row["d"] = d;
    row["coeff"] = ll(primary.coeff(d));
    row["text"] = primary.coeff(d).to_string();
    if (direct && fourier) {
      const bool eq = direct->coeff(d) == fourier->coeff(d);
      all_equal &= eq;
      row["verdict"] = eq ? "equal" : "differ";
      if (!eq) row["fourier"] = fourier->coeff(d).to_string();
    }
    if (use_oracle) {
      json counts = json::array();
      for (long q : c.q) {
        json e;
        e["q"] = q;
        try {
          const Int n = count_hom_fq(f, d, int(q), budget);
          const bool match = Rational(n) == specialize_q(primary.coeff(d), Int(q));
          oracle_ok &= match;
          e["count"] = n.str();
          e["match"] = match;
        } catch (const Error& err) {
          if (err.kind() != ErrorKind::BudgetExceeded) throw;
          over_budget = true;
          e["count"] = nullptr;
          e["skipped"] = "budget";
        }
        counts.push_back(e);
      }
      row["oracle"] = counts;
    }
    rows.push_back(row);
  }

  if (c.format == "json") {
    json doc;
    doc["fan"] = f.name();
    doc["Dmax"] = dmax;
    doc["route"] = c.route;
    doc["coeffs"] = rows;
    if (direct && fourier) doc["all_equal"] = all_equal;
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (size_t a = 0; a < f.num_rays(); ++a) out << "d" << a + 1 << ",";
    out << "coeff" << (direct && fourier ? ",verdict" : "") << "\n";
    for (const auto& row : rows) {
      for (const auto& x : row["d"]) out << x.get<long long>() << ",";
      out << csv_escape(row["text"].get<std::string>());
      if (direct && fourier) out << "," << row["verdict"].get<std::string>();
      out << "\n";
    }
  } else {
    out << "fan " << f.name() << ", Dmax " << to_string(dmax) << ", route " << c.route << "\n";
    for (const auto& row : rows) {
      out << "  d=" << to_string(row["d"].get<IVec>()) << "  " << row["text"].get<std::string>();
      if (direct && fourier) out << "  [" << row["verdict"].get<std::string>() << "]";
      if (row.contains("oracle"))
        for (const auto& e : row["oracle"])
          out << "  q=" << e["q"].get<long>() << ":"
              << (e.contains("skipped") ? "skipped" : (e["match"].get<bool>() ? "match" : "MISMATCH"));
      out << "\n";
    }
  }
  if (!all_equal || !oracle_ok) return kFailure;
  return over_budget ? kBudget : kPass;
}

int cmd_leading_constant(const RunConfig& c, std::ostream& out) {
  const Fan f = load_fan(c);
  const LeadingConstant lc = leading_constant(f, CurveData::projective_line(), c.precision);
  const std::vector<long> qs = c.q.empty() ? std::vector<long>{5} : c.q;
  json doc;
  doc["fan"] = f.name();
  doc["precision"] = c.precision;
  doc["exact"] = lc.exact ? json(lc.exact->to_string()) : json(nullptr);
  doc["truncated"] = lc.truncated.to_string();
  bool ok = true;
  json rows = json::array();
  for (long q : qs) {
    json row;
    const long double sym = specialize_q_numeric(lc.truncated.value(), (long double)q);
    row["q"] = q;
    row["symbolic"] = fixed(sym);
    if (!c.no_oracle) {
      const long double num = closed_point_product(lc.local_polynomial, long(f.rank()), long(f.pic_rank()), q);
      const long double rel = std::fabs(sym - num) / std::fabs(num);
      row["closed_point_product"] = fixed(num);
      row["relative_error"] = fixed(rel, 3);
      row["within_1e-3"] = rel <= 1e-3L;
      ok &= rel <= 1e-3L;
    }
    rows.push_back(row);
  }
  if (c.format == "json") {
    doc["specializations"] = rows;
    out << doc.dump(2) << "\n";
  } else {
    json flat = doc;
    for (const auto& row : rows) {
      const std::string p = "q" + std::to_string(row["q"].get<long>()) + ".";
      for (const auto& [k, v] : row.items())
        if (k != "q") flat[p + k] = v;
    }
    emit_flat(flat, c.format, out);
  }
  return ok ? kPass : kFailure;
}

int cmd_count(const RunConfig& c, std::ostream& out) {
  const Fan f = load_fan(c);
  const IVec d(c.degree.begin(), c.degree.end());
  const int q = c.q.empty() ? 2 : int(c.q.front());
  try {
    const Int n = count_hom_fq(f, d, q, effective_budget(c));
    emit_flat(json::parse(count_to_json(f.name(), d, q, n)), c.format, out);
    return kPass;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    json doc;
    doc["fan"] = f.name();
    doc["d"] = d;
    doc["q"] = q;
    doc["count"] = nullptr;
    doc["skipped"] = e.message();
    emit_flat(doc, c.format, out);
    return kBudget;
  }
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SuiteOptions o;
  o.seed = c.seed;
  o.trials = c.trials;
  o.oracle = !c.no_oracle;
  o.budget = effective_budget(c);
  if (c.trials && *c.trials == 0) err << "warning: --trials 0 runs no randomized instances\n";
  std::vector<std::string> names;
  if (c.suite == "all") names = suite_names();
  else names = {c.suite};
  std::vector<SuiteReport> reports;
  for (const auto& n : names) reports.push_back(run_suite(n, o));

  bool ok = true, skipped = false;
  for (const auto& r : reports) {
    ok &= r.ok();
    skipped |= r.any_skipped();
  }
  const char* status = !ok ? "fail" : (skipped ? "budget" : "pass");
  if (c.format == "json") {
    json doc;
    doc["seed"] = c.seed;
    if (c.trials) doc["trials"] = *c.trials;
    json suites = json::array();
    for (const auto& r : reports) {
      json s;
      s["suite"] = r.suite;
      json checks = json::array();
      for (const auto& ch : r.checks) {
        json e;
        e["name"] = ch.name;
        e["passed"] = ch.passed;
        e["total"] = ch.total;
        e["skipped"] = ch.skipped;
        e["failures"] = ch.failures;
        checks.push_back(e);
      }
      s["checks"] = checks;
      s["status"] = r.ok() ? "pass" : "fail";
      suites.push_back(s);
    }
    doc["suites"] = suites;
    doc["status"] = status;
    out << doc.dump(2) << "\n";
  } else {
    if (c.format == "csv") out << "suite,check,passed,total,skipped\n";
    for (const auto& r : reports)
      for (const auto& ch : r.checks) {
        if (c.format == "csv") {
          out << r.suite << "," << ch.name << "," << ch.passed << "," << ch.total << "," << ch.skipped << "\n";
          continue;
        }
        out << r.suite << "/" << ch.name << "  " << ch.passed << "/" << ch.total;
        if (ch.skipped) out << " (" << ch.skipped << " over budget)";
        out << (ch.ok() ? "  pass" : "  FAIL") << "\n";
        for (const auto& f : ch.failures) out << "    " << f << "\n";
      }
    if (c.format == "text") out << "status: " << status << "\n";
  }
  if (!ok) return kFailure;
  return skipped ? kBudget : kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motivic height zeta functions of split toric varieties over P^1", "mtz"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_fan = [&](CLI::App* sub) {
    auto* fan = sub->add_option("--fan", c.fan_path, "Fan file (.json or .toml)");
    auto* preset = sub->add_option("--preset", c.preset, "Preset fan: P1, P2, P1xP1, P1xP2, Bl1P2, Hirzebruch(a)");
    fan->excludes(preset);
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--no-oracle", c.no_oracle, "Skip every finite-field oracle");
  };

  auto* fan_check = app.add_subcommand("fan-check", "Validate a fan; print Q_Sigma, [X] and the special-value identity");
  add_fan(fan_check);
  add_common(fan_check);

  auto* zeta = app.add_subcommand("zeta", "Height zeta coefficients up to Dmax");
  add_fan(zeta);
  add_common(zeta);
  zeta->add_option("--dmax", c.dmax, "Bound per ray, or one bound for all")->delimiter(',');
  zeta->add_option("--route", c.route, "direct, fourier or both")->check(CLI::IsMember({"direct", "fourier", "both"}));
  zeta->add_option("--q", c.q, "Compare with F_q counts for these q")->delimiter(',');
  zeta->add_option("--budget", c.budget, "Form evaluations allowed per count");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_common(verify);
  verify->add_option("suite", c.suite, "poisson, fourier, euler, cones or all")
      ->check(CLI::IsMember({"poisson", "fourier", "euler", "cones", "all"}));
  verify->add_option("--seed", c.seed, "Seed of every randomized suite");
  verify->add_option("--trials", c.trials, "Trials per randomized check");
  verify->add_option("--budget", c.budget, "Form evaluations allowed per count");

  auto* lead = app.add_subcommand("leading-constant", "Leading constant of the height zeta function");
  add_fan(lead);
  add_common(lead);
  lead->add_option("--precision", c.precision, "Keep terms down to L^-P");
  lead->add_option("--q", c.q, "Specialize at these q (default 5)")->delimiter(',');

  auto* count = app.add_subcommand("count", "Count maps P^1 -> X of ray-degree d over F_q");
  add_fan(count);
  add_common(count);
  count->add_option("--d", c.degree, "Ray-degree vector")->delimiter(',')->required();
  count->add_option("--q", c.q, "Field size (default 2)")->delimiter(',');
  count->add_option("--budget", c.budget, "Form evaluations allowed");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kError;
  }

  try {
    if (*fan_check) return cmd_fan_check(c, out);
    if (*zeta) return cmd_zeta(c, out);
    if (*verify) return cmd_verify(c, out, err);
    if (*lead) return cmd_leading_constant(c, out);
    if (*count) return cmd_count(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kError;
  }
  return kError;
}

}  // namespace mtz::cli
