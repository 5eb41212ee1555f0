#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtz/cone_zeta.hpp"
#include "mtz/random_instances.hpp"

namespace mtz::cli {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}
  std::string name;
  long passed = 0;
  long total = 0;
  long skipped = 0;                   // oracle enumerations over budget
  std::vector<std::string> failures;  // first few, for the report
  bool ok() const { return passed + skipped == total; }
  void record(bool pass, const std::string& what);
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
  bool any_skipped() const;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::optional<long> trials;  // overrides every randomized trial count
  bool oracle = true;
  long long budget = 100000000LL;
};

// Independent generator per suite, so `all` reproduces each suite run alone.
Rng suite_rng(std::uint64_t seed, const std::string& suite);

SuiteReport run_poisson(const SuiteOptions& o);  // local Poisson, Fourier inversion
SuiteReport run_fourier(const SuiteOptions& o);  // local Fourier identity, zeta route equality
SuiteReport run_euler(const SuiteOptions& o);    // Euler products against closed-point products
SuiteReport run_cones(const SuiteOptions& o);    // residues, character restriction, shifted cones
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& o);

struct ConvolutionInstance {
  std::string name;
  std::map<IVec, LL> a;
  ExactSequence seq;
  IVec lambda0;
  int trunc;
};
std::vector<ConvolutionInstance> shipped_convolution_instances();
// Both special-value routes agree and the exact terms re-expand to the enumerated series.
bool check_convolution(const ConvolutionInstance& inst, std::string* detail = nullptr);

}  // namespace mtz::cli
