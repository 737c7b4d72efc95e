#pragma once

#include "fpg/json_io.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fpg {

struct SuiteConfig {
  int rank = 2;
  int n = 1;
  int samples = 20;
  std::uint64_t seed = 1;
};

// pass/fail counts of one suite run; the first failing check is kept as a counterexample
struct RunReport {
  std::string suite;
  std::string property;  // what is being checked, in words
  SuiteConfig cfg;
  long passed = 0, failed = 0;
  json counterexample;  // null when nothing failed

  // record one check; ctx is only built on failure
  void check(bool ok, const std::string& what, const std::function<json()>& ctx = {});
  void merge(const RunReport& o);
  bool ok() const { return failed == 0 && passed > 0; }
  json to_json() const;
};

RunReport verify_groupoid_axioms(const SuiteConfig& c);
RunReport verify_models(const SuiteConfig& c);
RunReport verify_lusztig(const SuiteConfig& c);
RunReport verify_poisson_maps(const SuiteConfig& c);
RunReport verify_coisotropy(const SuiteConfig& c);
RunReport verify_jacobi(const SuiteConfig& c);
RunReport verify_leaves(const SuiteConfig& c);
RunReport verify_identities(const SuiteConfig& c);

std::vector<std::string> suite_names();  // without "all"
RunReport run_suite(const std::string& name, const SuiteConfig& c);  // "all" merges every suite

}  // namespace fpg
