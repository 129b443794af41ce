#pragma once

#include "atlas/graphs.hpp"

namespace atlas {

/*
  The verification battery.  Every reference value is pinned here: counts,
  bijection round trips, label invariance under random Borel elements,
  symbolic-versus-engine monoid agreement, the three reference graphs,
  minimality, per-K-orbit censuses, monoid algebra, and the open-orbit
  duality.  Checks are grouped into the numbered criteria reported by the
  acceptance runner and into named suites exposed by the CLI.
*/

struct CheckResult {
  int criterion = 0;    // 1..11
  std::string name;     // e.g. "counts/A/n=3"
  bool pass = false;
  std::string detail;   // failure explanation or short confirmation
};

struct VerifyOptions {
  int max_n = 0; // cap on the ambient dimension; 0 = full supported ranges
  std::uint64_t seed = 20220205;
  int samples = 8;
  int borel_trials = 20;
};

std::vector<CheckResult> verify_counts(const VerifyOptions& opt);     // criteria 1, 2, 3, 9
std::vector<CheckResult> verify_bijections(const VerifyOptions& opt); // criterion 4
std::vector<CheckResult> verify_labels(const VerifyOptions& opt);     // criterion 5
std::vector<CheckResult> verify_monoid(const VerifyOptions& opt);     // criteria 6, 10
std::vector<CheckResult> verify_graphs(const VerifyOptions& opt);     // criteria 7, 8
std::vector<CheckResult> verify_duality(const VerifyOptions& opt);    // criterion 11

// suite in {counts, bijections, labels, monoid, graphs, duality, all}.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt);

inline bool all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

} // namespace atlas
