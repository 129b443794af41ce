// Acceptance runner: executes the full verification battery at the
// full supported sizes and prints one PASS/FAIL line per criterion.

#include <cstdio>
#include <map>

#include "atlas/verify.hpp"

namespace {

const char* kCriterionNames[] = {
    "",
    "counting, general linear family",
    "counting, orthogonal families",
    "Lah transform identities",
    "bijection round trips",
    "canonicalization oracle",
    "symbolic vs engine monoid agreement",
    "reference graph reproduction",
    "weak-order minimality",
    "per-K-orbit orbit counts",
    "monoid idempotence and braid relations",
    "open-orbit duality",
};

} // namespace

int main() {
  atlas::VerifyOptions opt;
  std::vector<atlas::CheckResult> results = atlas::run_suite("all", opt);

  std::map<int, std::vector<const atlas::CheckResult*>> by_criterion;
  for (const auto& r : results) by_criterion[r.criterion].push_back(&r);

  bool all_ok = true;
  for (int c = 1; c <= 11; ++c) {
    const auto& rs = by_criterion[c];
    bool ok = true;
    std::string why;
    int checks = 0;
    for (const auto* r : rs) {
      ++checks;
      if (!r->pass && ok) {
        ok = false;
        why = r->name + ": " + r->detail;
      }
    }
    all_ok &= ok;
    if (ok)
      std::printf("criterion %2d (%s): PASS [%d checks]\n", c, kCriterionNames[c], checks);
    else
      std::printf("criterion %2d (%s): FAIL  %s\n", c, kCriterionNames[c], why.c_str());
  }
  return all_ok ? 0 : 1;
}
