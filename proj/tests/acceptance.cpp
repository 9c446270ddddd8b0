// Acceptance gate: replays every invariant suite at full size with a fixed
// seed, enforces per-criterion and total wall budgets, and prints one
// pass/fail line per criterion.  Exit code 0 means every line passed.

#include <cstdio>
#include <string>
#include <vector>

#include "jacobson/verify.hpp"

namespace {

struct Criterion {
  const char* suite;
  const char* what;
  double budget_seconds;
};

constexpr std::uint64_t kSeed = 20260814;

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> table = {
      {"relations", "defining relations, idempotents, and the X,Y presentation map", 1.0},
      {"division", "division by f(c): existence, uniqueness, exact remainders", 10.0},
      {"ideal-split", "R = R f(c) + G^f with trivial intersection", 5.0},
      {"equation", "linear equations f(c) x = b across the finite levels M_n", 5.0},
      {"uniserial", "submodule chains of M_n are linearly ordered", 30.0},
      {"baer-uf", "divisibility of the limit module U^f by principal ideals", 10.0},
      {"baer-y", "divisibility of the series module Y by socle data", 10.0},
      {"rw", "the socle module Rw: action, embeddings, essential images", 5.0},
      {"socle", "Laurent quotient map and exact socle decomposition", 5.0},
      {"cogenerator", "simple modules embed into the limit modules", 10.0},
  };
  return table;
}

}  // namespace

int main() {
  bool all_pass = true;
  double total = 0.0;
  int index = 0;
  for (const auto& criterion : criteria()) {
    ++index;
    const jacobson::VerifyReport report =
        jacobson::run_verify_suite(criterion.suite, kSeed, 0);
    total += report.wall_seconds;
    const bool within_budget = report.wall_seconds <= criterion.budget_seconds;
    const bool pass = report.ok() && within_budget;
    all_pass = all_pass && pass;
    std::printf("[%2d/10] %s  %-62s (%u cases, %.2fs/%.0fs)\n", index,
                pass ? "PASS" : "FAIL", criterion.what, report.cases,
                report.wall_seconds, criterion.budget_seconds);
    for (const auto& failure : report.failures) {
      std::printf("        failed case: %s [%s]\n", failure.case_name.c_str(),
                  failure.detail.c_str());
    }
    if (!within_budget) {
      std::printf("        exceeded the %.0fs budget\n", criterion.budget_seconds);
    }
  }
  if (total > 90.0) {
    all_pass = false;
    std::printf("total wall time %.2fs exceeded the 90s budget\n", total);
  }
  std::printf("acceptance: %s (%.2fs total)\n", all_pass ? "PASS" : "FAIL", total);
  return all_pass ? 0 : 1;
}
