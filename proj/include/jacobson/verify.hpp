#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jacobson {

struct VerifyFailure {
  std::string case_name;
  std::string detail;
};

/// Outcome of one invariant suite: every checked case is counted, failures
/// carry the inputs that broke. A report with no failures is a pass.
struct VerifyReport {
  std::string suite;
  int cases = 0;
  std::vector<VerifyFailure> failures;
  double wall_seconds = 0.0;

  bool ok() const { return failures.empty(); }
};

/// Atomic suite names in acceptance order: relations, division,
/// ideal-split, equation, uniserial, baer-uf, baer-y, rw, socle,
/// cogenerator.
const std::vector<std::string>& verify_suite_names();

/// Resolves a suite name or group alias into atomic suites. Groups:
/// "all" (everything), "baer" (baer-uf, baer-y), "prufer" (equation,
/// uniserial, baer-uf), "y" (baer-y, rw), "cogenerator-finite"
/// (cogenerator). Throws std::invalid_argument on unknown names.
std::vector<std::string> expand_verify_suites(const std::string& name);

/// Runs one atomic suite with the seeded sampler. size <= 0 picks the
/// suite default; suites built on fixed instance grids ignore it. An
/// exception escaping a case is recorded as a failure, not propagated.
VerifyReport run_verify_suite(const std::string& suite, std::uint64_t seed, int size);

}  // namespace jacobson
