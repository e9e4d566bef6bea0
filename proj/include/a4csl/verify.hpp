#pragma once

// Invariant suites runnable from the CLI and the acceptance driver.

#include "a4csl/counting.hpp"
#include "a4csl/io.hpp"

#include <string>
#include <vector>

namespace a4csl {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const;
  void add(std::string name, bool passed, std::string detail = {});
  Json to_json() const;
};

/// Ring laws, twist, self-duality, phi_plus(I) = L, symmetry group,
/// index divisibility under composition.
VerifyReport verify_basic(std::size_t random_pairs = 1000);
/// csl(q) against the intersection oracle, index formula, for every
/// enumerated primitive admissible q with sigma <= max_sigma.
VerifyReport verify_theorem39(std::uint64_t max_sigma, const EnumerationOptions& opts = {});
/// Enumerated ideal counts against the formula for m <= max_m, and CSL
/// counts against the settled values for m <= min(max_m, csl ceiling).
VerifyReport verify_counting(std::uint64_t max_m, const EnumerationOptions& opts = {});

}  // namespace a4csl
