#pragma once

#include <cstdint>
#include <string>

#include "relfreq/description.hpp"

namespace relfreq {

struct VerifyOptions {
  /// Cap on non-degenerate components per instance; at most 24.
  std::size_t max_components = 10;
  std::size_t instances = 200;
  std::uint64_t seed = 2007;
  /// Test hook: perturbs one matrix entry so every instance must mismatch.
  bool corrupt = false;
};

struct VerifyResult {
  std::size_t checked = 0;
  bool passed = true;
  std::string message;
  /// Re-runnable configuration of the first mismatch, empty on success.
  std::string counterexample;
};

/// Random k-out-of-n:G, Lin/Con:F and ladder instances with rational
/// parameters; exact transfer-matrix A and nu must equal the enumeration oracle.
VerifyResult run_verify(const VerifyOptions& options);

/// Random instance of the family with at most max_components fallible components.
SystemDescription random_instance(Family family, std::size_t max_components, std::uint64_t& state);

/// Exact comparison of one description against the oracle; empty string when equal.
std::string compare_with_oracle(const SystemDescription& description, bool corrupt = false);

}  // namespace relfreq
