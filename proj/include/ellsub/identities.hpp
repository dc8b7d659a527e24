#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ellsub {

/// Outcome of one exact identity suite.
struct IdentityRecord {
  std::string suite;
  std::string formula;     // what was checked
  std::size_t samples = 0; // random points drawn
  std::size_t checked = 0; // points (or fixed cases) actually evaluated
  bool passed = true;
  std::string detail;      // first counterexample, or the repair the suite exercises
};

/// Runs every suite with `sample_size` random points each; each suite draws
/// from its own generator seeded by (seed, suite index), so the report is a
/// function of the arguments alone. sample_size = 0 returns an empty report.
std::vector<IdentityRecord> verify_identities(std::size_t sample_size, std::uint64_t seed);

} // namespace ellsub
