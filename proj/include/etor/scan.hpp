#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "etor/arith.hpp"

namespace etor {

struct RunConfig {
  int n = 5;
  long pmin = -3, pmax = 3, qmin = -3, qmax = 3;
  /// Empty means every k in the family's k-set.
  std::vector<Rational> ks;
  std::uint64_t trial_limit = kDefaultTrialLimit;
  unsigned workers = 1;
  bool csv = false;
};

struct ScanStats {
  std::size_t emitted = 0;
  std::size_t skipped_side_conditions = 0;
  std::size_t skipped_degenerate = 0;
};

/// One record line per nondegenerate witness, row-major over p, then q, then
/// k. The byte stream is identical for any worker count.
ScanStats run_scan(const RunConfig& cfg, std::ostream& out);

}  // namespace etor
