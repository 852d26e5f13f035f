#pragma once

#include <stdexcept>
#include <string>

namespace andre {

// Thrown when a size or order argument is larger than the configured bound.
class BoundExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Thrown when an internal invariant of an engine breaks. These indicate a
// bug (or a wrong formula) rather than bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr int kDefaultTreeSizeBound = 12;
inline constexpr int kDefaultSeriesOrder = 16;
inline constexpr int kMaxSeriesOrder = 128;
inline constexpr int kMaxBruteForcePermutationSize = 9;

// Global bound on tree/permutation-set sizes. Reads ANDRE_MAX_N once; falls
// back to kDefaultTreeSizeBound when unset or unparsable.
int tree_size_bound();

void require_tree_size(int n, int bound, const char* what);
void require_series_order(int order, const char* what);

}  // namespace andre
