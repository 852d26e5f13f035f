#pragma once

#include <optional>
#include <string>
#include <vector>

#include "andre/count_table.hpp"
#include "andre/eco.hpp"
#include "andre/tree.hpp"

namespace andre {

/// Counts B_n by min-path length (lr) or max-path length (rl). This is the
/// ground truth every other engine is compared against.
CountTable brute_table(Statistic statistic, int n_max, int bound = tree_size_bound());

/// The rl cells reachable from closed-form series: column 1 from the Euler
/// numbers and column 2 from f2 (for n >= 3; zero below).
CountTable series_rl_table(int n_max);

/// Builds one engine's table; throws std::invalid_argument for the
/// (lr, recursion) pair, which has no engine.
CountTable engine_table(Statistic statistic, Engine engine, int n_max,
                        LrRulePerturbation perturbation = {});

bool engine_supports(Statistic statistic, Engine engine);

struct CrossCheckReport {
  int n_max = 0;
  int comparisons = 0;  // engine pairs compared
  std::vector<std::string> compared;
  std::optional<Discrepancy> first_discrepancy;

  bool agreement() const { return !first_discrepancy.has_value(); }
  std::string describe() const;
};

/// Compares every engine against brute force for both statistics, plus the
/// cycle-up-down column check (rl column 2 at n+2 against the brute-force
/// cycle count at n, for n <= min(8, n_max - 2)).
CrossCheckReport cross_check(int n_max, LrRulePerturbation perturbation = {});

}  // namespace andre
