#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>

#include "andre/count_table.hpp"
#include "andre/tree.hpp"

namespace andre {

/// Label of rule (o,l,n) -> (o,l,n+1)^(o-1) (o,l+1,n+1) (o+1,l,n+1)^(n-2o+1).
struct LrLabel {
  int o = 1;
  int l = 1;
  int n = 1;
  friend auto operator<=>(const LrLabel&, const LrLabel&) = default;
};

/// Label of the max-path rules; d = n - 2o + 1 is the number of
/// outdegree-1 nodes.
struct RlLabel {
  int o = 1;
  int r = 1;
  int n = 1;
  TreeClass cls = TreeClass::B;
  int d = 0;
  friend auto operator<=>(const RlLabel&, const RlLabel&) = default;
};

/// One level of a generating tree, aggregated per distinct label.
template <typename Label>
struct LevelState {
  int level = 1;
  std::map<Label, mpz_class> multiplicity;

  mpz_class total() const {
    mpz_class sum = 0;
    for (const auto& [label, count] : multiplicity) sum += count;
    return sum;
  }
};

/// Deliberately wrong variant of the min-path rule, used to check that the
/// verification harness notices a broken rule. `at_level` selects the level
/// whose productions get one extra (o,l,n+1) child.
struct LrRulePerturbation {
  int at_level = 0;  // 0 = no perturbation
};

LevelState<LrLabel> eco_lr_start();
LevelState<LrLabel> eco_lr_step(const LevelState<LrLabel>& state,
                                LrRulePerturbation perturbation = {});
CountTable eco_lr_expand(int n_max, LrRulePerturbation perturbation = {});

LevelState<RlLabel> eco_rl_start();
LevelState<RlLabel> eco_rl_step(const LevelState<RlLabel>& state);
CountTable eco_rl_expand(int n_max);

}  // namespace andre
