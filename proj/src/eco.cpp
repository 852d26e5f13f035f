#include "andre/eco.hpp"

#include <stdexcept>
#include <string>

namespace andre {

namespace {

void require_levels(int n_max, const char* what) {
  if (n_max < 1) throw std::invalid_argument(std::string(what) + ": n_max >= 1");
  // Level sizes grow polynomially, so only the series order cap applies.
  require_series_order(n_max, what);
}

}  // namespace

LevelState<LrLabel> eco_lr_start() {
  LevelState<LrLabel> s;
  s.multiplicity[{1, 1, 1}] = 1;
  return s;
}

LevelState<LrLabel> eco_lr_step(const LevelState<LrLabel>& state,
                                LrRulePerturbation perturbation) {
  LevelState<LrLabel> next;
  next.level = state.level + 1;
  for (const auto& [label, count] : state.multiplicity) {
    const auto [o, l, n] = label;
    const int stay = o - 1;
    const int split = n - 2 * o + 1;
    if (stay < 0 || split < 0) {
      throw InvariantViolation("eco_lr_step: negative exponent at label (" +
                               std::to_string(o) + "," + std::to_string(l) + "," +
                               std::to_string(n) + ")");
    }
    const int extra = perturbation.at_level == state.level ? 1 : 0;
    if (stay + extra > 0) next.multiplicity[{o, l, n + 1}] += count * (stay + extra);
    next.multiplicity[{o, l + 1, n + 1}] += count;
    if (split > 0) next.multiplicity[{o + 1, l, n + 1}] += count * split;
  }
  return next;
}

CountTable eco_lr_expand(int n_max, LrRulePerturbation perturbation) {
  require_levels(n_max, "eco_lr_expand");
  CountTable table(Statistic::lr, Engine::eco, n_max);
  LevelState<LrLabel> state = eco_lr_start();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) state = eco_lr_step(state, perturbation);
    for (const auto& [label, count] : state.multiplicity) table.add(n, label.l, count);
  }
  table.fill_zeros_full_rows();
  return table;
}

LevelState<RlLabel> eco_rl_start() {
  LevelState<RlLabel> s;
  s.multiplicity[{1, 1, 1, TreeClass::B, 0}] = 1;
  return s;
}

LevelState<RlLabel> eco_rl_step(const LevelState<RlLabel>& state) {
  LevelState<RlLabel> next;
  next.level = state.level + 1;
  auto emit = [&](int o, int r, int n, TreeClass cls, int d, const mpz_class& count,
                  int exponent) {
    if (exponent < 0 || d < 0 || d != n - 2 * o + 1 ||
        (cls == TreeClass::A && d == 0)) {
      throw InvariantViolation("eco_rl_step: invalid production at level " +
                               std::to_string(next.level));
    }
    if (exponent > 0) next.multiplicity[{o, r, n, cls, d}] += count * exponent;
  };
  for (const auto& [label, count] : state.multiplicity) {
    const auto [o, r, n, cls, d] = label;
    if (cls == TreeClass::A) {
      emit(o, r, n + 1, TreeClass::A, d + 1, count, o);
      if (d > 0) {
        emit(o + 1, r + 1, n + 1, TreeClass::B, d - 1, count, 1);
        if (d > 1) emit(o + 1, r, n + 1, TreeClass::A, d - 1, count, d - 1);
      }
    } else {
      emit(o, r, n + 1, TreeClass::B, d + 1, count, o - 1);
      emit(o, r, n + 1, TreeClass::A, d + 1, count, 1);
      if (d > 0) emit(o + 1, r, n + 1, TreeClass::B, d - 1, count, d);
    }
  }
  return next;
}

CountTable eco_rl_expand(int n_max) {
  require_levels(n_max, "eco_rl_expand");
  CountTable table(Statistic::rl, Engine::eco, n_max);
  LevelState<RlLabel> state = eco_rl_start();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) state = eco_rl_step(state);
    for (const auto& [label, count] : state.multiplicity) table.add(n, label.r, count);
  }
  table.fill_zeros_full_rows();
  return table;
}

}  // namespace andre
