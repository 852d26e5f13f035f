#include "andre/engines.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "andre/permutation.hpp"
#include "andre/series.hpp"
#include "andre/stat_polynomial.hpp"

namespace andre {

CountTable brute_table(Statistic statistic, int n_max, int bound) {
  require_tree_size(n_max, bound, "brute_table");
  CountTable table(statistic, Engine::brute, n_max);
  for_each_tree_up_to(
      n_max,
      [&](const IncreasingTree& t) {
        const int value = statistic == Statistic::lr
                              ? static_cast<int>(min_path(t).size())
                              : static_cast<int>(max_path(t).size());
        table.add(t.size(), value, 1);
      },
      bound);
  table.fill_zeros_full_rows();
  return table;
}

CountTable series_rl_table(int n_max) {
  if (n_max < 1) throw std::invalid_argument("series_rl_table: n_max >= 1");
  CountTable table(Statistic::rl, Engine::series, n_max);
  const auto e = euler_numbers(n_max);
  for (int n = 1; n <= n_max; ++n) table.set(n, 1, e[n - 1]);
  if (n_max >= 2) {
    const TruncatedSeries f2 = f2_series(n_max);
    for (int n = 1; n <= n_max; ++n) {
      auto v = f2.egf_integer(n);
      if (!v) throw InvariantViolation("series_rl_table: non-integral f2 coefficient");
      table.set(n, 2, *v);
    }
  }
  return table;
}

bool engine_supports(Statistic statistic, Engine engine) {
  return !(statistic == Statistic::lr && engine == Engine::recursion);
}

CountTable engine_table(Statistic statistic, Engine engine, int n_max,
                        LrRulePerturbation perturbation) {
  if (!engine_supports(statistic, engine)) {
    throw std::invalid_argument(std::string("engine ") + to_string(engine) +
                                " does not support statistic " + to_string(statistic));
  }
  if (statistic == Statistic::lr) {
    switch (engine) {
      case Engine::brute: return brute_table(Statistic::lr, n_max);
      case Engine::eco: return eco_lr_expand(n_max, perturbation);
      case Engine::series: return table_lr_from_series(n_max);
      case Engine::recursion: break;
    }
  } else {
    switch (engine) {
      case Engine::brute: return brute_table(Statistic::rl, n_max);
      case Engine::eco: return eco_rl_expand(n_max);
      case Engine::series: return series_rl_table(n_max);
      case Engine::recursion: return g_table(n_max);
    }
  }
  throw std::logic_error("engine_table: unreachable");
}

std::string CrossCheckReport::describe() const {
  std::ostringstream out;
  if (agreement()) {
    out << "agreement through n=" << n_max << " (" << comparisons << " comparisons:";
    for (const auto& c : compared) out << ' ' << c;
    out << ')';
  } else {
    out << "discrepancy: " << first_discrepancy->describe();
  }
  return out.str();
}

CrossCheckReport cross_check(int n_max, LrRulePerturbation perturbation) {
  CrossCheckReport report;
  report.n_max = n_max;
  for (Statistic stat : {Statistic::lr, Statistic::rl}) {
    const CountTable truth = brute_table(stat, n_max);
    for (Engine engine : {Engine::eco, Engine::series, Engine::recursion}) {
      if (!engine_supports(stat, engine)) continue;
      const CountTable other = engine_table(stat, engine, n_max, perturbation);
      ++report.comparisons;
      report.compared.push_back(std::string(to_string(stat)) + ":brute/" +
                                to_string(engine));
      if (auto d = first_discrepancy(truth, other)) {
        report.first_discrepancy = d;
        return report;
      }
    }
    if (stat == Statistic::rl && n_max >= 3) {
      CountTable from_cycle_egf(Statistic::rl, Engine::series, n_max);
      const TruncatedSeries c = cycle_egf(n_max - 2);
      for (int n = 0; n <= n_max - 2; ++n) {
        auto v = c.egf_integer(n);
        if (!v) throw InvariantViolation("cross_check: non-integral cycle_egf coefficient");
        from_cycle_egf.set(n + 2, 2, *v);
      }
      ++report.comparisons;
      report.compared.push_back("rl:column2/cycle-egf");
      if (auto d = first_discrepancy(truth, from_cycle_egf)) {
        d->right_engine = "cycle-egf";
        report.first_discrepancy = d;
        return report;
      }

      // Column r = 2 at size n + 2 against the cycle count in S_n.
      CountTable cycles(Statistic::rl, Engine::brute, n_max);
      const int limit = std::min(8, n_max - 2);
      for (int n = 1; n <= limit; ++n) cycles.set(n + 2, 2, cycle_up_down_cycle_count(n));
      ++report.comparisons;
      report.compared.push_back("rl:column2/cycle-up-down");
      if (auto d = first_discrepancy(truth, cycles)) {
        d->right_engine = "cycle-up-down";
        report.first_discrepancy = d;
        return report;
      }
    }
  }
  return report;
}

}  // namespace andre
