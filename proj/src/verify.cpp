#include "andre/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "andre/engines.hpp"
#include "andre/permutation.hpp"
#include "andre/series.hpp"
#include "andre/stat_polynomial.hpp"
#include "andre/tree.hpp"

namespace andre {

namespace {

// A property body returns an empty string on success, a located failure
// otherwise.
using Check = std::function<std::string()>;

std::string at_tree(const IncreasingTree& t, const std::string& what) {
  std::ostringstream out;
  out << what << " at tree with parents [";
  const auto p = t.parents();
  for (int k = 2; k < static_cast<int>(p.size()); ++k) out << (k > 2 ? "," : "") << p[k];
  out << ']';
  return out.str();
}

std::string check_tree_counts(int n_max) {
  const auto e = euler_numbers(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    long count = 0;
    for_each_tree(n, [&](const IncreasingTree&) { ++count; });
    if (mpz_class(count) != e[n]) {
      return "|B_" + std::to_string(n) + "| = " + std::to_string(count) +
             ", expected " + e[n].get_str();
    }
  }
  return {};
}

std::string check_tree_stats(int n_max) {
  std::string failure;
  for_each_tree_up_to(n_max, [&](const IncreasingTree& t) {
    if (!failure.empty()) return;
    const TreeStatistics s = stats(t);
    const bool ok = s.o == s.q + 1 && s.o + s.p + s.q == s.n && s.d == s.p &&
                    (s.cls != TreeClass::A || s.d >= 1) && s.l >= 1 && s.l <= s.n &&
                    s.r >= 1 && s.r <= s.n;
    if (!ok) failure = at_tree(t, "statistics invariant broken");
  });
  return failure;
}

std::string check_paths_increasing(int n_max) {
  std::string failure;
  for_each_tree_up_to(n_max, [&](const IncreasingTree& t) {
    if (!failure.empty()) return;
    for (const auto& path : {min_path(t), max_path(t)}) {
      if (path.front() != 1 || !std::is_sorted(path.begin(), path.end()) ||
          std::adjacent_find(path.begin(), path.end()) != path.end()) {
        failure = at_tree(t, "path not strictly increasing");
      }
    }
  });
  return failure;
}

std::string check_generating_tree(int n_max) {
  for (int n = 1; n < n_max; ++n) {
    std::vector<IncreasingTree> produced;
    for (const auto& t : enumerate_trees(n)) {
      auto next = theta_successors(t);
      produced.insert(produced.end(), next.begin(), next.end());
    }
    auto expected = enumerate_trees(n + 1);
    std::sort(produced.begin(), produced.end());
    if (std::adjacent_find(produced.begin(), produced.end()) != produced.end()) {
      return "duplicate successor at level " + std::to_string(n + 1);
    }
    std::sort(expected.begin(), expected.end());
    if (produced != expected) return "successors differ from B_" + std::to_string(n + 1);
  }
  return {};
}

template <typename Body>
std::string for_trees_both_orientations(int n_max, Body body) {
  std::string failure;
  for_each_tree_up_to(n_max, [&](const IncreasingTree& t) {
    if (!failure.empty()) return;
    for (Orientation o : {Orientation::standard, Orientation::left_oriented}) {
      std::string f = body(t, o);
      if (!f.empty()) {
        failure = at_tree(t, f + " (" + to_string(o) + ")");
        return;
      }
    }
  });
  return failure;
}

std::string check_collapse(int n_max) {
  return for_trees_both_orientations(n_max, [](const IncreasingTree& t, Orientation o) {
    const OrderedDrawing d = canonical_drawing(t, o);
    return phi(d) == phi_collapse(d) ? std::string{} : std::string{"collapse != traversal"};
  });
}

std::string check_round_trip(int n_max) {
  return for_trees_both_orientations(n_max, [](const IncreasingTree& t, Orientation o) {
    const auto back = phi_inverse(phi(canonical_drawing(t, o)), o);
    const auto* tree = std::get_if<IncreasingTree>(&back);
    return tree != nullptr && *tree == t ? std::string{} : std::string{"round trip failed"};
  });
}

std::string check_minima(int n_max, bool left_to_right) {
  std::string failure;
  for_each_tree_up_to(n_max, [&](const IncreasingTree& t) {
    if (!failure.empty()) return;
    const Permutation pi = phi(canonical_drawing(t, Orientation::left_oriented));
    const auto minima = left_to_right ? lr_minima(pi) : rl_minima(pi);
    const auto path = left_to_right ? min_path(t) : max_path(t);
    if (minima != path) failure = at_tree(t, "minima differ from path labels");
  });
  return failure;
}

std::string check_membership(int n_max) {
  for (int n = 1; n <= std::min(n_max, 8); ++n) {
    std::vector<Permutation> members;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
      Permutation pi(v);
      if (in_res(pi)) members.push_back(pi);
    } while (std::next_permutation(v.begin(), v.end()));
    auto expected = res_set(n);
    std::sort(expected.begin(), expected.end());
    if (members != expected) return "membership differs from res_set at n=" + std::to_string(n);
  }
  return {};
}

std::string check_witnesses(int n_max) {
  for (int n = 1; n <= std::min(n_max, 7); ++n) {
    std::map<int, std::set<Permutation>> strict;
    for (const auto& pi : res_set(n)) {
      const Permutation sigma = extension_witness(pi);
      const int m = sigma.size();
      if (!strict.count(m)) {
        const auto all = strict_andre_set(m, std::max(m, tree_size_bound()));
        strict[m] = std::set<Permutation>(all.begin(), all.end());
      }
      if (!strict[m].count(sigma) || restriction(sigma, n) != pi) {
        return "bad witness " + sigma.to_string() + " for " + pi.to_string();
      }
    }
  }
  return {};
}

std::string check_res_not_in_andre() {
  const auto pi = Permutation::parse("3 2 6 5 1 4");
  const auto a6 = andre_set(6);
  if (!in_res(pi)) return "3 2 6 5 1 4 should be in res_6";
  if (std::find(a6.begin(), a6.end(), pi) != a6.end()) return "3 2 6 5 1 4 found in A_6";
  return {};
}

std::string check_series_identities() {
  const int n = kDefaultSeriesOrder;
  const auto sec = sec_series(n);
  const auto tan = tan_series(n);
  if (!(sin_series(n) * sec == tan)) return "sin*sec != tan";
  if (!(sec * sec - tan * tan == TruncatedSeries::constant(1, n))) return "sec^2-tan^2 != 1";
  const auto f = sec_plus_tan(n);
  if (!(f.integral().derivative() == f)) return "d/dz integral f != f";
  return {};
}

std::string check_series_row_sums(int n_max) {
  const CountTable t = table_lr_from_series(n_max);
  const auto e = euler_numbers(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    if (t.row_sum(n) != e[n]) return "row " + std::to_string(n) + " does not sum to |B_n|";
  }
  return {};
}

std::string check_cycle_egf(int n_max) {
  const auto c = cycle_egf(n_max);
  if (!(c == ftilde(n_max).y_derivative_at(1))) return "cycle_egf != dF/dy at y=1";
  return {};
}

std::string check_pde(int n_max) {
  const int order = std::min(n_max, 8);
  const PdeResidual r = pde_residual(TrivariateTruncation::from_trees(order));
  if (!r.boundary_ok) return "F(x,y,0) != 0";
  if (r.max_abs != 0) return "max residual " + r.max_abs.get_str();
  return {};
}

std::string check_euler_power(int n_max) {
  const int order = n_max - 1;
  for (int m = 1; m <= std::min(5, order); ++m) {
    if (!euler_power_identity(m, order)) return "fails for m=" + std::to_string(m);
  }
  return {};
}

std::string check_level_totals(int n_max) {
  const auto e = euler_numbers(n_max + 1);
  auto lr = eco_lr_start();
  auto rl = eco_rl_start();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) {
      lr = eco_lr_step(lr);
      rl = eco_rl_step(rl);
    }
    if (lr.total() != e[n] || rl.total() != e[n]) {
      return "level " + std::to_string(n) + " total differs from |B_n|";
    }
    for (const auto& [label, count] : lr.multiplicity) {
      if (label.n - 2 * label.o + 1 < 0) return "rule (o,l,n) produced n-2o+1 < 0";
    }
    for (const auto& [label, count] : rl.multiplicity) {
      if (label.cls == TreeClass::A && label.d == 0) return "class A label with d = 0";
    }
  }
  return {};
}

std::string check_g_recursion(int n_max) {
  GPair g = g_start();
  for (int n = 1; n <= n_max; ++n) {
    if (n > 1) g = g_step(g);
    const GPair truth = brute_stat_polynomials(n);
    if (!(g.a == truth.a) || !(g.b == truth.b)) {
      return "G polynomials differ from brute force at n=" + std::to_string(n);
    }
  }
  return {};
}

std::string check_euler_columns(int n_max) {
  const auto e = euler_numbers(n_max);
  const CountTable rl = brute_table(Statistic::rl, n_max);
  const CountTable lr = brute_table(Statistic::lr, n_max);
  for (int n = 1; n <= n_max; ++n) {
    if (rl.at(n, 1) != e[n - 1]) return "rl column 1 differs at n=" + std::to_string(n);
    if (n >= 2 && lr.at(n, 2) != e[n - 2]) {
      return "lr column 2 differs at n=" + std::to_string(n);
    }
  }
  return {};
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const VerifyOptions& options) {
  const int n = options.n_max;
  std::vector<std::pair<std::string, Check>> checks = {
      {"tree.count_is_euler", [n] { return check_tree_counts(n); }},
      {"tree.statistics_invariants", [n] { return check_tree_stats(n); }},
      {"tree.paths_increasing", [n] { return check_paths_increasing(n); }},
      {"tree.generating_tree_exact_once", [n] { return check_generating_tree(n); }},
      {"perm.collapse_equals_traversal", [n] { return check_collapse(std::min(n, 9)); }},
      {"perm.round_trip", [n] { return check_round_trip(std::min(n, 9)); }},
      {"perm.lr_minima_are_min_path", [n] { return check_minima(std::min(n, 9), true); }},
      {"perm.rl_minima_are_max_path", [n] { return check_minima(std::min(n, 9), false); }},
      {"perm.membership_matches_res_set", [n] { return check_membership(n); }},
      {"perm.witness_soundness", [n] { return check_witnesses(n); }},
      {"series.exact_identities", [] { return check_series_identities(); }},
      {"series.lr_row_sums", [n] { return check_series_row_sums(n); }},
      {"series.cycle_egf_is_y_derivative", [n] { return check_cycle_egf(n); }},
      {"series.pde_residual_zero", [n] { return check_pde(n); }},
      {"engines.level_totals", [n] { return check_level_totals(n); }},
      {"engines.g_recursion_matches_brute", [n] { return check_g_recursion(n); }},
      {"engines.euler_columns", [n] { return check_euler_columns(n); }},
      {"engines.cross_check",
       [n, p = options.perturbation] {
         const CrossCheckReport r = cross_check(n, p);
         return r.agreement() ? std::string{} : r.describe();
       }},
  };
  if (n >= 6) checks.push_back({"perm.res_not_subset_of_andre", [] { return check_res_not_in_andre(); }});
  if (n >= 2) checks.push_back({"series.euler_power_identity", [n] { return check_euler_power(n); }});
  if (n >= 3) {
    checks.push_back({"series.f2_identity_chain", [n] {
                        return f2_identity_check(n) ? std::string{} : std::string{"chain broken"};
                      }});
  }

  std::vector<PropertyResult> results;
  for (auto& [name, check] : checks) {
    PropertyResult r{name, false, {}};
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace andre
