#include "andre/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace andre {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("Permutation: empty");
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("Permutation: entries are not a bijection on 1.." +
                                  std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) {
      throw std::invalid_argument("Permutation::parse: bad token in \"" +
                                  std::string(text) + "\"");
    }
    values.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::string out;
  for (int v : entries_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

Permutation phi(const OrderedDrawing& drawing) {
  std::vector<int> out;
  out.reserve(drawing.size());
  // In-order traversal with an explicit stack.
  std::vector<int> stack;
  int node = 1;
  while (node != 0 || !stack.empty()) {
    while (node != 0) {
      stack.push_back(node);
      node = drawing.left[node];
    }
    node = stack.back();
    stack.pop_back();
    out.push_back(node);
    node = drawing.right[node];
  }
  return Permutation(std::move(out));
}

Permutation phi_collapse(const OrderedDrawing& drawing) {
  const int n = drawing.size();
  std::vector<std::vector<int>> label(n + 1);
  std::vector<int> parent(n + 1, 0);
  std::vector<int> alive_children(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    label[k] = {k};
    for (int c : {drawing.left[k], drawing.right[k]}) {
      if (c != 0) {
        parent[c] = k;
        ++alive_children[k];
      }
    }
  }
  std::vector<bool> alive(n + 1, true);
  int remaining = n;
  while (remaining > 1) {
    std::vector<int> leaves;
    for (int k = 2; k <= n; ++k) {
      if (alive[k] && alive_children[k] == 0) leaves.push_back(k);
    }
    for (int leaf : leaves) {
      const int p = parent[leaf];
      auto& target = label[p];
      if (drawing.left[p] == leaf) {
        target.insert(target.begin(), label[leaf].begin(), label[leaf].end());
      } else {
        target.insert(target.end(), label[leaf].begin(), label[leaf].end());
      }
      alive[leaf] = false;
      --alive_children[p];
      --remaining;
    }
  }
  return Permutation(std::move(label[1]));
}

PhiInverseResult phi_inverse(const Permutation& pi, Orientation orientation) {
  const auto& e = pi.entries();
  const int n = pi.size();
  std::vector<int> parents(n + 1, 0);

  struct Factor {
    int begin, end, parent;  // half-open range of positions
  };
  std::vector<Factor> work{{0, n, 0}};
  while (!work.empty()) {
    const Factor f = work.back();
    work.pop_back();
    if (f.begin == f.end) continue;
    const auto first = e.begin() + f.begin;
    const auto last = e.begin() + f.end;
    const auto root_it = std::min_element(first, last);
    const int root = *root_it;
    parents[root] = f.parent;
    const bool has_left = root_it != first;
    const bool has_right = root_it + 1 != last;
    auto violation = [&](const char* reason) {
      return OrientationViolation{std::vector<int>(first, last), reason};
    };
    if (has_left && has_right) {
      const int left_min = *std::min_element(first, root_it);
      const int right_min = *std::min_element(root_it + 1, last);
      if (left_min > right_min) {
        return violation("smaller child drawn on the right");
      }
    } else if (orientation == Orientation::left_oriented && has_right) {
      return violation("only child drawn on the right in a left-oriented drawing");
    } else if (orientation == Orientation::standard && has_left) {
      return violation("only child drawn on the left in a standard drawing");
    }
    const int pos = static_cast<int>(root_it - e.begin());
    work.push_back({pos + 1, f.end, root});
    work.push_back({f.begin, pos, root});
  }
  return IncreasingTree::from_parents(parents);
}

Permutation restriction(const Permutation& pi, int k) {
  if (k < 1 || k > pi.size()) {
    throw std::out_of_range("restriction: k must lie in [1, " +
                            std::to_string(pi.size()) + "]");
  }
  std::vector<int> out;
  out.reserve(k);
  for (int v : pi.entries()) {
    if (v <= k) out.push_back(v);
  }
  return Permutation(std::move(out));
}

std::vector<int> lr_minima(const Permutation& pi) {
  std::vector<int> out;
  int best = pi.size() + 1;
  for (int v : pi.entries()) {
    if (v < best) {
      best = v;
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> rl_minima(const Permutation& pi) {
  std::vector<int> out;
  int best = pi.size() + 1;
  for (auto it = pi.entries().rbegin(); it != pi.entries().rend(); ++it) {
    if (*it < best) {
      best = *it;
      out.push_back(*it);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_res(const Permutation& pi) {
  return std::holds_alternative<IncreasingTree>(
      phi_inverse(pi, Orientation::left_oriented));
}

namespace {

std::vector<Permutation> image_of_trees(int n, int bound, Orientation orientation,
                                        bool strict_only, const char* what) {
  require_tree_size(n, bound, what);
  std::vector<Permutation> out;
  auto emit = [&](const IncreasingTree& t) {
    out.push_back(phi(canonical_drawing(t, orientation)));
  };
  if (strict_only) {
    for_each_strictly_binary_tree(n, emit, bound);
  } else {
    for_each_tree(n, emit, bound);
  }
  return out;
}

}  // namespace

std::vector<Permutation> res_set(int n, int bound) {
  return image_of_trees(n, bound, Orientation::left_oriented, false, "res_set");
}

std::vector<Permutation> andre_set(int n, int bound) {
  return image_of_trees(n, bound, Orientation::standard, false, "andre_set");
}

std::vector<Permutation> strict_andre_set(int n, int bound) {
  return image_of_trees(n, bound, Orientation::standard, true, "strict_andre_set");
}

Permutation extension_witness(const Permutation& pi) {
  auto result = phi_inverse(pi, Orientation::left_oriented);
  const auto* tree = std::get_if<IncreasingTree>(&result);
  if (tree == nullptr) {
    throw std::invalid_argument("extension_witness: " + pi.to_string() +
                                " is not a restriction of a strictly binary Andre "
                                "permutation");
  }
  IncreasingTree extended = *tree;
  for (int k = 1; k <= pi.size(); ++k) {
    if (tree->outdegree(k) == 1) extended = extended.with_child(k);
  }
  // Strictly binary, so both orientations give the same drawing.
  return phi(canonical_drawing(extended, Orientation::standard));
}

namespace {

bool cycle_is_up_down(const std::vector<int>& cycle) {
  for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
    const bool rising = cycle[i] < cycle[i + 1];
    if (rising != (i % 2 == 0)) return false;
  }
  return true;
}

}  // namespace

long cycle_up_down_cycle_count(int n) {
  if (n < 1) throw std::invalid_argument("cycle_up_down_cycle_count: n >= 1");
  if (n > kMaxBruteForcePermutationSize) {
    throw BoundExceeded("cycle_up_down_cycle_count: n = " + std::to_string(n) +
                        " exceeds brute-force bound " +
                        std::to_string(kMaxBruteForcePermutationSize));
  }
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> seen(n + 1);
  std::vector<int> cycle;
  long total = 0;
  do {
    std::fill(seen.begin(), seen.end(), false);
    int cycles = 0;
    bool ok = true;
    // Scanning starts in ascending order, so each cycle starts at its minimum.
    for (int start = 1; start <= n && ok; ++start) {
      if (seen[start]) continue;
      cycle.clear();
      for (int x = start; !seen[x]; x = perm[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      ok = cycle_is_up_down(cycle);
      ++cycles;
    }
    if (ok) total += cycles;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return total;
}

}  // namespace andre
