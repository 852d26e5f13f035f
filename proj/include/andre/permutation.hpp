#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "andre/config.hpp"
#include "andre/tree.hpp"

namespace andre {

/// A permutation of 1..n in one-line notation.
class Permutation {
 public:
  /// Throws std::invalid_argument unless entries is a bijection on 1..n, n >= 1.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  /// Parses space-separated one-line notation such as "3 2 5 1 4".
  static Permutation parse(std::string_view text);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  /// 1-based access.
  int at(int i) const { return entries_.at(i - 1); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Symmetric-order reading (left subtree, node, right subtree).
Permutation phi(const OrderedDrawing& drawing);

/// The literal leaf-collapsing procedure: every round, each leaf merges into
/// its parent's label sequence on the side it was drawn. Reference for phi.
Permutation phi_collapse(const OrderedDrawing& drawing);

struct OrientationViolation {
  std::vector<int> factor;  // the offending factor of the permutation
  std::string reason;
};

using PhiInverseResult = std::variant<IncreasingTree, OrientationViolation>;

/// Rebuilds the tree whose `orientation` drawing reads as pi: the minimum of
/// each factor is the subtree root, the entries to its left and right form
/// the two subtrees.
PhiInverseResult phi_inverse(const Permutation& pi, Orientation orientation);

Permutation restriction(const Permutation& pi, int k);

/// Left-to-right minima as an ascending value list.
std::vector<int> lr_minima(const Permutation& pi);
/// Right-to-left minima as an ascending value list.
std::vector<int> rl_minima(const Permutation& pi);

bool in_res(const Permutation& pi);

std::vector<Permutation> res_set(int n, int bound = tree_size_bound());
std::vector<Permutation> andre_set(int n, int bound = tree_size_bound());
std::vector<Permutation> strict_andre_set(int n, int bound = tree_size_bound());

/// A strictly-binary Andre permutation restricting to pi. Fresh labels
/// n+1, n+2, ... are attached to the outdegree-1 nodes of phi_inverse(pi) in
/// ascending host order. Throws std::invalid_argument if pi is not in res.
Permutation extension_witness(const Permutation& pi);

/// Total number of cycles over all cycle-up-down permutations of size n:
/// every cycle, written from its smallest element, reads a1 < a2 > a3 < ...
long cycle_up_down_cycle_count(int n);

}  // namespace andre
