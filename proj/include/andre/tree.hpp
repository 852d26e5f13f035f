#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "andre/config.hpp"

namespace andre {

/// Rooted, un-ordered binary increasing tree on labels 1..n.
///
/// Label 1 is the root, every label k >= 2 has a parent < k, and every node
/// has at most two children. Children are kept sorted ascending. Two trees
/// are equal iff their parent maps are equal.
class IncreasingTree {
 public:
  using Label = std::uint16_t;
  static constexpr int kMaxSize = 65535;

  /// The single-node tree.
  IncreasingTree();

  /// Builds a tree from parents[k] = parent of label k (parents[0] and
  /// parents[1] are ignored; the vector has size n+1). Throws
  /// std::invalid_argument when the map is not a binary increasing tree.
  static IncreasingTree from_parents(std::span<const int> parents);

  int size() const noexcept { return size_; }
  /// Parent of label k, or 0 for the root.
  int parent(int k) const { return parent_[k]; }
  int outdegree(int k) const {
    return (kids_[2 * k] != 0) + (kids_[2 * k + 1] != 0);
  }
  /// Children of k in ascending order.
  std::span<const Label> children(int k) const {
    return {kids_.data() + 2 * k, static_cast<std::size_t>(outdegree(k))};
  }

  /// Copy of this tree with label size()+1 attached to `host`.
  /// Throws std::invalid_argument if host already has two children.
  IncreasingTree with_child(int host) const;

  /// Parent map as a vector of size n+1 (entry 0 unused, entry 1 = 0).
  std::vector<int> parents() const;

  friend bool operator==(const IncreasingTree& a, const IncreasingTree& b) {
    return a.parent_ == b.parent_;
  }
  friend std::strong_ordering operator<=>(const IncreasingTree& a,
                                          const IncreasingTree& b) {
    return a.parent_ <=> b.parent_;
  }

 private:
  int size_ = 1;
  std::vector<Label> parent_;  // index 0 unused
  std::vector<Label> kids_;    // two slots per label, 0 = empty
};

enum class TreeClass { A, B };

struct TreeStatistics {
  int n = 0;
  int o = 0;  // leaves
  int p = 0;  // outdegree-1 nodes
  int q = 0;  // outdegree-2 nodes
  int d = 0;  // n - 2o + 1
  int l = 0;  // min-path length
  int r = 0;  // max-path length
  TreeClass cls = TreeClass::B;

  friend bool operator==(const TreeStatistics&, const TreeStatistics&) = default;
};

enum class Orientation { standard, left_oriented };

/// Plane drawing of a tree: each node has a left and right slot (0 = empty).
struct OrderedDrawing {
  Orientation orientation = Orientation::standard;
  std::vector<int> left;   // index = label, entry 0 unused
  std::vector<int> right;

  int size() const noexcept { return static_cast<int>(left.size()) - 1; }
  friend bool operator==(const OrderedDrawing&, const OrderedDrawing&) = default;
};

std::vector<IncreasingTree> theta_successors(const IncreasingTree& t);

/// All of B_n, in generating-tree order: successors by ascending host label.
std::vector<IncreasingTree> enumerate_trees(int n, int bound = tree_size_bound());

/// Visits B_n in the same order as enumerate_trees without materializing it.
void for_each_tree(int n, const std::function<void(const IncreasingTree&)>& visit,
                   int bound = tree_size_bound());

/// Visits every tree of B_1..B_n_max; level by level order is not guaranteed,
/// only that every tree is visited exactly once.
void for_each_tree_up_to(int n_max,
                         const std::function<void(const IncreasingTree&)>& visit,
                         int bound = tree_size_bound());

/// Visits the strictly binary trees of B_n (none when n is even), in
/// generating-tree order. Prefixes with more outdegree-1 nodes than labels
/// left to attach are pruned, so the cost tracks the strictly binary count
/// rather than |B_n|.
void for_each_strictly_binary_tree(int n,
                                   const std::function<void(const IncreasingTree&)>& visit,
                                   int bound = tree_size_bound());

TreeStatistics stats(const IncreasingTree& t);
std::vector<int> min_path(const IncreasingTree& t);
std::vector<int> max_path(const IncreasingTree& t);
TreeClass classify(const IncreasingTree& t);
bool is_strictly_binary(const IncreasingTree& t);

OrderedDrawing canonical_drawing(const IncreasingTree& t, Orientation orientation);

char to_char(TreeClass cls);
const char* to_string(Orientation orientation);

}  // namespace andre
