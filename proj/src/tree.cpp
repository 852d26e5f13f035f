#include "andre/tree.hpp"

#include <stdexcept>
#include <string>

namespace andre {

IncreasingTree::IncreasingTree() : size_(1), parent_(2, 0), kids_(4, 0) {}

IncreasingTree IncreasingTree::from_parents(std::span<const int> parents) {
  if (parents.size() < 2) {
    throw std::invalid_argument("from_parents: need at least one label");
  }
  const auto n = static_cast<int>(parents.size()) - 1;
  if (n > kMaxSize) throw std::invalid_argument("from_parents: tree too large");
  IncreasingTree t;
  t.size_ = n;
  t.parent_.assign(n + 1, 0);
  t.kids_.assign(2 * (n + 1), 0);
  for (int k = 2; k <= n; ++k) {
    const int p = parents[k];
    if (p < 1 || p >= k) {
      throw std::invalid_argument("from_parents: parent of " + std::to_string(k) +
                                  " must lie in [1, " + std::to_string(k - 1) + "]");
    }
    // k is visited in increasing order, so slots fill in ascending order.
    if (t.kids_[2 * p] == 0) {
      t.kids_[2 * p] = static_cast<Label>(k);
    } else if (t.kids_[2 * p + 1] == 0) {
      t.kids_[2 * p + 1] = static_cast<Label>(k);
    } else {
      throw std::invalid_argument("from_parents: node " + std::to_string(p) +
                                  " has more than two children");
    }
    t.parent_[k] = static_cast<Label>(p);
  }
  return t;
}

IncreasingTree IncreasingTree::with_child(int host) const {
  if (host < 1 || host > size_) {
    throw std::invalid_argument("with_child: host out of range");
  }
  if (outdegree(host) == 2) {
    throw std::invalid_argument("with_child: host already has two children");
  }
  if (size_ >= kMaxSize) throw std::invalid_argument("with_child: tree too large");
  IncreasingTree t;
  t.size_ = size_ + 1;
  t.parent_ = parent_;
  t.parent_.push_back(static_cast<Label>(host));
  t.kids_ = kids_;
  t.kids_.resize(2 * (t.size_ + 1), 0);
  // The new label exceeds every existing one, so it always goes last.
  const int slot = t.kids_[2 * host] == 0 ? 2 * host : 2 * host + 1;
  t.kids_[slot] = static_cast<Label>(t.size_);
  return t;
}

std::vector<int> IncreasingTree::parents() const {
  return {parent_.begin(), parent_.end()};
}

std::vector<IncreasingTree> theta_successors(const IncreasingTree& t) {
  std::vector<IncreasingTree> out;
  for (int k = 1; k <= t.size(); ++k) {
    if (t.outdegree(k) < 2) out.push_back(t.with_child(k));
  }
  return out;
}

std::vector<IncreasingTree> enumerate_trees(int n, int bound) {
  require_tree_size(n, bound, "enumerate_trees");
  std::vector<IncreasingTree> out;
  for_each_tree(n, [&](const IncreasingTree& t) { out.push_back(t); }, bound);
  return out;
}

namespace {

void descend(const IncreasingTree& t, int target,
             const std::function<void(const IncreasingTree&)>& visit,
             bool visit_all_levels) {
  if (visit_all_levels || t.size() == target) visit(t);
  if (t.size() == target) return;
  for (int k = 1; k <= t.size(); ++k) {
    if (t.outdegree(k) < 2) descend(t.with_child(k), target, visit, visit_all_levels);
  }
}

}  // namespace

void for_each_tree(int n, const std::function<void(const IncreasingTree&)>& visit,
                   int bound) {
  require_tree_size(n, bound, "for_each_tree");
  descend(IncreasingTree{}, n, visit, false);
}

void for_each_tree_up_to(int n_max,
                         const std::function<void(const IncreasingTree&)>& visit,
                         int bound) {
  require_tree_size(n_max, bound, "for_each_tree_up_to");
  descend(IncreasingTree{}, n_max, visit, true);
}

namespace {

void descend_strict(const IncreasingTree& t, int outdegree_one, int target,
                    const std::function<void(const IncreasingTree&)>& visit) {
  if (t.size() == target) {
    if (outdegree_one == 0) visit(t);
    return;
  }
  for (int k = 1; k <= t.size(); ++k) {
    const int deg = t.outdegree(k);
    if (deg == 2) continue;
    // Attaching to a leaf creates an outdegree-1 node, to an outdegree-1
    // node removes one.
    const int next = outdegree_one + (deg == 0 ? 1 : -1);
    if (next <= target - t.size() - 1) descend_strict(t.with_child(k), next, target, visit);
  }
}

}  // namespace

void for_each_strictly_binary_tree(int n,
                                   const std::function<void(const IncreasingTree&)>& visit,
                                   int bound) {
  require_tree_size(n, bound, "for_each_strictly_binary_tree");
  descend_strict(IncreasingTree{}, 0, n, visit);
}

std::vector<int> min_path(const IncreasingTree& t) {
  std::vector<int> path{1};
  int node = 1;
  while (t.outdegree(node) > 0) {
    node = t.children(node).front();
    path.push_back(node);
  }
  return path;
}

std::vector<int> max_path(const IncreasingTree& t) {
  std::vector<int> path{1};
  int node = 1;
  while (t.outdegree(node) == 2) {
    node = t.children(node).back();
    path.push_back(node);
  }
  return path;
}

TreeClass classify(const IncreasingTree& t) {
  const int last = max_path(t).back();
  return t.outdegree(last) == 1 ? TreeClass::A : TreeClass::B;
}

bool is_strictly_binary(const IncreasingTree& t) {
  for (int k = 1; k <= t.size(); ++k) {
    if (t.outdegree(k) == 1) return false;
  }
  return true;
}

TreeStatistics stats(const IncreasingTree& t) {
  TreeStatistics s;
  s.n = t.size();
  for (int k = 1; k <= t.size(); ++k) {
    switch (t.outdegree(k)) {
      case 0: ++s.o; break;
      case 1: ++s.p; break;
      default: ++s.q; break;
    }
  }
  s.d = s.n - 2 * s.o + 1;
  s.l = static_cast<int>(min_path(t).size());
  s.r = static_cast<int>(max_path(t).size());
  s.cls = classify(t);
  return s;
}

OrderedDrawing canonical_drawing(const IncreasingTree& t, Orientation orientation) {
  OrderedDrawing d;
  d.orientation = orientation;
  d.left.assign(t.size() + 1, 0);
  d.right.assign(t.size() + 1, 0);
  for (int k = 1; k <= t.size(); ++k) {
    const auto kids = t.children(k);
    if (kids.size() == 2) {
      d.left[k] = kids[0];
      d.right[k] = kids[1];
    } else if (kids.size() == 1) {
      (orientation == Orientation::standard ? d.right : d.left)[k] = kids[0];
    }
  }
  return d;
}

char to_char(TreeClass cls) { return cls == TreeClass::A ? 'A' : 'B'; }

const char* to_string(Orientation orientation) {
  return orientation == Orientation::standard ? "standard" : "left-oriented";
}

}  // namespace andre
