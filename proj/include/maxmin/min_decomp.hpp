#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxmin/blocks.hpp"
#include "maxmin/maxmin_tree.hpp"
#include "maxmin/permutation.hpp"

namespace maxmin {

/// Rooted tree on 1..node_count stored as a parent array (parent of the root
/// is 0) with sorted child lists.
class MinDecompTree {
 public:
  MinDecompTree(std::size_t node_count, Label root, std::vector<Label> parent)
      : root_(root), parent_(std::move(parent)), children_(node_count + 1) {
    if (parent_.size() != node_count + 1) throw std::invalid_argument("parent array size");
    for (Label v = 1; static_cast<std::size_t>(v) <= node_count; ++v) {
      if (v == root_) continue;
      const Label p = parent_[v];
      if (p < 1 || static_cast<std::size_t>(p) > node_count || p == v) {
        throw std::invalid_argument("bad parent for node " + std::to_string(v));
      }
      children_[p].push_back(v);
    }
    for (auto& list : children_) std::sort(list.begin(), list.end());
  }

  std::size_t node_count() const noexcept { return children_.size() - 1; }
  Label root() const noexcept { return root_; }
  Label parent(Label v) const { return parent_.at(v); }
  const std::vector<Label>& children(Label v) const { return children_.at(v); }
  bool is_leaf(Label v) const { return children_.at(v).empty(); }

  /// Parent array indexed by label; the canonical form used for comparison.
  const std::vector<Label>& parents() const noexcept { return parent_; }

  /// (parent, child) pairs sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Label p = 1; static_cast<std::size_t>(p) <= node_count(); ++p) {
      for (Label c : children_[p]) out.emplace_back(p, c);
    }
    return out;
  }

  /// Nodes in breadth-first order from the root.
  std::vector<Label> bfs_order() const {
    std::vector<Label> order{root_};
    order.reserve(node_count());
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (Label c : children_[order[k]]) order.push_back(c);
    }
    return order;
  }

  friend bool operator==(const MinDecompTree& a, const MinDecompTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }

 private:
  Label root_;
  std::vector<Label> parent_;
  std::vector<std::vector<Label>> children_;
};

/// Same recursion as the max-weight tree, but each segment minimum connects
/// to the minimum of every block.
inline MinDecompTree build_min_decomp(const Permutation& p) {
  const ExtendedPermutation ext(p);
  const BlockDecomposer splitter(ext);
  std::vector<Label> parent(p.size() + 2, 0);
  for_each_decomposition(splitter, [&](Interval, const BlockDecomposition& split) {
    const Label m = ext[split.min_position];
    for (const Interval& block : split.left_blocks) parent[ext[splitter.argmin(block)]] = m;
    if (split.right_block) parent[ext[splitter.argmin(*split.right_block)]] = m;
  });
  return MinDecompTree(p.size() + 1, 1, std::move(parent));
}

struct StemLeaves {
  std::vector<Label> stem;
  std::vector<Label> leaves;
};

/// Leaves are childless nodes; the stem is everything else. Both ascending.
inline StemLeaves classify(const MinDecompTree& t) {
  StemLeaves out;
  for (Label v = 1; static_cast<std::size_t>(v) <= t.node_count(); ++v) {
    (t.is_leaf(v) ? out.leaves : out.stem).push_back(v);
  }
  return out;
}

/// v together with everything below it, ascending.
inline std::vector<Label> descendants(const MinDecompTree& t, Label v) {
  std::vector<Label> out{v};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Label c : t.children(out[k])) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Number of leaves at or below each node, indexed by label.
inline std::vector<std::int64_t> leaf_counts(const MinDecompTree& t) {
  std::vector<std::int64_t> count(t.node_count() + 1, 0);
  const auto order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Label v = *it;
    if (t.is_leaf(v)) count[v] = 1;
    if (v != t.root()) count[t.parent(v)] += count[v];
  }
  return count;
}

/// Sum over stem nodes of their leaf-descendant counts, minus n.
inline std::int64_t weight_via_leaves(const MinDecompTree& t) {
  const auto count = leaf_counts(t);
  std::int64_t total = 0;
  for (Label v = 1; static_cast<std::size_t>(v) <= t.node_count(); ++v) {
    if (!t.is_leaf(v)) total += count[v];
  }
  return total - static_cast<std::int64_t>(t.node_count() - 1);
}

/// Returns a copy with `leaf` hung from `new_parent`.
inline MinDecompTree reattach(const MinDecompTree& t, Label leaf, Label new_parent) {
  if (leaf < 1 || static_cast<std::size_t>(leaf) > t.node_count() || !t.is_leaf(leaf)) {
    throw std::invalid_argument("node " + std::to_string(leaf) + " is not a leaf");
  }
  if (leaf == t.root()) throw std::invalid_argument("cannot move the root");
  if (new_parent < 1 || static_cast<std::size_t>(new_parent) > t.node_count() ||
      new_parent == leaf) {
    throw std::invalid_argument("bad new parent " + std::to_string(new_parent));
  }
  std::vector<Label> parent = t.parents();
  parent[leaf] = new_parent;
  return MinDecompTree(t.node_count(), t.root(), std::move(parent));
}

/// Hangs `leaf` from its grandparent. When the old parent keeps another
/// child, weight_via_leaves drops by exactly 1.
inline MinDecompTree move_up(const MinDecompTree& t, Label leaf) {
  if (leaf < 1 || static_cast<std::size_t>(leaf) > t.node_count() || !t.is_leaf(leaf) ||
      leaf == t.root()) {
    throw std::invalid_argument("node " + std::to_string(leaf) + " is not a leaf");
  }
  const Label parent = t.parent(leaf);
  if (parent == t.root()) {
    throw std::invalid_argument("leaf " + std::to_string(leaf) + " already hangs from the root");
  }
  return reattach(t, leaf, t.parent(parent));
}

/// True iff p -> build_min_decomp(p) is injective on S_n.
inline bool verify_injectivity(std::size_t n) {
  std::vector<Label> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = static_cast<Label>(k + 1);
  std::set<std::vector<Label>> seen;
  std::size_t total = 0;
  do {
    seen.insert(build_min_decomp(Permutation(values)).parents());
    ++total;
  } while (std::next_permutation(values.begin(), values.end()));
  return seen.size() == total;
}

}  // namespace maxmin
