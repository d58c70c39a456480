#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxmin/blocks.hpp"
#include "maxmin/permutation.hpp"

namespace maxmin {

using Edge = std::pair<Label, Label>;

/// Labeled tree on nodes 1..node_count. Neighbor lists are kept sorted so
/// serializations are canonical.
class MaxminTree {
 public:
  /// Builds from an edge list; throws std::invalid_argument unless the edges
  /// form a spanning tree on 1..node_count.
  MaxminTree(std::size_t node_count, const std::vector<Edge>& edges)
      : adjacency_(node_count + 1) {
    if (node_count == 0) throw std::invalid_argument("tree needs at least one node");
    if (edges.size() != node_count - 1) {
      throw std::invalid_argument("a tree on k nodes has k-1 edges");
    }
    const auto in_range = [&](Label v) {
      return v >= 1 && static_cast<std::size_t>(v) <= node_count;
    };
    for (auto [a, b] : edges) {
      if (!in_range(a) || !in_range(b) || a == b) throw std::invalid_argument("bad edge");
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
    if (component_size(1) != node_count) throw std::invalid_argument("edges are not connected");
  }

  std::size_t node_count() const noexcept { return adjacency_.size() - 1; }

  const std::vector<Label>& neighbors(Label v) const { return adjacency_.at(v); }

  /// Edges (a, b) with a < b, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Label a = 1; static_cast<std::size_t>(a) <= node_count(); ++a) {
      for (Label b : adjacency_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  bool is_local_max(Label v) const {
    const auto& nb = adjacency_.at(v);
    return !nb.empty() && nb.back() < v;
  }

  bool is_local_min(Label v) const {
    const auto& nb = adjacency_.at(v);
    return !nb.empty() && nb.front() > v;
  }

  friend bool operator==(const MaxminTree&, const MaxminTree&) = default;

 private:
  std::size_t component_size(Label start) const {
    std::vector<bool> seen(adjacency_.size(), false);
    std::vector<Label> stack{start};
    seen[start] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
      const Label v = stack.back();
      stack.pop_back();
      ++count;
      for (Label u : adjacency_[v]) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return count;
  }

  std::vector<std::vector<Label>> adjacency_;
};

/// Maximum-weight maxmin tree: each segment minimum connects to the maximum
/// (rightmost element) of every block of its decomposition.
inline MaxminTree build_max_weight_tree(const Permutation& p) {
  const ExtendedPermutation ext(p);
  const BlockDecomposer splitter(ext);
  std::vector<Edge> edges;
  edges.reserve(p.size());
  for_each_decomposition(splitter, [&](Interval, const BlockDecomposition& split) {
    const Label m = ext[split.min_position];
    for (const Interval& block : split.left_blocks) edges.emplace_back(m, ext[block.last]);
    if (split.right_block) edges.emplace_back(m, ext[split.right_block->last]);
  });
  return MaxminTree(p.size() + 1, edges);
}

/// True iff every node is a strict local max or strict local min.
inline bool is_maxmin(const MaxminTree& t) {
  if (t.node_count() == 1) return true;
  for (Label v = 1; static_cast<std::size_t>(v) <= t.node_count(); ++v) {
    if (!t.is_local_max(v) && !t.is_local_min(v)) return false;
  }
  return true;
}

/// Number of local maxima.
inline std::size_t tree_descents(const MaxminTree& t) {
  std::size_t count = 0;
  for (Label v = 1; static_cast<std::size_t>(v) <= t.node_count(); ++v) count += t.is_local_max(v);
  return count;
}

/// Labels reachable from i through nodes >= i, ascending.
inline std::vector<Label> subtree(const MaxminTree& t, Label i) {
  if (i < 1 || static_cast<std::size_t>(i) > t.node_count()) {
    throw std::out_of_range("label not in tree");
  }
  std::vector<bool> seen(t.node_count() + 1, false);
  std::vector<Label> stack{i};
  std::vector<Label> out;
  seen[i] = true;
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (Label u : t.neighbors(v)) {
      if (u >= i && !seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Weight by the defining recursion: remove the minimum m; for each component
/// C with attachment node u, add (#local maxima of C smaller than u) + w(C).
/// Local-max status is evaluated inside each component.
inline std::int64_t weight_recursive(const MaxminTree& t) {
  const std::size_t size = t.node_count();
  // owner[v] = id of the component v currently belongs to; -1 once removed.
  std::vector<std::int64_t> owner(size + 1, 0);
  std::int64_t next_id = 1;
  std::vector<std::pair<std::int64_t, std::vector<Label>>> work;
  {
    std::vector<Label> all(size);
    for (std::size_t v = 0; v < size; ++v) all[v] = static_cast<Label>(v + 1);
    work.emplace_back(0, std::move(all));
  }
  std::int64_t weight = 0;
  std::vector<Label> stack;
  while (!work.empty()) {
    auto [id, nodes] = std::move(work.back());
    work.pop_back();
    if (nodes.size() <= 1) continue;
    const Label m = *std::min_element(nodes.begin(), nodes.end());
    owner[m] = -1;
    for (Label u : t.neighbors(m)) {
      if (owner[u] != id) continue;
      const std::int64_t child = next_id++;
      std::vector<Label> members;
      owner[u] = child;
      stack.assign(1, u);
      while (!stack.empty()) {
        const Label v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (Label x : t.neighbors(v)) {
          if (owner[x] == id) {
            owner[x] = child;
            stack.push_back(x);
          }
        }
      }
      std::int64_t smaller_maxima = 0;
      for (Label v : members) {
        if (v >= u) continue;
        bool has_neighbor = false;
        bool all_smaller = true;
        for (Label x : t.neighbors(v)) {
          if (owner[x] != child) continue;
          has_neighbor = true;
          all_smaller = all_smaller && x < v;
        }
        smaller_maxima += has_neighbor && all_smaller;
      }
      weight += smaller_maxima;
      work.emplace_back(child, std::move(members));
    }
  }
  return weight;
}

/// Sum over local minima v of des(subtree(t, v)), minus (node_count - 1).
/// Valid for trees produced by build_max_weight_tree.
inline std::int64_t weight_via_descent_sums(const MaxminTree& t) {
  std::int64_t total = 0;
  for (Label v = 1; static_cast<std::size_t>(v) <= t.node_count(); ++v) {
    if (!t.is_local_min(v)) continue;
    for (Label x : subtree(t, v)) total += t.is_local_max(x);
  }
  return total - static_cast<std::int64_t>(t.node_count() - 1);
}

}  // namespace maxmin
