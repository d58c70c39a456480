#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "maxmin/detail/sparse_table.hpp"
#include "maxmin/permutation.hpp"

namespace maxmin {

/// Inclusive range of positions in an ExtendedPermutation.
struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const noexcept { return last - first + 1; }
  bool contains(std::size_t i) const noexcept { return first <= i && i <= last; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// One level of the recursive split: the segment minimum, the blocks cut off
/// its left part at successive running maxima, and the part to its right.
struct BlockDecomposition {
  std::size_t min_position = 0;
  std::vector<Interval> left_blocks;
  std::optional<Interval> right_block;
};

/// Splits segments of one extended word. Holds O(1) range-min/max tables, so
/// repeated decompositions during tree construction cost O(#blocks) each.
class BlockDecomposer {
 public:
  explicit BlockDecomposer(const ExtendedPermutation& ext) : ext_(ext) {
    mins_.assign(ext_.values());
    maxs_.assign(ext_.values());
  }

  BlockDecomposer(const BlockDecomposer&) = delete;
  BlockDecomposer& operator=(const BlockDecomposer&) = delete;

  const ExtendedPermutation& word() const noexcept { return ext_; }

  /// Segment must be nonempty and lie within positions 1..n+1.
  BlockDecomposition decompose(Interval segment) const {
    if (segment.first < 1 || segment.last > ext_.n() + 1 || segment.first > segment.last) {
      throw std::out_of_range("segment must lie within positions 1..n+1");
    }
    BlockDecomposition out;
    out.min_position = mins_.query(segment.first, segment.last);
    std::size_t cursor = segment.first;
    while (cursor < out.min_position) {
      const std::size_t top = maxs_.query(cursor, out.min_position - 1);
      out.left_blocks.push_back({cursor, top});
      cursor = top + 1;
    }
    if (out.min_position < segment.last) {
      out.right_block = Interval{out.min_position + 1, segment.last};
    }
    return out;
  }

  std::size_t argmin(Interval block) const { return mins_.query(block.first, block.last); }
  std::size_t argmax(Interval block) const { return maxs_.query(block.first, block.last); }

  bool max_at_right(Interval block) const { return argmax(block) == block.last; }

 private:
  const ExtendedPermutation& ext_;
  detail::MinTable<Label> mins_;
  detail::MaxTable<Label> maxs_;
};

inline BlockDecomposition decompose_blocks(const ExtendedPermutation& ext, Interval segment) {
  return BlockDecomposer(ext).decompose(segment);
}

/// Visits every (segment, decomposition) pair of the full recursion, starting
/// from positions 1..n+1. Throws std::logic_error if any block fails to have
/// its maximum at the right end.
template <typename Visitor>
void for_each_decomposition(const BlockDecomposer& splitter, Visitor&& visit) {
  std::vector<Interval> pending{{1, splitter.word().n() + 1}};
  while (!pending.empty()) {
    const Interval segment = pending.back();
    pending.pop_back();
    if (segment.length() == 1) continue;
    BlockDecomposition split = splitter.decompose(segment);
    for (const Interval& block : split.left_blocks) pending.push_back(block);
    if (split.right_block) {
      if (!splitter.max_at_right(*split.right_block)) {
        throw std::logic_error("block maximum is not its rightmost element");
      }
      pending.push_back(*split.right_block);
    }
    visit(segment, split);
  }
}

}  // namespace maxmin
