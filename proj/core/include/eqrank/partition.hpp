#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eqrank/types.hpp"

namespace eqrank {

/// A total assignment of vertices 0..n-1 to blocks 0..k-1.
///
/// Always held in canonical form: blocks are numbered in order of their
/// smallest member, so two partitions with the same blocks compare equal.
class Partition {
 public:
  Partition() = default;

  /// Builds from arbitrary per-vertex labels; equal labels share a block.
  static Partition from_labels(std::span<const std::uint64_t> labels);

  static Partition singletons(std::size_t n);
  static Partition single_block(std::size_t n);
  /// Throws InvariantError unless `blocks` is a disjoint cover of 0..n-1 with nonempty blocks.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<VertexId>>& blocks);

  std::size_t vertex_count() const { return assignment_.size(); }
  std::size_t block_count() const { return block_offsets_.empty() ? 0 : block_offsets_.size() - 1; }

  BlockId block_of(VertexId v) const { return assignment_[v]; }
  std::span<const BlockId> assignment() const { return assignment_; }
  /// Members of block b in increasing order.
  std::span<const VertexId> members(BlockId b) const {
    return {members_.data() + block_offsets_[b], members_.data() + block_offsets_[b + 1]};
  }
  std::size_t block_size(BlockId b) const { return block_offsets_[b + 1] - block_offsets_[b]; }
  std::vector<std::vector<VertexId>> blocks() const;

  /// True if every block of *this lies inside one block of `coarser`.
  bool refines(const Partition& coarser) const;

  /// Maps this partition's blocks through `next` (a partition of the blocks).
  Partition compose(const Partition& next) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  explicit Partition(std::vector<BlockId> canonical_assignment);

  std::vector<BlockId> assignment_;
  std::vector<std::size_t> block_offsets_;
  std::vector<VertexId> members_;
};

/// Common refinement: x ~ y iff x ~ y in both.
Partition intersect(const Partition& a, const Partition& b);

}  // namespace eqrank
