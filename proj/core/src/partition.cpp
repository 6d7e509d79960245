#include "eqrank/partition.hpp"

#include <algorithm>
#include <unordered_map>

namespace eqrank {

Partition::Partition(std::vector<BlockId> canonical_assignment)
    : assignment_(std::move(canonical_assignment)) {
  std::size_t k = 0;
  for (BlockId b : assignment_) k = std::max<std::size_t>(k, b + std::size_t{1});
  block_offsets_.assign(k + 1, 0);
  for (BlockId b : assignment_) ++block_offsets_[b + 1];
  for (std::size_t b = 0; b < k; ++b) block_offsets_[b + 1] += block_offsets_[b];
  members_.resize(assignment_.size());
  std::vector<std::size_t> cursor(block_offsets_.begin(), block_offsets_.end() - 1);
  for (std::size_t v = 0; v < assignment_.size(); ++v) {
    members_[cursor[assignment_[v]]++] = static_cast<VertexId>(v);
  }
}

Partition Partition::from_labels(std::span<const std::uint64_t> labels) {
  std::unordered_map<std::uint64_t, BlockId> ids;
  ids.reserve(labels.size());
  std::vector<BlockId> assignment(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = ids.emplace(labels[v], static_cast<BlockId>(ids.size()));
    assignment[v] = it->second;
  }
  return Partition(std::move(assignment));
}

Partition Partition::singletons(std::size_t n) {
  std::vector<BlockId> a(n);
  for (std::size_t v = 0; v < n; ++v) a[v] = static_cast<BlockId>(v);
  return Partition(std::move(a));
}

Partition Partition::single_block(std::size_t n) { return Partition(std::vector<BlockId>(n, 0)); }

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<VertexId>>& blocks) {
  constexpr std::uint64_t kUnset = static_cast<std::uint64_t>(-1);
  std::vector<std::uint64_t> labels(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvariantError("partition block is empty");
    for (VertexId v : blocks[b]) {
      if (v >= n) throw InvariantError("partition member out of range");
      if (labels[v] != kUnset) throw InvariantError("vertex assigned to two blocks");
      labels[v] = b;
    }
  }
  for (auto l : labels) {
    if (l == kUnset) throw InvariantError("partition does not cover every vertex");
  }
  return from_labels(labels);
}

std::vector<std::vector<VertexId>> Partition::blocks() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(block_count());
  for (BlockId b = 0; b < block_count(); ++b) {
    auto m = members(b);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.vertex_count() != vertex_count()) return false;
  for (BlockId b = 0; b < block_count(); ++b) {
    auto m = members(b);
    BlockId target = coarser.block_of(m.front());
    for (VertexId v : m) {
      if (coarser.block_of(v) != target) return false;
    }
  }
  return true;
}

Partition Partition::compose(const Partition& next) const {
  if (next.vertex_count() != block_count()) {
    throw InvariantError("compose: next partition does not cover this partition's blocks");
  }
  std::vector<std::uint64_t> labels(vertex_count());
  for (std::size_t v = 0; v < vertex_count(); ++v) labels[v] = next.block_of(assignment_[v]);
  return from_labels(labels);
}

Partition intersect(const Partition& a, const Partition& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw InvariantError("intersect: partitions over different vertex sets");
  }
  std::vector<std::uint64_t> labels(a.vertex_count());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    labels[v] = (std::uint64_t{a.block_of(static_cast<VertexId>(v))} << 32) |
                b.block_of(static_cast<VertexId>(v));
  }
  return Partition::from_labels(labels);
}

}  // namespace eqrank
