#include "hedgegraph/partition.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace hedge {

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  Partition p;
  p.labels_.resize(labels.size());
  std::unordered_map<std::uint32_t, std::uint32_t> canonical;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = canonical.emplace(labels[v], static_cast<std::uint32_t>(p.blocks_.size()));
    if (inserted) p.blocks_.emplace_back();
    p.labels_[v] = it->second;
    p.blocks_[it->second].push_back(static_cast<VertexId>(v));
  }
  return p;
}

Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<VertexId>> blocks) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> labels(n, kUnset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidArgument("partition has an empty block");
    for (VertexId v : blocks[b]) {
      if (v >= n) throw InvalidArgument("partition references unknown vertex " + std::to_string(v));
      if (labels[v] != kUnset) throw InvalidArgument("partition blocks overlap at vertex " + std::to_string(v));
      labels[v] = static_cast<std::uint32_t>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), kUnset) != labels.end())
    throw InvalidArgument("partition does not cover every vertex");
  return from_labels(labels);
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::uint32_t> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = static_cast<std::uint32_t>(v);
  return from_labels(labels);
}

Partition Partition::whole(std::size_t n) {
  std::vector<std::uint32_t> labels(n, 0);
  return from_labels(labels);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.vertex_count() != vertex_count()) throw InvalidArgument("partitions of different vertex sets");
  for (const auto& block : blocks_) {
    auto target = coarser.block_of(block.front());
    for (VertexId v : block)
      if (coarser.block_of(v) != target) return false;
  }
  return true;
}

}  // namespace hedge
