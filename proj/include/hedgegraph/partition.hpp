#ifndef HEDGEGRAPH_PARTITION_HPP
#define HEDGEGRAPH_PARTITION_HPP

#include <span>
#include <vector>

#include "hedgegraph/types.hpp"

namespace hedge {

/// Partition of {0, ..., n-1} into nonempty blocks, kept in canonical form:
/// blocks sorted by their minimum element, vertices sorted inside blocks.
/// Block labels therefore form a restricted growth string.
class Partition {
 public:
  /// Any labelling (equal label = same block) is accepted and canonicalized.
  static Partition from_labels(std::span<const std::uint32_t> labels);
  /// Throws InvalidArgument when blocks overlap, are empty or miss a vertex.
  static Partition from_blocks(std::size_t n, std::vector<std::vector<VertexId>> blocks);
  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<VertexId>>& blocks() const { return blocks_; }
  const std::vector<std::uint32_t>& labels() const { return labels_; }
  std::uint32_t block_of(VertexId v) const { return labels_.at(v); }

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.labels_ == b.labels_; }

 private:
  Partition() = default;
  std::vector<std::uint32_t> labels_;
  std::vector<std::vector<VertexId>> blocks_;
};

}  // namespace hedge

#endif  // HEDGEGRAPH_PARTITION_HPP
