#ifndef HEDGEGRAPH_POLYMATROID_HPP
#define HEDGEGRAPH_POLYMATROID_HPP

#include <span>
#include <vector>

#include "hedgegraph/disjoint_sets.hpp"
#include "hedgegraph/hedgegraph.hpp"
#include "hedgegraph/partition.hpp"

namespace hedge {

/// Evaluates f(A) = |V| - #components(V, A) with reusable scratch space.
/// Not thread-safe; make one per thread.
class Polymatroid {
 public:
  explicit Polymatroid(const Hedgegraph& graph);

  const Hedgegraph& graph() const { return *graph_; }
  std::size_t ground_size() const { return graph_->hedge_count(); }

  std::int64_t operator()(const HedgeSet& hedges);
  /// Same as operator() for hedge universes of at most 64 elements.
  std::int64_t evaluate_mask(std::uint64_t mask);
  std::int64_t full_value();
  /// f(A + e) - f(A)
  std::int64_t marginal(const HedgeSet& hedges, HedgeIndex e);

  std::size_t evaluations() const { return evaluations_; }

 private:
  void absorb(HedgeIndex e);

  const Hedgegraph* graph_;
  DisjointSets sets_;
  std::size_t evaluations_ = 0;
};

/// Connected components of the hypergraph formed by all hyperedges of hedges in A.
Partition components(const Hedgegraph& graph, const HedgeSet& hedges);
bool is_connected(const Hedgegraph& graph);

std::int64_t polymatroid_f(const Hedgegraph& graph, const HedgeSet& hedges);

/// Hedges with a hyperedge meeting both S and V \ S. Requires 0 < |S| < n.
HedgeSet cut_hedges(const Hedgegraph& graph, std::span<const VertexId> side);
std::size_t cut_size(const Hedgegraph& graph, std::span<const VertexId> side);
Rational cut_weight(const Hedgegraph& graph, std::span<const VertexId> side);

/// Hedges with a hyperedge meeting at least two blocks.
HedgeSet partition_boundary(const Hedgegraph& graph, const Partition& partition);
/// Complement of the boundary: hedges whose hyperedges each sit inside one block.
HedgeSet internal_hedges(const Hedgegraph& graph, const Partition& partition);
/// Weighted boundary size.
Rational partition_capacity(const Hedgegraph& graph, const Partition& partition, std::span<const Rational> weights);

/// |P| - #components after contracting every block of P in (V, {e}).
std::int64_t wpc_term(const Hedgegraph& graph, const Partition& partition, HedgeIndex e);

/// Hedges whose addition does not change f. Always contains A.
HedgeSet span(const Hedgegraph& graph, const HedgeSet& hedges);
bool is_closed(const Hedgegraph& graph, const HedgeSet& hedges);

}  // namespace hedge

#endif  // HEDGEGRAPH_POLYMATROID_HPP
