#ifndef HEDGEGRAPH_ORACLE_HPP
#define HEDGEGRAPH_ORACLE_HPP

// Brute-force reference computations. Everything here enumerates vertex
// subsets, vertex partitions or hedge subsets and refuses inputs beyond the
// configured limits.

#include <functional>
#include <span>
#include <vector>

#include "hedgegraph/hedgegraph.hpp"
#include "hedgegraph/partition.hpp"

namespace hedge {

struct OracleLimits {
  std::size_t max_vertices = 12;
  std::size_t max_hedges = 20;

  /// Defaults overridden by HEDGE_ORACLE_MAX_VERTICES / HEDGE_ORACLE_MAX_HEDGES.
  static OracleLimits from_environment();
};

struct CutWitness {
  std::int64_t value = 0;
  std::vector<VertexId> side;  // always contains vertex 0
};

struct PartitionWitness {
  std::int64_t value = 0;
  Partition partition = Partition::whole(1);
};

struct KStarResult {
  Extended<std::int64_t> value;
  HedgeSet argmin;  // meaningful only when value is finite
};

struct KappaResult {
  Extended<Rational> value;
  HedgeSet argmin;
};

struct RankResult {
  std::int64_t value = 0;
  HedgeSet argmin;  // a B achieving f(B) + |A \ B| = value
};

/// Visits every partition of {0..n-1} in lexicographic order of its
/// restricted growth string. `visit(labels, block_count)` returns false to stop.
void for_each_partition(std::size_t n, const std::function<bool(std::span<const std::uint32_t>, std::size_t)>& visit);

CutWitness exact_connectivity(const Hedgegraph& graph, const OracleLimits& limits = {});
PartitionWitness exact_pc(const Hedgegraph& graph, const OracleLimits& limits = {});
PartitionWitness exact_wpc(const Hedgegraph& graph, const OracleLimits& limits = {});
KStarResult exact_kstar(const Hedgegraph& graph, const OracleLimits& limits = {});
KappaResult exact_kappa(const Hedgegraph& graph, std::span<const Rational> weights, const OracleLimits& limits = {});
RankResult exact_rank(const Hedgegraph& graph, const HedgeSet& hedges, const OracleLimits& limits = {});

/// {delta(P) : P a partition of V}, sorted and deduplicated.
std::vector<HedgeSet> enumerate_quotients(const Hedgegraph& graph, const OracleLimits& limits = {});
/// {E \ span(S) : S subset of E}, sorted and deduplicated. Enumerates hedge subsets.
std::vector<HedgeSet> quotients_by_span(const Hedgegraph& graph, const OracleLimits& limits = {});

/// Minimum over all 2^m subsets of an arbitrary set function given on masks.
/// Returns (value, first minimizing mask in increasing mask order).
std::pair<std::int64_t, std::uint64_t> exhaustive_minimum(std::size_t ground_size,
                                                          const std::function<std::int64_t(std::uint64_t)>& fn);

}  // namespace hedge

#endif  // HEDGEGRAPH_ORACLE_HPP
