#ifndef HEDGEGRAPH_MEASURES_HPP
#define HEDGEGRAPH_MEASURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "hedgegraph/hedgegraph.hpp"
#include "hedgegraph/oracle.hpp"
#include "hedgegraph/partition.hpp"
#include "hedgegraph/sfm.hpp"

namespace hedge {

/// A value or a band [lo, hi]; exact when lo == hi.
struct MeasureReport {
  std::string method;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::optional<Partition> witness_partition;
  std::optional<HedgeSet> witness_hedges;
  std::optional<Rational> ratio;             // kappa_1 for partition connectivity
  std::optional<bool> methods_agree;         // partition connectivity only
  std::optional<std::int64_t> exact_value;   // oracle value attached to approximations
  std::vector<std::string> notes;

  bool exact() const { return lo == hi; }
  std::int64_t value() const;
};

/// floor(kappa_1) by discrete Newton, cross-checked against the largest k
/// for which pack_bases succeeds.
MeasureReport partition_connectivity(const Hedgegraph& graph, const SfmOptions& options = {});

/// Largest k such that pack_bases(graph, k) succeeds (0 when none does).
std::size_t max_packing_number(const Hedgegraph& graph);

/// Exact only; throws OracleLimitError beyond the oracle limits.
MeasureReport weak_partition_connectivity(const Hedgegraph& graph, const OracleLimits& limits = {});

/// Constant in the greedy k* upper bound B * max(1, ceil(c ln f(E))).
inline constexpr double kKStarConstant = 10.0;

/// Band [B, B * max(1, ceil(10 ln f(E)))] where B is the number of disjoint
/// spanning hedge sets found greedily. Requires a connected hedgegraph.
MeasureReport kstar_approx(const Hedgegraph& graph, const OracleLimits& limits = {});

/// Band [B, 2 * upper + 1] around the connectivity; [0, 0] when disconnected.
MeasureReport approx_connectivity(const Hedgegraph& graph, const OracleLimits& limits = {});

struct OrientedHedge {
  std::uint32_t hyperedge = 0;
  VertexId head = 0;

  friend bool operator==(const OrientedHedge&, const OrientedHedge&) = default;
};

struct Orientation {
  VertexId root = 0;
  std::vector<OrientedHedge> choices;  // one per hedge, in hedge order
};

struct OrientResult {
  bool success = false;
  Orientation orientation;
  std::optional<Partition> certificate;  // |delta(P)| < k (|P| - 1)
};

/// Orients k packed spanning-tree trimmings away from the root; the head of
/// each tree edge is its endpoint nearer the root.
OrientResult orient(const Hedgegraph& graph, std::size_t k, VertexId root);

struct OrientationCheck {
  bool valid = true;
  std::vector<VertexId> violating;  // root in U, U != V, out-degree below k
  std::int64_t out_degree = 0;
};

/// Out-degree of U counts hedges whose chosen hyperedge has its head in U
/// and also leaves U. Enumerates all U containing the root.
OrientationCheck verify_orientation(const Hedgegraph& graph, const Orientation& orientation, std::int64_t k,
                                    const OracleLimits& limits = {});

}  // namespace hedge

#endif  // HEDGEGRAPH_MEASURES_HPP
