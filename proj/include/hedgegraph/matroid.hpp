#ifndef HEDGEGRAPH_MATROID_HPP
#define HEDGEGRAPH_MATROID_HPP

#include <optional>
#include <vector>

#include "hedgegraph/hedgegraph.hpp"
#include "hedgegraph/partition.hpp"

namespace hedge {

/// A hedge replaced by the pair {u, v} (u < v) from one of its hyperedges.
struct TrimElement {
  HedgeIndex hedge = 0;
  std::uint32_t hyperedge = 0;
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const TrimElement&, const TrimElement&) = default;
};

/// At most one element per hedge, sorted by hedge.
using Trimming = std::vector<TrimElement>;

bool is_valid_trimming(const Hedgegraph& graph, const Trimming& trimming);
bool is_forest_trimming(const Hedgegraph& graph, const Trimming& trimming);
bool is_spanning_tree_trimming(const Hedgegraph& graph, const Trimming& trimming);
HedgeSet trimmed_hedges(const Hedgegraph& graph, const Trimming& trimming);

struct MatroidRank {
  std::int64_t rank = 0;
  HedgeSet independent;  // a maximum independent subset of A
  Trimming witness;      // forest trimming of `independent`
  HedgeSet tight;        // B subset of A with f(B) + |A \ B| = rank
};

MatroidRank rank_with_witness(const Hedgegraph& graph, const HedgeSet& hedges);
std::int64_t rank(const Hedgegraph& graph, const HedgeSet& hedges);

struct IndependenceResult {
  bool independent = true;
  Trimming witness;      // forest trimming of all of A when independent
  HedgeSet certificate;  // B subset of A with |B| > f(B) when dependent
};

IndependenceResult is_independent(const Hedgegraph& graph, const HedgeSet& hedges);

struct SpanningTreeResult {
  bool found = false;
  HedgeSet hedges;
  Trimming trimming;
  std::optional<Partition> certificate;  // |delta(P)| < |P| - 1
};

SpanningTreeResult spanning_tree_trimming(const Hedgegraph& graph);

struct PackingResult {
  bool success = false;
  std::vector<HedgeSet> bases;
  std::vector<Trimming> trimmings;
  HedgeSet leftover;
  std::optional<Partition> certificate;  // |delta(P)| < k (|P| - 1)
};

PackingResult pack_bases(const Hedgegraph& graph, std::size_t k);

struct CoverResult {
  bool success = false;
  std::vector<HedgeSet> classes;  // nonempty, disjoint, union E
  std::vector<Trimming> trimmings;
  std::optional<Partition> certificate;  // |E[P]| > k (|V| - |P|)
};

CoverResult cover_acyclic_trimmable(const Hedgegraph& graph, std::size_t k);

struct CoverNumber {
  std::size_t k = 1;
  CoverResult cover;                           // feasible cover with k classes
  std::optional<Partition> below_certificate;  // violation at k - 1 (absent when k = 1)
};

/// Least k >= 1 admitting a cover. Throws InvalidArgument when some hedge has
/// no vertex pair at all, since then no k works.
CoverNumber min_cover_number(const Hedgegraph& graph);

}  // namespace hedge

#endif  // HEDGEGRAPH_MATROID_HPP
