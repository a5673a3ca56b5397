#include "hedgegraph/polymatroid.hpp"

#include <algorithm>

namespace hedge {

Polymatroid::Polymatroid(const Hedgegraph& graph) : graph_(&graph), sets_(graph.vertex_count()) {}

void Polymatroid::absorb(HedgeIndex e) {
  for (const auto& h : graph_->hedges()[e].hyperedges)
    for (std::size_t i = 1; i < h.vertices.size(); ++i) sets_.unite(h.vertices[0], h.vertices[i]);
}

std::int64_t Polymatroid::operator()(const HedgeSet& hedges) {
  graph_->check(hedges);
  ++evaluations_;
  sets_.reset(graph_->vertex_count());
  hedges.for_each([&](HedgeIndex e) { absorb(e); });
  return static_cast<std::int64_t>(graph_->vertex_count() - sets_.set_count());
}

std::int64_t Polymatroid::evaluate_mask(std::uint64_t mask) {
  ++evaluations_;
  sets_.reset(graph_->vertex_count());
  while (mask != 0) {
    auto e = static_cast<HedgeIndex>(__builtin_ctzll(mask));
    mask &= mask - 1;
    absorb(e);
  }
  return static_cast<std::int64_t>(graph_->vertex_count() - sets_.set_count());
}

std::int64_t Polymatroid::full_value() { return (*this)(graph_->all_hedges()); }

std::int64_t Polymatroid::marginal(const HedgeSet& hedges, HedgeIndex e) {
  HedgeSet with = hedges;
  with.insert(e);
  return (*this)(with) - (*this)(hedges);
}

Partition components(const Hedgegraph& graph, const HedgeSet& hedges) {
  graph.check(hedges);
  DisjointSets sets(graph.vertex_count());
  hedges.for_each([&](HedgeIndex e) {
    for (const auto& h : graph.hedges()[e].hyperedges)
      for (std::size_t i = 1; i < h.vertices.size(); ++i) sets.unite(h.vertices[0], h.vertices[i]);
  });
  std::vector<std::uint32_t> labels(graph.vertex_count());
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = static_cast<std::uint32_t>(sets.find(v));
  return Partition::from_labels(labels);
}

bool is_connected(const Hedgegraph& graph) { return components(graph, graph.all_hedges()).block_count() == 1; }

std::int64_t polymatroid_f(const Hedgegraph& graph, const HedgeSet& hedges) {
  Polymatroid f(graph);
  return f(hedges);
}

namespace {

std::vector<bool> membership(const Hedgegraph& graph, std::span<const VertexId> side) {
  std::vector<bool> in(graph.vertex_count(), false);
  std::size_t count = 0;
  for (VertexId v : side) {
    graph.check(v);
    if (!in[v]) ++count;
    in[v] = true;
  }
  if (count == 0) throw InvalidArgument("cut side must be nonempty");
  if (count == graph.vertex_count()) throw InvalidArgument("cut side must be a proper subset of V");
  return in;
}

bool crosses_labels(const Hyperedge& h, const std::vector<std::uint32_t>& labels) {
  for (std::size_t i = 1; i < h.vertices.size(); ++i)
    if (labels[h.vertices[i]] != labels[h.vertices[0]]) return true;
  return false;
}

}  // namespace

HedgeSet cut_hedges(const Hedgegraph& graph, std::span<const VertexId> side) {
  auto in = membership(graph, side);
  HedgeSet out = graph.no_hedges();
  for (std::size_t e = 0; e < graph.hedge_count(); ++e) {
    for (const auto& h : graph.hedges()[e].hyperedges) {
      bool inside = false;
      bool outside = false;
      for (VertexId v : h.vertices) (in[v] ? inside : outside) = true;
      if (inside && outside) {
        out.insert(static_cast<HedgeIndex>(e));
        break;
      }
    }
  }
  return out;
}

std::size_t cut_size(const Hedgegraph& graph, std::span<const VertexId> side) { return cut_hedges(graph, side).size(); }

Rational cut_weight(const Hedgegraph& graph, std::span<const VertexId> side) {
  Rational total(0);
  cut_hedges(graph, side).for_each([&](HedgeIndex e) { total += graph.hedges()[e].weight; });
  return total;
}

HedgeSet partition_boundary(const Hedgegraph& graph, const Partition& partition) {
  if (partition.vertex_count() != graph.vertex_count())
    throw InvalidArgument("partition is not over this hedgegraph's vertex set");
  HedgeSet out = graph.no_hedges();
  const auto& labels = partition.labels();
  for (std::size_t e = 0; e < graph.hedge_count(); ++e) {
    const auto& hyperedges = graph.hedges()[e].hyperedges;
    if (std::any_of(hyperedges.begin(), hyperedges.end(), [&](const Hyperedge& h) { return crosses_labels(h, labels); }))
      out.insert(static_cast<HedgeIndex>(e));
  }
  return out;
}

HedgeSet internal_hedges(const Hedgegraph& graph, const Partition& partition) {
  return partition_boundary(graph, partition).complement();
}

Rational partition_capacity(const Hedgegraph& graph, const Partition& partition, std::span<const Rational> weights) {
  if (weights.size() != graph.hedge_count()) throw InvalidArgument("weight vector has the wrong length");
  Rational total(0);
  partition_boundary(graph, partition).for_each([&](HedgeIndex e) { total += weights[e]; });
  return total;
}

std::int64_t wpc_term(const Hedgegraph& graph, const Partition& partition, HedgeIndex e) {
  if (partition.vertex_count() != graph.vertex_count())
    throw InvalidArgument("partition is not over this hedgegraph's vertex set");
  DisjointSets blocks(partition.block_count());
  for (const auto& h : graph.hedge(e).hyperedges)
    for (std::size_t i = 1; i < h.vertices.size(); ++i)
      blocks.unite(partition.block_of(h.vertices[0]), partition.block_of(h.vertices[i]));
  return static_cast<std::int64_t>(partition.block_count() - blocks.set_count());
}

HedgeSet span(const Hedgegraph& graph, const HedgeSet& hedges) {
  // e is spanned by A exactly when each hyperedge of e lies inside one component of (V, A).
  Partition parts = components(graph, hedges);
  return internal_hedges(graph, parts);
}

bool is_closed(const Hedgegraph& graph, const HedgeSet& hedges) { return span(graph, hedges) == hedges; }

}  // namespace hedge
