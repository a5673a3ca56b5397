#include "hedgegraph/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "hedgegraph/disjoint_sets.hpp"
#include "hedgegraph/polymatroid.hpp"

namespace hedge {

namespace {

// Hard ceilings independent of the configurable limits: vertex subsets are
// 64-bit masks and the f-table for k* holds 2^m entries.
constexpr std::size_t kHardMaxVertices = 63;
constexpr std::size_t kHardMaxHedges = 24;

std::size_t read_env(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw InvalidArgument(std::string(name) + " must be a positive integer");
  return static_cast<std::size_t>(value);
}

void require_vertices(const Hedgegraph& graph, const OracleLimits& limits, const char* what) {
  std::size_t n = graph.vertex_count();
  if (n > limits.max_vertices || n > kHardMaxVertices)
    throw OracleLimitError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the oracle limit of " +
                           std::to_string(std::min(limits.max_vertices, kHardMaxVertices)));
}

void require_hedges(std::size_t m, const OracleLimits& limits, const char* what) {
  if (m > limits.max_hedges || m > kHardMaxHedges)
    throw OracleLimitError(std::string(what) + ": " + std::to_string(m) + " hedges exceeds the oracle limit of " +
                           std::to_string(std::min(limits.max_hedges, kHardMaxHedges)));
}

void require_two_vertices(const Hedgegraph& graph, const char* what) {
  if (graph.vertex_count() < 2) throw InvalidArgument(std::string(what) + " needs at least two vertices");
}

bool hyperedge_crosses(const Hyperedge& h, std::span<const std::uint32_t> labels) {
  for (std::size_t i = 1; i < h.vertices.size(); ++i)
    if (labels[h.vertices[i]] != labels[h.vertices[0]]) return true;
  return false;
}

bool hedge_crosses(const Hedge& e, std::span<const std::uint32_t> labels) {
  return std::any_of(e.hyperedges.begin(), e.hyperedges.end(),
                     [&](const Hyperedge& h) { return hyperedge_crosses(h, labels); });
}

// f restricted to the hedges listed in `indices`, addressed by local bitmask.
class LocalEvaluator {
 public:
  LocalEvaluator(const Hedgegraph& graph, std::vector<HedgeIndex> indices)
      : graph_(graph), indices_(std::move(indices)), sets_(graph.vertex_count()) {}

  std::int64_t operator()(std::uint64_t local) {
    sets_.reset(graph_.vertex_count());
    while (local != 0) {
      auto bit = static_cast<std::size_t>(__builtin_ctzll(local));
      local &= local - 1;
      for (const auto& h : graph_.hedges()[indices_[bit]].hyperedges)
        for (std::size_t i = 1; i < h.vertices.size(); ++i) sets_.unite(h.vertices[0], h.vertices[i]);
    }
    return static_cast<std::int64_t>(graph_.vertex_count() - sets_.set_count());
  }

  HedgeSet to_set(std::uint64_t local) const {
    HedgeSet out(graph_.hedge_count());
    for (std::size_t bit = 0; bit < indices_.size(); ++bit)
      if ((local >> bit) & 1U) out.insert(indices_[bit]);
    return out;
  }

 private:
  const Hedgegraph& graph_;
  std::vector<HedgeIndex> indices_;
  DisjointSets sets_;
};

std::vector<HedgeIndex> all_indices(std::size_t m) {
  std::vector<HedgeIndex> out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<HedgeIndex>(i);
  return out;
}

std::vector<std::int64_t> f_table(const Hedgegraph& graph) {
  const std::size_t m = graph.hedge_count();
  LocalEvaluator f(graph, all_indices(m));
  std::vector<std::int64_t> table(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = f(mask);
  return table;
}

}  // namespace

OracleLimits OracleLimits::from_environment() {
  OracleLimits limits;
  limits.max_vertices = read_env("HEDGE_ORACLE_MAX_VERTICES", limits.max_vertices);
  limits.max_hedges = read_env("HEDGE_ORACLE_MAX_HEDGES", limits.max_hedges);
  return limits;
}

void for_each_partition(std::size_t n, const std::function<bool(std::span<const std::uint32_t>, std::size_t)>& visit) {
  if (n == 0) return;
  std::vector<std::uint32_t> labels(n, 0);
  std::vector<std::uint32_t> prefix_max(n, 0);  // max(labels[0..i])
  while (true) {
    if (!visit(labels, prefix_max[n - 1] + 1)) return;
    std::size_t i = n - 1;
    while (i > 0 && labels[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++labels[i];
    prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      labels[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

CutWitness exact_connectivity(const Hedgegraph& graph, const OracleLimits& limits) {
  require_two_vertices(graph, "exact_connectivity");
  require_vertices(graph, limits, "exact_connectivity");
  const std::size_t n = graph.vertex_count();

  std::vector<std::vector<std::uint64_t>> masks;
  for (const auto& e : graph.hedges()) {
    auto& hm = masks.emplace_back();
    for (const auto& h : e.hyperedges) {
      std::uint64_t bits = 0;
      for (VertexId v : h.vertices) bits |= std::uint64_t{1} << v;
      hm.push_back(bits);
    }
  }

  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  std::int64_t best = -1;
  std::uint64_t best_side = 0;
  const std::uint64_t rest = std::uint64_t{1} << (n - 1);
  for (std::uint64_t s = 0; s + 1 < rest; ++s) {
    const std::uint64_t side = 1U | (s << 1);
    const std::uint64_t other = full & ~side;
    std::int64_t count = 0;
    for (const auto& hm : masks) {
      for (std::uint64_t bits : hm) {
        if ((bits & side) != 0 && (bits & other) != 0) {
          ++count;
          break;
        }
      }
      if (best >= 0 && count >= best) break;
    }
    if (best < 0 || count < best) {
      best = count;
      best_side = side;
      if (best == 0) break;
    }
  }

  CutWitness out;
  out.value = best;
  for (std::size_t v = 0; v < n; ++v)
    if ((best_side >> v) & 1U) out.side.push_back(static_cast<VertexId>(v));
  return out;
}

PartitionWitness exact_pc(const Hedgegraph& graph, const OracleLimits& limits) {
  require_two_vertices(graph, "exact_pc");
  require_vertices(graph, limits, "exact_pc");
  std::int64_t best = -1;
  std::vector<std::uint32_t> best_labels;
  for_each_partition(graph.vertex_count(), [&](std::span<const std::uint32_t> labels, std::size_t blocks) {
    if (blocks < 2) return true;
    const auto parts = static_cast<std::int64_t>(blocks - 1);
    // Only a strictly smaller floor ratio replaces the incumbent, so stop
    // counting once the boundary reaches best * (|P| - 1).
    const std::int64_t cap = best < 0 ? -1 : best * parts;
    std::int64_t boundary = 0;
    for (const auto& e : graph.hedges()) {
      if (hedge_crosses(e, labels)) ++boundary;
      if (cap >= 0 && boundary >= cap) return true;
    }
    std::int64_t value = boundary / parts;
    if (best < 0 || value < best) {
      best = value;
      best_labels.assign(labels.begin(), labels.end());
    }
    return best > 0;
  });
  return {best, Partition::from_labels(best_labels)};
}

PartitionWitness exact_wpc(const Hedgegraph& graph, const OracleLimits& limits) {
  require_two_vertices(graph, "exact_wpc");
  require_vertices(graph, limits, "exact_wpc");
  std::int64_t best = -1;
  std::vector<std::uint32_t> best_labels;
  DisjointSets blocks_uf;
  for_each_partition(graph.vertex_count(), [&](std::span<const std::uint32_t> labels, std::size_t blocks) {
    if (blocks < 2) return true;
    const auto parts = static_cast<std::int64_t>(blocks - 1);
    const std::int64_t cap = best < 0 ? -1 : best * parts;
    std::int64_t total = 0;
    for (const auto& e : graph.hedges()) {
      blocks_uf.reset(blocks);
      for (const auto& h : e.hyperedges)
        for (std::size_t i = 1; i < h.vertices.size(); ++i) blocks_uf.unite(labels[h.vertices[0]], labels[h.vertices[i]]);
      total += static_cast<std::int64_t>(blocks - blocks_uf.set_count());
      if (cap >= 0 && total >= cap) return true;
    }
    std::int64_t value = total / parts;
    if (best < 0 || value < best) {
      best = value;
      best_labels.assign(labels.begin(), labels.end());
    }
    return best > 0;
  });
  return {best, Partition::from_labels(best_labels)};
}

KStarResult exact_kstar(const Hedgegraph& graph, const OracleLimits& limits) {
  const std::size_t m = graph.hedge_count();
  require_hedges(m, limits, "exact_kstar");
  auto table = f_table(graph);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  const std::int64_t f_full = table[full];

  KStarResult out{Extended<std::int64_t>::infinity(), graph.no_hedges()};
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const std::int64_t gap = f_full - table[mask];
    if (gap == 0) continue;
    std::int64_t marginals = 0;
    for (std::size_t e = 0; e < m; ++e)
      if (!((mask >> e) & 1U)) marginals += table[mask | (std::uint64_t{1} << e)] - table[mask];
    const std::int64_t value = marginals / gap;
    if (out.value.is_infinite() || value < out.value.value()) {
      out.value = value;
      out.argmin = HedgeSet::from_mask(m, mask);
    }
  }
  return out;
}

KappaResult exact_kappa(const Hedgegraph& graph, std::span<const Rational> weights, const OracleLimits& limits) {
  const std::size_t m = graph.hedge_count();
  if (weights.size() != m) throw InvalidArgument("weight vector has the wrong length");
  for (const auto& w : weights)
    if (w < Rational(0)) throw InvalidArgument("weights must be nonnegative");
  require_hedges(m, limits, "exact_kappa");
  auto table = f_table(graph);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  const std::int64_t f_full = table[full];
  Rational w_full(0);
  for (const auto& w : weights) w_full += w;

  KappaResult out{Extended<Rational>::infinity(), graph.no_hedges()};
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const std::int64_t gap = f_full - table[mask];
    if (gap == 0) continue;
    Rational w_in(0);
    for (std::size_t e = 0; e < m; ++e)
      if ((mask >> e) & 1U) w_in += weights[e];
    Rational value = (w_full - w_in) / gap;
    if (out.value.is_infinite() || value < out.value.value()) {
      out.value = value;
      out.argmin = HedgeSet::from_mask(m, mask);
    }
  }
  return out;
}

RankResult exact_rank(const Hedgegraph& graph, const HedgeSet& hedges, const OracleLimits& limits) {
  graph.check(hedges);
  auto indices = hedges.indices();
  require_hedges(indices.size(), limits, "exact_rank");
  LocalEvaluator f(graph, indices);
  const auto size = static_cast<std::int64_t>(indices.size());
  auto [value, mask] = exhaustive_minimum(indices.size(), [&](std::uint64_t local) {
    return f(local) + size - static_cast<std::int64_t>(__builtin_popcountll(local));
  });
  return {value, f.to_set(mask)};
}

std::vector<HedgeSet> enumerate_quotients(const Hedgegraph& graph, const OracleLimits& limits) {
  require_vertices(graph, limits, "enumerate_quotients");
  std::set<HedgeSet> found;
  const std::size_t m = graph.hedge_count();
  for_each_partition(graph.vertex_count(), [&](std::span<const std::uint32_t> labels, std::size_t) {
    HedgeSet boundary(m);
    for (std::size_t e = 0; e < m; ++e)
      if (hedge_crosses(graph.hedges()[e], labels)) boundary.insert(static_cast<HedgeIndex>(e));
    found.insert(std::move(boundary));
    return true;
  });
  return {found.begin(), found.end()};
}

std::vector<HedgeSet> quotients_by_span(const Hedgegraph& graph, const OracleLimits& limits) {
  const std::size_t m = graph.hedge_count();
  require_hedges(m, limits, "quotients_by_span");
  std::set<HedgeSet> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    found.insert(span(graph, HedgeSet::from_mask(m, mask)).complement());
  return {found.begin(), found.end()};
}

std::pair<std::int64_t, std::uint64_t> exhaustive_minimum(std::size_t ground_size,
                                                          const std::function<std::int64_t(std::uint64_t)>& fn) {
  if (ground_size > 62) throw OracleLimitError("exhaustive sweep over more than 62 elements");
  std::int64_t best = fn(0);
  std::uint64_t best_mask = 0;
  const std::uint64_t end = std::uint64_t{1} << ground_size;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    std::int64_t value = fn(mask);
    if (value < best) {
      best = value;
      best_mask = mask;
    }
  }
  return {best, best_mask};
}

}  // namespace hedge
