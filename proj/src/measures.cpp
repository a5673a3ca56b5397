#include "hedgegraph/measures.hpp"

#include <cmath>
#include <deque>

#include "hedgegraph/matroid.hpp"
#include "hedgegraph/polymatroid.hpp"

namespace hedge {

std::int64_t MeasureReport::value() const {
  if (!exact()) throw std::logic_error("measure is a band [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return lo;
}

namespace {

void require_two_vertices(const Hedgegraph& graph, const char* what) {
  if (graph.vertex_count() < 2) throw InvalidArgument(std::string(what) + " needs at least two vertices");
}

MeasureReport exact_report(std::string method, std::int64_t value) {
  MeasureReport r;
  r.method = std::move(method);
  r.lo = r.hi = value;
  return r;
}

// Repeatedly grows a spanning hedge set greedily from the unused hedges.
std::int64_t greedy_disjoint_bases(const Hedgegraph& graph) {
  Polymatroid f(graph);
  const std::int64_t target = f.full_value();
  HedgeSet remaining = graph.all_hedges();
  std::int64_t bases = 0;
  while (true) {
    HedgeSet grown = graph.no_hedges();
    std::int64_t value = 0;
    for (HedgeIndex e : remaining.indices()) {
      grown.insert(e);
      std::int64_t next = f(grown);
      if (next > value)
        value = next;
      else
        grown.erase(e);
      if (value == target) break;
    }
    if (value < target) return bases;
    ++bases;
    remaining -= grown;
  }
}

}  // namespace

std::size_t max_packing_number(const Hedgegraph& graph) {
  require_two_vertices(graph, "max_packing_number");
  std::size_t k = 0;
  while (pack_bases(graph, k + 1).success) ++k;
  return k;
}

MeasureReport partition_connectivity(const Hedgegraph& graph, const SfmOptions& options) {
  require_two_vertices(graph, "partition_connectivity");
  Partition parts = components(graph, graph.all_hedges());
  if (parts.block_count() > 1) {
    MeasureReport r = exact_report("components", 0);
    r.witness_partition = std::move(parts);
    r.methods_agree = !pack_bases(graph, 1).success;
    return r;
  }

  std::vector<Rational> unit(graph.hedge_count(), Rational(1));
  RatioResult kappa = min_ratio(polymatroid_oracle(graph), unit, options);
  const Rational& value = kappa.value.value();
  const std::int64_t pc = value.numerator() / value.denominator();
  MeasureReport r = exact_report("newton", pc);
  r.ratio = value;
  r.witness_hedges = kappa.argmin;
  r.witness_partition = components(graph, kappa.argmin);
  r.methods_agree = max_packing_number(graph) == static_cast<std::size_t>(pc);
  return r;
}

MeasureReport weak_partition_connectivity(const Hedgegraph& graph, const OracleLimits& limits) {
  require_two_vertices(graph, "weak_partition_connectivity");
  PartitionWitness w = exact_wpc(graph, limits);
  MeasureReport r = exact_report("exhaustive", w.value);
  r.witness_partition = std::move(w.partition);
  r.notes.push_back("no polynomial-time method is known; computed by partition enumeration");
  return r;
}

MeasureReport kstar_approx(const Hedgegraph& graph, const OracleLimits& limits) {
  if (!is_connected(graph)) throw InvalidArgument("kstar_approx needs a connected hedgegraph");
  const std::int64_t bases = greedy_disjoint_bases(graph);
  const auto f_full = static_cast<double>(graph.vertex_count() - 1);
  const auto factor = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(kKStarConstant * std::log(f_full))));
  MeasureReport r;
  r.method = "greedy_bases";
  r.lo = bases;
  r.hi = bases * factor;
  if (graph.hedge_count() <= limits.max_hedges && graph.hedge_count() <= 24) {
    KStarResult exact = exact_kstar(graph, limits);
    if (exact.value.is_finite()) {
      r.exact_value = exact.value.value();
      r.witness_hedges = exact.argmin;
    }
  }
  return r;
}

MeasureReport approx_connectivity(const Hedgegraph& graph, const OracleLimits& limits) {
  require_two_vertices(graph, "approx_connectivity");
  if (!is_connected(graph)) {
    MeasureReport r = exact_report("disconnected", 0);
    r.witness_partition = components(graph, graph.all_hedges());
    return r;
  }
  MeasureReport k = kstar_approx(graph, limits);
  MeasureReport r;
  r.method = "kstar_sandwich";
  r.lo = k.lo;
  r.hi = 2 * k.hi + 1;
  r.exact_value = k.exact_value;
  return r;
}

OrientResult orient(const Hedgegraph& graph, std::size_t k, VertexId root) {
  if (root >= graph.vertex_count()) throw InvalidArgument("root vertex " + std::to_string(root) + " does not exist");
  require_two_vertices(graph, "orient");
  PackingResult packing = pack_bases(graph, k);
  OrientResult out;
  out.orientation.root = root;
  if (!packing.success) {
    out.certificate = std::move(packing.certificate);
    return out;
  }

  const std::size_t n = graph.vertex_count();
  out.orientation.choices.resize(graph.hedge_count());
  std::vector<bool> assigned(graph.hedge_count(), false);
  for (const auto& tree : packing.trimmings) {
    std::vector<std::vector<std::size_t>> adjacency(n);
    for (std::size_t i = 0; i < tree.size(); ++i) {
      adjacency[tree[i].u].push_back(i);
      adjacency[tree[i].v].push_back(i);
    }
    std::vector<bool> seen(n, false);
    std::deque<VertexId> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      VertexId parent = queue.front();
      queue.pop_front();
      for (std::size_t i : adjacency[parent]) {
        VertexId child = tree[i].u == parent ? tree[i].v : tree[i].u;
        if (seen[child]) continue;
        seen[child] = true;
        queue.push_back(child);
        out.orientation.choices[tree[i].hedge] = {tree[i].hyperedge, parent};
        assigned[tree[i].hedge] = true;
      }
    }
  }
  for (HedgeIndex e = 0; e < graph.hedge_count(); ++e)
    if (!assigned[e]) out.orientation.choices[e] = {0, graph.hedge(e).hyperedges.front().vertices.front()};
  out.success = true;
  return out;
}

OrientationCheck verify_orientation(const Hedgegraph& graph, const Orientation& orientation, std::int64_t k,
                                    const OracleLimits& limits) {
  const std::size_t n = graph.vertex_count();
  if (orientation.root >= n) throw InvalidArgument("orientation root does not exist");
  if (orientation.choices.size() != graph.hedge_count())
    throw InvalidArgument("orientation must choose exactly one hyperedge per hedge");
  if (n > limits.max_vertices || n > 63)
    throw OracleLimitError("verify_orientation: " + std::to_string(n) + " vertices exceeds the oracle limit");

  std::vector<std::uint64_t> arc_mask;
  std::vector<std::uint64_t> head_bit;
  for (HedgeIndex e = 0; e < graph.hedge_count(); ++e) {
    const auto& choice = orientation.choices[e];
    const auto& hyperedges = graph.hedge(e).hyperedges;
    if (choice.hyperedge >= hyperedges.size() || !hyperedges[choice.hyperedge].contains(choice.head))
      throw InvalidArgument("orientation of hedge '" + graph.hedge(e).id + "' is not inside the hedge");
    std::uint64_t bits = 0;
    for (VertexId v : hyperedges[choice.hyperedge].vertices) bits |= std::uint64_t{1} << v;
    arc_mask.push_back(bits);
    head_bit.push_back(std::uint64_t{1} << choice.head);
  }

  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v)
    if (v != orientation.root) others.push_back(v);

  OrientationCheck out;
  const std::uint64_t total = std::uint64_t{1} << others.size();
  for (std::uint64_t s = 0; s + 1 < total; ++s) {
    std::uint64_t u = std::uint64_t{1} << orientation.root;
    for (std::size_t i = 0; i < others.size(); ++i)
      if ((s >> i) & 1U) u |= std::uint64_t{1} << others[i];
    std::int64_t degree = 0;
    for (std::size_t e = 0; e < arc_mask.size(); ++e)
      if ((head_bit[e] & u) != 0 && (arc_mask[e] & ~u) != 0) ++degree;
    if (degree < k) {
      out.valid = false;
      out.out_degree = degree;
      for (VertexId v = 0; v < n; ++v)
        if ((u >> v) & 1U) out.violating.push_back(v);
      return out;
    }
  }
  return out;
}

}  // namespace hedge
