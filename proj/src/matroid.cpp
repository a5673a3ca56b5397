#include "hedgegraph/matroid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "hedgegraph/disjoint_sets.hpp"
#include "hedgegraph/polymatroid.hpp"

namespace hedge {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Pairs (center, other) with center the smallest vertex of the hyperedge.
// A star spans its hyperedge, so these suffice for rank computations.
std::vector<TrimElement> star_trims(const Hedgegraph& graph, const HedgeSet& hedges) {
  std::vector<TrimElement> out;
  hedges.for_each([&](HedgeIndex e) {
    const auto& hyperedges = graph.hedges()[e].hyperedges;
    for (std::uint32_t j = 0; j < hyperedges.size(); ++j) {
      const auto& vs = hyperedges[j].vertices;
      for (std::size_t i = 1; i < vs.size(); ++i) out.push_back({e, j, vs[0], vs[i]});
    }
  });
  return out;
}

// Maximum common independent set of the graphic matroid on V and the
// partition matroid "one trim per hedge", over the star trims of A.
class TrimIntersection {
 public:
  TrimIntersection(const Hedgegraph& graph, const HedgeSet& hedges)
      : graph_(graph),
        n_(graph.vertex_count()),
        trims_(star_trims(graph, hedges)),
        chosen_(trims_.size(), false),
        owner_(graph.hedge_count(), kNone) {
    DisjointSets forest(n_);
    for (std::size_t t = 0; t < trims_.size(); ++t) {
      if (owner_[trims_[t].hedge] == kNone && forest.unite(trims_[t].u, trims_[t].v)) take(t);
    }
    while (augment()) {
    }
  }

  MatroidRank result(const HedgeSet& hedges) const {
    MatroidRank out;
    out.independent = graph_.no_hedges();
    for (std::size_t t = 0; t < trims_.size(); ++t) {
      if (!chosen_[t]) continue;
      out.witness.push_back(trims_[t]);
      out.independent.insert(trims_[t].hedge);
    }
    std::sort(out.witness.begin(), out.witness.end(),
              [](const TrimElement& a, const TrimElement& b) { return a.hedge < b.hedge; });
    out.rank = static_cast<std::int64_t>(out.witness.size());
    out.tight = hedges;
    for (std::size_t t = 0; t < trims_.size(); ++t)
      if (reachable_[t]) out.tight.erase(trims_[t].hedge);
    return out;
  }

 private:
  void take(std::size_t t) {
    chosen_[t] = true;
    owner_[trims_[t].hedge] = t;
  }

  void rebuild_forest() {
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adjacency(n_);
    for (std::size_t t = 0; t < trims_.size(); ++t) {
      if (!chosen_[t]) continue;
      adjacency[trims_[t].u].emplace_back(trims_[t].v, t);
      adjacency[trims_[t].v].emplace_back(trims_[t].u, t);
    }
    component_.assign(n_, kNone);
    enter_.assign(n_, 0);
    leave_.assign(n_, 0);
    lower_end_.assign(trims_.size(), 0);
    std::size_t clock = 0;
    struct Frame {
      VertexId vertex;
      std::size_t via;
      std::size_t next;
    };
    for (VertexId root = 0; root < n_; ++root) {
      if (component_[root] != kNone) continue;
      std::vector<Frame> stack{{root, kNone, 0}};
      component_[root] = root;
      enter_[root] = clock++;
      while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next < adjacency[top.vertex].size()) {
          auto [next, t] = adjacency[top.vertex][top.next++];
          if (t == top.via) continue;
          component_[next] = root;
          enter_[next] = clock++;
          lower_end_[t] = next;
          stack.push_back({next, t, 0});
        } else {
          leave_[top.vertex] = clock++;
          stack.pop_back();
        }
      }
    }
  }

  bool in_subtree(VertexId x, VertexId top) const { return enter_[top] <= enter_[x] && leave_[x] <= leave_[top]; }

  // Whether chosen trim `tree_trim` lies on the forest path between the ends of `y`.
  bool on_path(std::size_t tree_trim, std::size_t y) const {
    VertexId below = lower_end_[tree_trim];
    return in_subtree(trims_[y].u, below) != in_subtree(trims_[y].v, below);
  }

  bool augment() {
    rebuild_forest();
    const std::size_t count = trims_.size();
    std::vector<std::size_t> pred(count, kNone);
    reachable_.assign(count, false);
    std::deque<std::size_t> queue;
    for (std::size_t y = 0; y < count; ++y) {
      if (!chosen_[y] && component_[trims_[y].u] != component_[trims_[y].v]) {
        reachable_[y] = true;
        queue.push_back(y);
      }
    }
    while (!queue.empty()) {
      std::size_t z = queue.front();
      queue.pop_front();
      if (!chosen_[z]) {
        std::size_t x = owner_[trims_[z].hedge];
        if (x == kNone) {
          apply(z, pred);
          return true;
        }
        if (!reachable_[x]) {
          reachable_[x] = true;
          pred[x] = z;
          queue.push_back(x);
        }
      } else {
        for (std::size_t y = 0; y < count; ++y) {
          if (chosen_[y] || reachable_[y] || !on_path(z, y)) continue;
          reachable_[y] = true;
          pred[y] = z;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  void apply(std::size_t end, const std::vector<std::size_t>& pred) {
    std::vector<std::size_t> path;
    for (std::size_t t = end; t != kNone; t = pred[t]) path.push_back(t);
    std::vector<std::size_t> entering;
    for (std::size_t t : path) {
      if (chosen_[t]) {
        chosen_[t] = false;
        owner_[trims_[t].hedge] = kNone;
      } else {
        entering.push_back(t);
      }
    }
    for (std::size_t t : entering) take(t);
  }

  const Hedgegraph& graph_;
  std::size_t n_;
  std::vector<TrimElement> trims_;
  std::vector<bool> chosen_;
  std::vector<std::size_t> owner_;  // hedge -> chosen trim
  std::vector<bool> reachable_;
  std::vector<std::size_t> component_;
  std::vector<std::size_t> enter_;
  std::vector<std::size_t> leave_;
  std::vector<VertexId> lower_end_;  // chosen trim -> endpoint farther from its tree root
};

// Matroid partitioning over k classes of the hedgegraph matroid.
class MatroidUnion {
 public:
  MatroidUnion(const Hedgegraph& graph, std::size_t k)
      : graph_(graph), owner_(graph.hedge_count(), kNone), classes_(k, graph.no_hedges()) {}

  bool insert(HedgeIndex s) { return search({s}, true); }

  void insert_all() {
    for (HedgeIndex e = 0; e < graph_.hedge_count(); ++e) insert(e);
  }

  // Everything reachable from unassigned hedges; no class can absorb any of it.
  HedgeSet stuck_region() {
    std::vector<HedgeIndex> starts;
    for (HedgeIndex e = 0; e < graph_.hedge_count(); ++e)
      if (owner_[e] == kNone) starts.push_back(e);
    if (search(starts, false)) throw std::logic_error("matroid union left an insertable hedge unassigned");
    return region_;
  }

  const std::vector<HedgeSet>& classes() const { return classes_; }
  HedgeSet unassigned() const {
    HedgeSet out = graph_.no_hedges();
    for (HedgeIndex e = 0; e < graph_.hedge_count(); ++e)
      if (owner_[e] == kNone) out.insert(e);
    return out;
  }
  std::size_t assigned_count() const {
    return static_cast<std::size_t>(std::count_if(owner_.begin(), owner_.end(), [](std::size_t c) { return c != kNone; }));
  }

 private:
  bool independent(const HedgeSet& set) {
    auto it = cache_.find(set);
    if (it != cache_.end()) return it->second;
    bool verdict = rank(graph_, set) == static_cast<std::int64_t>(set.size());
    cache_.emplace(set, verdict);
    return verdict;
  }

  // Breadth-first search over the exchange graph. With `apply` set, the first
  // sink found is used to augment and true is returned.
  bool search(const std::vector<HedgeIndex>& starts, bool apply) {
    const std::size_t m = graph_.hedge_count();
    std::vector<std::size_t> pred(m, kNone);
    region_ = graph_.no_hedges();
    std::deque<HedgeIndex> queue;
    for (HedgeIndex s : starts) {
      region_.insert(s);
      queue.push_back(s);
    }
    while (!queue.empty()) {
      HedgeIndex a = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < classes_.size(); ++j) {
        if (owner_[a] == j) continue;
        HedgeSet grown = classes_[j];
        grown.insert(a);
        if (independent(grown)) {
          if (apply) shift(a, j, pred);
          return true;
        }
        for (HedgeIndex t : classes_[j].indices()) {
          if (region_.contains(t)) continue;
          HedgeSet swapped = grown;
          swapped.erase(t);
          if (!independent(swapped)) continue;
          region_.insert(t);
          pred[t] = a;
          queue.push_back(t);
        }
      }
    }
    return false;
  }

  void shift(HedgeIndex last, std::size_t target, const std::vector<std::size_t>& pred) {
    std::size_t current = last;
    while (true) {
      std::size_t previous_class = owner_[current];
      if (previous_class != kNone) classes_[previous_class].erase(static_cast<HedgeIndex>(current));
      classes_[target].insert(static_cast<HedgeIndex>(current));
      owner_[current] = target;
      if (pred[current] == kNone) break;
      target = previous_class;
      current = pred[current];
    }
  }

  const Hedgegraph& graph_;
  std::vector<std::size_t> owner_;
  std::vector<HedgeSet> classes_;
  HedgeSet region_;
  std::map<HedgeSet, bool> cache_;
};

Partition components_of_tight(const Hedgegraph& graph, const HedgeSet& region) {
  return components(graph, rank_with_witness(graph, region).tight);
}

}  // namespace

bool is_valid_trimming(const Hedgegraph& graph, const Trimming& trimming) {
  HedgeSet seen = graph.no_hedges();
  for (const auto& t : trimming) {
    if (t.hedge >= graph.hedge_count() || seen.contains(t.hedge)) return false;
    seen.insert(t.hedge);
    const auto& hyperedges = graph.hedges()[t.hedge].hyperedges;
    if (t.hyperedge >= hyperedges.size() || t.u == t.v) return false;
    const auto& h = hyperedges[t.hyperedge];
    if (!h.contains(t.u) || !h.contains(t.v)) return false;
  }
  return true;
}

bool is_forest_trimming(const Hedgegraph& graph, const Trimming& trimming) {
  if (!is_valid_trimming(graph, trimming)) return false;
  DisjointSets forest(graph.vertex_count());
  return std::all_of(trimming.begin(), trimming.end(), [&](const TrimElement& t) { return forest.unite(t.u, t.v); });
}

bool is_spanning_tree_trimming(const Hedgegraph& graph, const Trimming& trimming) {
  return trimming.size() + 1 == graph.vertex_count() && is_forest_trimming(graph, trimming);
}

HedgeSet trimmed_hedges(const Hedgegraph& graph, const Trimming& trimming) {
  HedgeSet out = graph.no_hedges();
  for (const auto& t : trimming) out.insert(t.hedge);
  return out;
}

MatroidRank rank_with_witness(const Hedgegraph& graph, const HedgeSet& hedges) {
  graph.check(hedges);
  return TrimIntersection(graph, hedges).result(hedges);
}

std::int64_t rank(const Hedgegraph& graph, const HedgeSet& hedges) { return rank_with_witness(graph, hedges).rank; }

IndependenceResult is_independent(const Hedgegraph& graph, const HedgeSet& hedges) {
  MatroidRank r = rank_with_witness(graph, hedges);
  IndependenceResult out;
  out.independent = r.rank == static_cast<std::int64_t>(hedges.size());
  if (out.independent) {
    out.witness = std::move(r.witness);
    out.certificate = graph.no_hedges();
  } else {
    out.certificate = std::move(r.tight);
  }
  return out;
}

SpanningTreeResult spanning_tree_trimming(const Hedgegraph& graph) {
  if (graph.vertex_count() < 2) throw InvalidArgument("spanning_tree_trimming needs at least two vertices");
  MatroidRank r = rank_with_witness(graph, graph.all_hedges());
  SpanningTreeResult out;
  if (r.rank + 1 == static_cast<std::int64_t>(graph.vertex_count())) {
    out.found = true;
    out.hedges = std::move(r.independent);
    out.trimming = std::move(r.witness);
  } else {
    out.hedges = graph.no_hedges();
    out.certificate = components(graph, r.tight);
  }
  return out;
}

PackingResult pack_bases(const Hedgegraph& graph, std::size_t k) {
  if (k < 1) throw InvalidArgument("pack_bases needs k >= 1");
  if (graph.vertex_count() < 2) throw InvalidArgument("pack_bases needs at least two vertices");
  const std::size_t tree_size = graph.vertex_count() - 1;
  MatroidUnion packing(graph, k);
  packing.insert_all();

  PackingResult out;
  out.leftover = packing.unassigned();
  bool all_full = std::all_of(packing.classes().begin(), packing.classes().end(),
                              [&](const HedgeSet& c) { return c.size() == tree_size; });
  if (all_full) {
    out.success = true;
    out.bases = packing.classes();
    for (const auto& base : out.bases) out.trimmings.push_back(rank_with_witness(graph, base).witness);
    return out;
  }
  // Union size |E \ R| + k r(R) < k (n - 1); the tight set of R yields the partition.
  Partition p = components_of_tight(graph, packing.stuck_region());
  const auto boundary = partition_boundary(graph, p).size();
  if (boundary >= k * (p.block_count() - 1)) throw std::logic_error("packing certificate does not violate the bound");
  out.certificate = std::move(p);
  return out;
}

CoverResult cover_acyclic_trimmable(const Hedgegraph& graph, std::size_t k) {
  if (k < 1) throw InvalidArgument("cover_acyclic_trimmable needs k >= 1");
  MatroidUnion cover(graph, k);
  cover.insert_all();

  CoverResult out;
  if (cover.assigned_count() == graph.hedge_count()) {
    out.success = true;
    for (const auto& c : cover.classes()) {
      if (c.empty()) continue;
      out.classes.push_back(c);
      out.trimmings.push_back(rank_with_witness(graph, c).witness);
    }
    return out;
  }
  Partition p = components_of_tight(graph, cover.stuck_region());
  const auto internal = internal_hedges(graph, p).size();
  if (internal <= k * (graph.vertex_count() - p.block_count()))
    throw std::logic_error("cover certificate does not violate the bound");
  out.certificate = std::move(p);
  return out;
}

CoverNumber min_cover_number(const Hedgegraph& graph) {
  for (HedgeIndex e = 0; e < graph.hedge_count(); ++e) {
    HedgeSet single = graph.no_hedges();
    single.insert(e);
    if (rank(graph, single) == 0)
      throw InvalidArgument("hedge '" + graph.hedge(e).id + "' has no vertex pair, so no cover exists");
  }
  CoverNumber out;
  std::size_t lo = 1;
  std::size_t hi = std::max<std::size_t>(1, graph.hedge_count());
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (cover_acyclic_trimmable(graph, mid).success)
      hi = mid;
    else
      lo = mid + 1;
  }
  out.k = lo;
  out.cover = cover_acyclic_trimmable(graph, lo);
  if (lo > 1) out.below_certificate = cover_acyclic_trimmable(graph, lo - 1).certificate;
  return out;
}

}  // namespace hedge
