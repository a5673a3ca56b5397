// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "hedgegraph/matroid.hpp"
#include "hedgegraph/measures.hpp"
#include "hedgegraph/oracle.hpp"
#include "hedgegraph/polymatroid.hpp"
#include "hedgegraph/sfm.hpp"
#include "hedgegraph/stochastic.hpp"
#include "support.hpp"

using namespace hedge;
using namespace hedge::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::vector<Hedgegraph> random_corpus(std::size_t count, std::uint64_t seed, const RandomShape& shape = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Hedgegraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hedgegraph(rng, shape));
  return out;
}

const std::vector<Hedgegraph>& corpus() {
  static const std::vector<Hedgegraph> graphs = random_corpus(300, 20240601);
  return graphs;
}

std::int64_t boundary_size(const Hedgegraph& g, const Partition& p) {
  return static_cast<std::int64_t>(partition_boundary(g, p).size());
}

std::int64_t floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
  return q;
}

void crossing_cuts(Outcome& o) {
  Hedgegraph g = load("crossing.hg");
  const auto ab = cut_size(g, vertices(g, {"A", "B"}));
  const auto ac = cut_size(g, vertices(g, {"A", "C"}));
  const auto a = cut_size(g, vertices(g, {"A"}));
  const auto abc = cut_size(g, vertices(g, {"A", "B", "C"}));
  o.expect(ab == 1 && ac == 1, "d({A,B}) = d({A,C}) = 1");
  o.expect(a == 2 && abc == 2, "d({A}) = d({A,B,C}) = 2");
  o.expect(ab + ac < a + abc, "submodularity fails on the quadruple");
  o.detail << "d(AB)+d(AC)=" << ab + ac << " < d(A)+d(ABC)=" << a + abc;
}

void trio(Outcome& o) {
  for (std::size_t n = 3; n <= 8; ++n) {
    Hedgegraph g = g1(n);
    o.expect(exact_pc(g).value == 0 && exact_wpc(g).value == 1 && exact_connectivity(g).value == 1,
             "G1 n=" + std::to_string(n));
    o.expect(partition_connectivity(g).value() == 0, "G1 newton n=" + std::to_string(n));
  }
  for (std::size_t n = 4; n <= 8; ++n) {
    Hedgegraph g = g2(n);
    const auto m = static_cast<std::int64_t>(n - 1);
    o.expect(exact_pc(g).value == 1 && exact_wpc(g).value == m && exact_connectivity(g).value == m,
             "G2 n=" + std::to_string(n));
    o.expect(partition_connectivity(g).value() == 1, "G2 newton n=" + std::to_string(n));
  }
  Hedgegraph c3 = load("c3.hg");
  o.expect(exact_pc(c3).value == 1 && exact_wpc(c3).value == 1 && exact_connectivity(c3).value == 2, "C3");
  o.detail << "G1 n=3..8, G2 n=4..8, C3";
}

void separation(Outcome& o) {
  Hedgegraph g = load("separation.hg");
  const auto wpc = exact_wpc(g).value;
  const auto kstar = exact_kstar(g).value.value();
  o.expect(wpc == 2, "WPC = 2");
  o.expect(kstar == 3, "k* = 3");
  o.expect(wpc < kstar, "WPC < k*");
  o.detail << "WPC=" << wpc << " k*=" << kstar;
}

void pc_agreement(Outcome& o) {
  std::size_t connected = 0;
  for (const auto& g : corpus()) {
    const auto oracle = exact_pc(g).value;
    const auto packing = static_cast<std::int64_t>(max_packing_number(g));
    std::int64_t newton = 0;
    if (is_connected(g)) {
      ++connected;
      newton = floor_of(min_ratio(polymatroid_oracle(g), unit_weights(g)).value.value());
    } else {
      newton = partition_connectivity(g).value();
    }
    o.expect(oracle == packing && oracle == newton, "instance with oracle PC " + std::to_string(oracle));
  }
  o.detail << corpus().size() << " instances (" << connected << " connected)";
}

void constructive(Outcome& o) {
  std::size_t packed = 0;
  for (const auto& g : corpus()) {
    const auto pc = exact_pc(g).value;
    if (pc >= 1) {
      PackingResult p = pack_bases(g, static_cast<std::size_t>(pc));
      bool ok = p.success && p.bases.size() == static_cast<std::size_t>(pc);
      HedgeSet seen = g.no_hedges();
      for (std::size_t i = 0; ok && i < p.bases.size(); ++i) {
        ok = is_spanning_tree_trimming(g, p.trimmings[i]) && trimmed_hedges(g, p.trimmings[i]) == p.bases[i] &&
             (seen & p.bases[i]).empty();
        seen |= p.bases[i];
      }
      o.expect(ok, "pack_bases(G, PC) yields disjoint spanning trimmings");
      ++packed;
    }
    const auto k = pc + 1;
    PackingResult over = pack_bases(g, static_cast<std::size_t>(k));
    o.expect(!over.success && over.certificate &&
                 boundary_size(g, *over.certificate) < k * static_cast<std::int64_t>(over.certificate->block_count() - 1),
             "pack_bases(G, PC+1) returns a violating partition");

    // Smallest k with |E[P]| <= k (|V| - |P|) over all partitions.
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    std::int64_t needed = 1;
    bool feasible = true;
    for_each_partition(g.vertex_count(), [&](std::span<const std::uint32_t> labels, std::size_t blocks) {
      const auto inside =
          static_cast<std::int64_t>(internal_hedges(g, Partition::from_labels(labels)).size());
      const auto room = n - static_cast<std::int64_t>(blocks);
      if (room == 0) {
        feasible = feasible && inside == 0;
      } else {
        needed = std::max(needed, (inside + room - 1) / room);
      }
      return true;
    });
    o.expect(feasible, "every hedge has a vertex pair");
    o.expect(static_cast<std::int64_t>(min_cover_number(g).k) == needed, "min_cover_number matches partitions");
  }
  o.detail << packed << " packings at PC, " << corpus().size() << " infeasibility and cover checks";
}

void orientations(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& g : corpus()) {
    const auto pc = exact_pc(g).value;
    for (std::int64_t k = 1; k <= pc; ++k) {
      for (VertexId root = 0; root < g.vertex_count(); ++root) {
        OrientResult r = orient(g, static_cast<std::size_t>(k), root);
        o.expect(r.success && verify_orientation(g, r.orientation, k).valid, "orient passes verify");
        ++checked;
      }
    }
  }
  Hedgegraph g = load("orientation.hg");
  const VertexId a = g.find_vertex("A").value();
  const VertexId b = g.find_vertex("B").value();
  Orientation drawn{a, {{0, a}, {0, a}, {0, b}}};
  o.expect(verify_orientation(g, drawn, 1).valid, "drawn orientation is 1-out");
  OrientationCheck two = verify_orientation(g, drawn, 2);
  const bool expected_set =
      two.violating == vertices(g, {"A", "B", "D"}) || two.violating == vertices(g, {"A", "C", "D"});
  o.expect(!two.valid && expected_set && two.out_degree == 1, "drawn orientation fails at k=2 on {A,B,D} or {A,C,D}");
  o.detail << checked << " (instance, k, root) orientations verified; k=2 violation at {";
  for (std::size_t i = 0; i < two.violating.size(); ++i) o.detail << (i ? "," : "") << g.vertex_name(two.violating[i]);
  o.detail << "}";
}

void sandwich(Outcome& o) {
  std::size_t connected = 0;
  for (const auto& g : corpus()) {
    const auto lambda = exact_connectivity(g).value;
    const auto wpc = exact_wpc(g).value;
    const auto pc = exact_pc(g).value;
    o.expect(lambda / 2 <= wpc && wpc <= lambda, "floor(lambda/2) <= WPC <= lambda");
    o.expect(pc <= wpc, "PC <= WPC");
    if (lambda > 0) {
      ++connected;
      const auto kstar = exact_kstar(g).value.value();
      o.expect(wpc <= kstar && kstar <= lambda, "WPC <= k* <= lambda");
    }
    MeasureReport band = approx_connectivity(g);
    o.expect(band.lo <= lambda && lambda <= band.hi, "approx band contains lambda");
  }
  o.detail << corpus().size() << " instances, k* chain on " << connected << " connected";
}

void sfm_engine(Outcome& o) {
  std::mt19937_64 rng(5150);
  std::size_t largest = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Hedgegraph g = random_hedgegraph(rng, {3, 9, 4, 14, 4, 3});
    largest = std::max(largest, g.hedge_count());
    auto f = std::make_shared<Polymatroid>(g);
    const auto full = f->full_value();
    std::uniform_int_distribution<std::int64_t> coefficient(0, 4);
    const std::int64_t c = coefficient(rng);
    std::vector<std::int64_t> w(g.hedge_count());
    for (auto& x : w) x = coefficient(rng) - 1;
    SubmodularOracle oracle;
    oracle.ground_size = g.hedge_count();
    switch (trial % 3) {
      case 0:  // c f(S) - w(S)
        oracle.evaluate = [f, c, w](const HedgeSet& s) {
          std::int64_t sum = 0;
          s.for_each([&](HedgeIndex e) { sum += w[e]; });
          return c * (*f)(s) - sum;
        };
        break;
      case 1:  // c |S| - (f(E) - f(E \ S))
        oracle.evaluate = [f, c, full](const HedgeSet& s) {
          return c * static_cast<std::int64_t>(s.size()) - (full - (*f)(s.complement()));
        };
        break;
      default:  // f(S) - |S| plus a modular perturbation
        oracle.evaluate = [f, w](const HedgeSet& s) {
          std::int64_t sum = 0;
          s.for_each([&](HedgeIndex e) { sum += w[e]; });
          return 2 * (*f)(s) - static_cast<std::int64_t>(s.size()) - sum;
        };
    }
    SfmOptions options;
    options.allow_fallback = false;
    SfmResult wolfe = minimize_submodular(oracle, options);
    SfmResult sweep = minimize_exhaustive(oracle);
    o.expect(wolfe.method == "min_norm_point", "min-norm point path used");
    o.expect(wolfe.value == sweep.value && oracle.evaluate(wolfe.minimizer) == wolfe.value,
             "min-norm point value equals the sweep");
  }
  o.detail << "200 objectives, ground size up to " << largest;
}

void sampling(Outcome& o) {
  // Four hedges {i,i+1} + {i+4,i+5} on an 8-cycle, each repeated 150 times.
  std::vector<std::vector<std::vector<VertexId>>> hedges;
  for (int copy = 0; copy < 150; ++copy)
    for (VertexId i = 0; i < 4; ++i)
      hedges.push_back({{i, static_cast<VertexId>(i + 1)}, {static_cast<VertexId>(i + 4), static_cast<VertexId>((i + 5) % 8)}});
  Hedgegraph g = Hedgegraph::from_hyperedges(8, hedges);
  OracleLimits wide{8, 1000};
  ExperimentOptions options;
  options.trials = 2000;
  options.seed = 1;
  ExperimentReport r = connectivity_sampling_experiment(g, options, wide);
  const double sigma = std::sqrt(0.25 / 2000.0);
  o.expect(r.strength >= 150, "lambda >= 150");
  o.expect(r.probability < 1.0, "p < 1");
  o.expect(r.frequency >= 1.0 - 2.0 / 8.0 - 3.0 * sigma, "connectivity frequency");
  o.detail << "lambda=" << r.strength << " p=" << r.probability << " freq=" << r.frequency << " (need "
           << 1.0 - 2.0 / 8.0 - 3.0 * sigma << ")";

  // Triangle with six copies of each edge.
  std::vector<std::vector<std::vector<VertexId>>> triangle;
  for (int copy = 0; copy < 6; ++copy)
    for (VertexId i = 0; i < 3; ++i) triangle.push_back({{i, static_cast<VertexId>((i + 1) % 3)}});
  Hedgegraph t = Hedgegraph::from_hyperedges(3, triangle);
  ExperimentReport b = base_sampling_experiment(t, options);
  const double bound = 1.0 - 1.0 / static_cast<double>(b.f_full) - 3.0 * sigma;
  o.expect(b.probability < 1.0, "base p < 1");
  o.expect(b.frequency >= bound, "base frequency");
  o.detail << "; base k*=" << b.strength << " p=" << b.probability << " freq=" << b.frequency << " (need " << bound
           << ")";
}

struct WeightedInstance {
  std::string name;
  Hedgegraph graph;
  std::vector<Rational> weights;
};

std::vector<WeightedInstance> sparsifier_instances() {
  std::vector<WeightedInstance> out;
  for (const char* file : {"colored.hg", "trimming.hg", "orientation.hg", "separation.hg", "c3.hg"}) {
    Hedgegraph g = load(file);
    out.push_back({file, g, g.weights()});
  }
  // Light hedges inside a heavy K4 get p < 1 even at the default constant.
  Hedgegraph k4 = parse_hedgegraph(
      "vertices a b c d\n"
      "hedge ab weight 400 : a b\nhedge bc weight 400 : b c\nhedge cd weight 400 : c d\n"
      "hedge da weight 400 : d a\nhedge ac weight 400 : a c\nhedge bd weight 400 : b d\n"
      "hedge l1 weight 1 : a b ; c d\nhedge l2 weight 2 : a c\nhedge l3 weight 1 : b c d\n"
      "hedge l4 weight 1.5 : a d\nhedge l5 weight 1 : a b c d\n");
  out.push_back({"heavy-k4", k4, k4.weights()});
  std::mt19937_64 rng(90);
  for (int i = 0; i < 3; ++i) {
    Hedgegraph g = random_hedgegraph(rng, {5, 7, 6, 10, 4, 3});
    if (!is_connected(g)) {
      --i;
      continue;
    }
    std::vector<Rational> w(g.hedge_count());
    for (auto& x : w) x = Rational(std::uniform_int_distribution<std::int64_t>(1, 40)(rng), 4);
    out.push_back({"random-" + std::to_string(i), g, w});
  }
  return out;
}

// Mean of d_{w'}(P) over `seeds` runs within 3 sigma of d_w(P) for every P.
bool unbiased(const WeightedInstance& inst, double c0, int seeds, bool& sampled) {
  const auto& g = inst.graph;
  std::vector<std::vector<double>> runs;
  for (int s = 0; s < seeds; ++s)
    runs.push_back(sparsify_partitions(g, inst.weights, 0.5, static_cast<std::uint64_t>(s), c0).weights);
  SparsifierResult ref = sparsify_partitions(g, inst.weights, 0.5, 0, c0);
  for (double p : ref.probability) sampled = sampled || (p > 0.0 && p < 1.0);
  bool ok = true;
  for_each_partition(g.vertex_count(), [&](std::span<const std::uint32_t> labels, std::size_t blocks) {
    if (blocks < 2) return true;
    HedgeSet d = partition_boundary(g, Partition::from_labels(labels));
    double expected = 0.0;
    double variance = 0.0;
    double mean = 0.0;
    d.for_each([&](HedgeIndex e) {
      const double w = to_double(inst.weights[e]);
      const double p = ref.probability[e];
      expected += w;
      if (p > 0.0) variance += w * w * (1.0 - p) / p;
      for (const auto& run : runs) mean += run[e];
    });
    mean /= seeds;
    ok = ok && std::abs(mean - expected) <= 3.0 * std::sqrt(variance / seeds) + 1e-9 * std::max(1.0, expected);
    return ok;
  });
  return ok;
}

void sparsifier(Outcome& o) {
  const double epsilon = 0.5;
  bool sampled_default = false;
  bool sampled_small = false;
  for (const auto& inst : sparsifier_instances()) {
    const auto& g = inst.graph;
    int passes = 0;
    const int seeds = 50;
    const std::size_t bound = sparsifier_support_bound(g.vertex_count(), epsilon);
    for (int s = 0; s < seeds; ++s) {
      SparsifierResult r = sparsify_partitions(g, inst.weights, epsilon, static_cast<std::uint64_t>(s));
      o.expect(r.support <= bound, inst.name + " support bound");
      passes += verify_sparsifier(g, inst.weights, r.weights, epsilon).ok ? 1 : 0;
    }
    o.expect(passes * 10 >= seeds * 9, inst.name + " verify pass rate");
    o.expect(unbiased(inst, kDefaultSparsifierConstant, 200, sampled_default), inst.name + " unbiased at c0=50");
    // A small constant makes every instance sample; unbiasedness must still hold.
    o.expect(unbiased(inst, 0.05, 200, sampled_small), inst.name + " unbiased at c0=0.05");
    o.detail << inst.name << ":" << passes << "/" << seeds << " ";
  }
  o.expect(sampled_default, "some hedge has p < 1 at the default constant");
  o.detail << "(unbiasedness over 200 seeds at c0=50 and c0=0.05)";
}

void quotient_family(Outcome& o) {
  std::vector<Hedgegraph> graphs = corpus();
  for (const auto& g : random_corpus(100, 77, {2, 7, 9, 10, 4, 3})) graphs.push_back(g);
  for (const char* file : {"colored.hg", "crossing.hg", "trimming.hg", "orientation.hg", "separation.hg", "c3.hg"})
    graphs.push_back(load(file));
  std::size_t checked = 0;
  for (const auto& g : graphs) {
    if (g.hedge_count() > 10) continue;
    Polymatroid f(g);
    const std::size_t m = g.hedge_count();
    std::set<HedgeSet> by_definition;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      HedgeSet s = HedgeSet::from_mask(m, mask);
      const auto base = f(s);
      HedgeSet closure = g.no_hedges();
      for (HedgeIndex e = 0; e < m; ++e) {
        HedgeSet grown = s;
        grown.insert(e);
        if (f(grown) == base) closure.insert(e);
      }
      by_definition.insert(closure.complement());
    }
    auto enumerated = enumerate_quotients(g);
    o.expect(std::set<HedgeSet>(enumerated.begin(), enumerated.end()) == by_definition, "quotient families equal");
    ++checked;
  }
  o.detail << checked << " instances with m <= 10";
}

// Independence by definition: some choice of one pair per hedge forms a forest.
bool forest_trimmable(const Hedgegraph& g, const std::vector<HedgeIndex>& hedges, std::size_t i,
                      std::vector<std::uint32_t>& parent) {
  if (i == hedges.size()) return true;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& h : g.hedge(hedges[i]).hyperedges) {
    for (std::size_t a = 0; a < h.vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < h.vertices.size(); ++b) {
        const auto ra = find(h.vertices[a]);
        const auto rb = find(h.vertices[b]);
        if (ra == rb) continue;
        parent[ra] = rb;
        if (forest_trimmable(g, hedges, i + 1, parent)) {
          parent[ra] = ra;
          return true;
        }
        parent[ra] = ra;
      }
    }
  }
  return false;
}

void matroid_axioms(Outcome& o) {
  auto family = random_corpus(150, 12, {2, 5, 1, 6, 4, 3});
  std::size_t pairs = 0;
  for (const auto& g : family) {
    const std::size_t m = g.hedge_count();
    const std::size_t subsets = std::size_t{1} << m;
    std::vector<bool> independent(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      HedgeSet s = HedgeSet::from_mask(m, mask);
      independent[mask] = is_independent(g, s).independent;
      std::vector<std::uint32_t> parent(g.vertex_count());
      std::iota(parent.begin(), parent.end(), 0U);
      o.expect(independent[mask] == forest_trimmable(g, s.indices(), 0, parent), "independence matches definition");
    }
    o.expect(independent[0], "empty set independent");
    for (std::uint64_t a = 0; a < subsets; ++a) {
      if (!independent[a]) continue;
      for (std::size_t e = 0; e < m; ++e)
        if (a >> e & 1) o.expect(independent[a & ~(std::uint64_t{1} << e)], "hereditary");
      for (std::uint64_t b = 0; b < subsets; ++b) {
        if (!independent[b] || __builtin_popcountll(a) >= __builtin_popcountll(b)) continue;
        ++pairs;
        bool augments = false;
        for (std::size_t e = 0; e < m && !augments; ++e)
          augments = (b >> e & 1) && !(a >> e & 1) && independent[a | (std::uint64_t{1} << e)];
        o.expect(augments, "augmentation");
      }
    }
  }
  o.detail << family.size() << " hedgegraphs, " << pairs << " augmentation pairs";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"crossing fixture cut values and failed submodularity", crossing_cuts},
      {"PC/WPC/lambda on G1, G2 and C3", trio},
      {"WPC < k* separation fixture", separation},
      {"PC three-way agreement", pc_agreement},
      {"packing, infeasibility certificates and covers", constructive},
      {"orientations", orientations},
      {"sandwich inequalities and approximation band", sandwich},
      {"min-norm point vs exhaustive sweep", sfm_engine},
      {"hedge and base sampling experiments", sampling},
      {"partition sparsifier", sparsifier},
      {"quotients equal partition boundaries", quotient_family},
      {"matroid axioms", matroid_axioms},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    std::printf("%s criterion %zu: %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.str().c_str(), took.count());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
