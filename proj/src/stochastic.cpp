#include "hedgegraph/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "hedgegraph/polymatroid.hpp"

namespace hedge {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Trial t always draws from substream t, so the count does not depend on
// how trials are split across threads.
std::size_t count_successes(std::size_t trials, std::size_t threads, const std::function<bool(std::size_t)>& trial) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, trials));
  std::vector<std::size_t> counts(threads, 0);
  std::vector<std::thread> workers;
  const std::size_t chunk = (trials + threads - 1) / threads;
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(trials, begin + chunk);
      for (std::size_t t = begin; t < end; ++t)
        if (trial(t)) ++counts[w];
    });
  }
  for (auto& worker : workers) worker.join();
  std::size_t total = 0;
  for (std::size_t c : counts) total += c;
  return total;
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("sampling probability must lie in [0, 1]");
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream) : engine_(derive(seed, stream)) {}

std::uint64_t SeededRng::derive(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

HedgeSet sample_subhedgegraph(const Hedgegraph& graph, double p, SeededRng& rng) {
  check_probability(p);
  HedgeSet out = graph.no_hedges();
  for (HedgeIndex e = 0; e < graph.hedge_count(); ++e)
    if (rng.bernoulli(p)) out.insert(e);
  return out;
}

ExperimentReport connectivity_sampling_experiment(const Hedgegraph& graph, const ExperimentOptions& options,
                                                  const OracleLimits& limits) {
  if (options.trials < 1) throw InvalidArgument("at least one trial is required");
  if (!is_connected(graph) || graph.vertex_count() < 2)
    throw InvalidArgument("connectivity sampling needs a connected hedgegraph with at least two vertices");
  ExperimentReport r;
  r.n = graph.vertex_count();
  r.strength = exact_connectivity(graph, limits).value;
  r.f_full = static_cast<std::int64_t>(r.n - 1);
  r.probability = options.probability.value_or(
      std::min(1.0, 20.0 * std::log(static_cast<double>(r.n)) / static_cast<double>(r.strength)));
  check_probability(r.probability);
  r.target = 1.0 - 2.0 / static_cast<double>(r.n);
  r.trials = options.trials;
  r.successes = count_successes(options.trials, options.threads, [&](std::size_t t) {
    SeededRng rng(options.seed, t);
    return components(graph, sample_subhedgegraph(graph, r.probability, rng)).block_count() == 1;
  });
  r.frequency = static_cast<double>(r.successes) / static_cast<double>(r.trials);
  return r;
}

ExperimentReport base_sampling_experiment(const Hedgegraph& graph, const ExperimentOptions& options,
                                          const OracleLimits& limits) {
  if (options.trials < 1) throw InvalidArgument("at least one trial is required");
  KStarResult kstar = exact_kstar(graph, limits);
  if (kstar.value.is_infinite()) throw InvalidArgument("base sampling needs f(E) > 0");
  ExperimentReport r;
  r.n = graph.vertex_count();
  r.strength = kstar.value.value();
  r.f_full = polymatroid_f(graph, graph.all_hedges());
  r.probability = options.probability.value_or(
      std::min(1.0, 10.0 * std::log(static_cast<double>(r.f_full)) / static_cast<double>(r.strength)));
  check_probability(r.probability);
  r.target = 1.0 - 1.0 / static_cast<double>(r.f_full);
  r.trials = options.trials;
  r.successes = count_successes(options.trials, options.threads, [&](std::size_t t) {
    SeededRng rng(options.seed, t);
    return polymatroid_f(graph, sample_subhedgegraph(graph, r.probability, rng)) == r.f_full;
  });
  r.frequency = static_cast<double>(r.successes) / static_cast<double>(r.trials);
  return r;
}

StrengthDecomposition strength_decomposition(const Hedgegraph& graph, std::span<const Rational> weights,
                                             const SfmOptions& options) {
  const std::size_t m = graph.hedge_count();
  if (weights.size() != m) throw InvalidArgument("weight vector has the wrong length");
  StrengthDecomposition out;
  out.strength.assign(m, Extended<Rational>::infinity());

  Polymatroid f(graph);
  std::vector<HedgeIndex> active = graph.all_hedges().indices();
  while (!active.empty()) {
    auto to_global = [&](const HedgeSet& local) {
      HedgeSet g = graph.no_hedges();
      local.for_each([&](HedgeIndex i) { g.insert(active[i]); });
      return g;
    };
    SubmodularOracle restricted;
    restricted.ground_size = active.size();
    restricted.declared_bound = static_cast<std::int64_t>(graph.vertex_count());
    restricted.evaluate = [&](const HedgeSet& local) { return f(to_global(local)); };
    std::vector<Rational> local_weights;
    for (HedgeIndex e : active) local_weights.push_back(weights[e]);

    RatioResult kappa = min_ratio(restricted, local_weights, options);
    if (kappa.value.is_infinite()) break;  // the rest have f = 0
    out.levels.push_back(kappa.value.value());
    std::vector<HedgeIndex> kept;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (kappa.argmin.contains(static_cast<HedgeIndex>(i)))
        kept.push_back(active[i]);
      else
        out.strength[active[i]] = kappa.value.value();
    }
    active = std::move(kept);
  }
  return out;
}

SparsifierResult sparsify_partitions(const Hedgegraph& graph, std::span<const Rational> weights, double epsilon,
                                     std::uint64_t seed, double c0) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidArgument("epsilon must lie in (0, 1)");
  if (!(c0 > 0.0)) throw InvalidArgument("the sparsifier constant must be positive");
  if (!is_connected(graph)) throw InvalidArgument("sparsify needs a connected hedgegraph");
  for (const auto& w : weights)
    if (w < Rational(0)) throw InvalidArgument("weights must be nonnegative");

  StrengthDecomposition decomposition = strength_decomposition(graph, weights);
  SparsifierResult out;
  const std::size_t m = graph.hedge_count();
  out.rho = c0 * std::log(static_cast<double>(graph.vertex_count())) / (epsilon * epsilon);
  out.strength = decomposition.strength;
  out.probability.assign(m, 0.0);
  out.weights.assign(m, 0.0);
  for (HedgeIndex e = 0; e < m; ++e) {
    const double w = to_double(weights[e]);
    if (w == 0.0 || out.strength[e].is_infinite()) continue;
    const double s = to_double(out.strength[e].value());
    out.probability[e] = std::min(1.0, out.rho * w / s);
    SeededRng rng(seed, e);
    if (rng.bernoulli(out.probability[e])) {
      out.weights[e] = w / out.probability[e];
      ++out.support;
    }
  }
  return out;
}

std::size_t sparsifier_support_bound(std::size_t n, double epsilon, double c0) {
  const auto nd = static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(c0 * nd * std::log(nd) / (epsilon * epsilon)));
}

SparsifierCheck verify_sparsifier(const Hedgegraph& graph, std::span<const Rational> weights,
                                  std::span<const double> new_weights, double epsilon, const OracleLimits& limits) {
  const std::size_t m = graph.hedge_count();
  if (weights.size() != m || new_weights.size() != m) throw InvalidArgument("weight vector has the wrong length");
  if (graph.vertex_count() > limits.max_vertices)
    throw OracleLimitError("verify_sparsifier: " + std::to_string(graph.vertex_count()) +
                           " vertices exceeds the oracle limit of " + std::to_string(limits.max_vertices));
  std::vector<double> original(m);
  for (std::size_t e = 0; e < m; ++e) original[e] = to_double(weights[e]);

  SparsifierCheck out;
  std::vector<std::uint32_t> worst_labels;
  for_each_partition(graph.vertex_count(), [&](std::span<const std::uint32_t> labels, std::size_t) {
    double before = 0.0;
    double after = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      const auto& hyperedges = graph.hedges()[e].hyperedges;
      bool crosses = std::any_of(hyperedges.begin(), hyperedges.end(), [&](const Hyperedge& h) {
        return std::any_of(h.vertices.begin(), h.vertices.end(),
                           [&](VertexId v) { return labels[v] != labels[h.vertices.front()]; });
      });
      if (!crosses) continue;
      before += original[e];
      after += new_weights[e];
    }
    double error = 0.0;
    if (before == 0.0)
      error = after == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    else
      error = std::abs(after - before) / before;
    if (worst_labels.empty() || error > out.max_relative_error) {
      out.max_relative_error = error;
      worst_labels.assign(labels.begin(), labels.end());
    }
    return true;
  });
  out.ok = out.max_relative_error <= epsilon + 1e-12;
  out.worst = Partition::from_labels(worst_labels);
  return out;
}

std::size_t count_small_quotients(const Hedgegraph& graph, std::span<const Rational> weights, std::int64_t t,
                                  const OracleLimits& limits) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (weights.size() != graph.hedge_count()) throw InvalidArgument("weight vector has the wrong length");
  auto quotients = enumerate_quotients(graph, limits);
  RatioResult kappa = min_ratio(polymatroid_oracle(graph), weights);
  std::size_t count = 0;
  for (const auto& q : quotients) {
    Rational total(0);
    q.for_each([&](HedgeIndex e) { total += weights[e]; });
    if (kappa.value.is_infinite() || total <= kappa.value.value() * t) ++count;
  }
  return count;
}

}  // namespace hedge
