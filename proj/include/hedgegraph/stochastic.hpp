#ifndef HEDGEGRAPH_STOCHASTIC_HPP
#define HEDGEGRAPH_STOCHASTIC_HPP

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hedgegraph/hedgegraph.hpp"
#include "hedgegraph/oracle.hpp"
#include "hedgegraph/partition.hpp"
#include "hedgegraph/sfm.hpp"

namespace hedge {

/// mt19937_64 seeded from a SplitMix64 mix of (seed, stream). The same pair
/// always yields the same draws.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform double in [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Each hedge independently with probability p.
HedgeSet sample_subhedgegraph(const Hedgegraph& graph, double p, SeededRng& rng);

struct ExperimentOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t threads = 0;             // 0 = hardware concurrency
  std::optional<double> probability;  // overrides the default sampling rate
};

struct ExperimentReport {
  std::size_t trials = 0;
  std::size_t successes = 0;
  double frequency = 0.0;
  double probability = 0.0;
  std::size_t n = 0;
  std::int64_t strength = 0;  // lambda for hedge sampling, k* for base sampling
  std::int64_t f_full = 0;
  double target = 0.0;        // 1 - 2/n or 1 - 1/f(E)
};

/// Samples at p = min(1, 20 ln n / lambda) and counts connected samples.
ExperimentReport connectivity_sampling_experiment(const Hedgegraph& graph, const ExperimentOptions& options,
                                                  const OracleLimits& limits = {});

/// Samples at p = min(1, 10 ln f(E) / k*) and counts samples with f(S) = f(E).
ExperimentReport base_sampling_experiment(const Hedgegraph& graph, const ExperimentOptions& options,
                                          const OracleLimits& limits = {});

struct StrengthDecomposition {
  std::vector<Extended<Rational>> strength;  // per hedge; infinite for hedges with f({e}) = 0
  std::vector<Rational> levels;              // kappa values in extraction order
};

/// Repeatedly extracts kappa_w of the polymatroid restricted to the surviving
/// hedges; hedges outside the minimizing set receive that value.
StrengthDecomposition strength_decomposition(const Hedgegraph& graph, std::span<const Rational> weights,
                                             const SfmOptions& options = {});

inline constexpr double kDefaultSparsifierConstant = 50.0;

struct SparsifierResult {
  std::vector<double> weights;  // w'(e) = w(e) / p_e when sampled, else 0
  std::size_t support = 0;
  std::vector<Extended<Rational>> strength;
  std::vector<double> probability;
  double rho = 0.0;
};

/// p_e = min(1, rho w(e) / strength(e)) with rho = c0 ln n / eps^2.
SparsifierResult sparsify_partitions(const Hedgegraph& graph, std::span<const Rational> weights, double epsilon,
                                     std::uint64_t seed, double c0 = kDefaultSparsifierConstant);

std::size_t sparsifier_support_bound(std::size_t n, double epsilon, double c0 = kDefaultSparsifierConstant);

struct SparsifierCheck {
  bool ok = true;
  double max_relative_error = 0.0;
  std::optional<Partition> worst;
};

/// Compares d_w'(P) with d_w(P) over every partition of V.
SparsifierCheck verify_sparsifier(const Hedgegraph& graph, std::span<const Rational> weights,
                                  std::span<const double> new_weights, double epsilon, const OracleLimits& limits = {});

/// Quotients Q with w(Q) <= t kappa_w.
std::size_t count_small_quotients(const Hedgegraph& graph, std::span<const Rational> weights, std::int64_t t,
                                  const OracleLimits& limits = {});

}  // namespace hedge

#endif  // HEDGEGRAPH_STOCHASTIC_HPP
