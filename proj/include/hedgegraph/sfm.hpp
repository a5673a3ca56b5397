#ifndef HEDGEGRAPH_SFM_HPP
#define HEDGEGRAPH_SFM_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hedgegraph/hedgegraph.hpp"

namespace hedge {

/// Integer-valued set function over {0, ..., ground_size-1}. The caller
/// asserts submodularity; `declared_bound` bounds |evaluate(S)| and is only
/// used for sanity checks.
struct SubmodularOracle {
  std::size_t ground_size = 0;
  std::function<std::int64_t(const HedgeSet&)> evaluate;
  std::int64_t declared_bound = 0;
};

struct SfmOptions {
  /// Check submodularity on random pairs before minimizing.
  bool validate = false;
  std::size_t validation_samples = 64;
  std::uint64_t validation_seed = 0;
  /// Use the exhaustive sweep when min-norm-point cannot certify its answer
  /// and ground_size is at most this.
  bool allow_fallback = true;
  std::size_t fallback_limit = 16;
  std::size_t max_iterations = 0;  // 0 picks a size-based default
};

struct SfmResult {
  HedgeSet minimizer;
  std::int64_t value = 0;
  std::size_t evaluations = 0;
  std::size_t iterations = 0;
  /// True when the answer is known to be optimal (duality gap below 1/2, or exhaustive).
  bool certified = false;
  std::string method;  // "min_norm_point" or "exhaustive"
};

struct RatioResult {
  Extended<Rational> value;
  HedgeSet argmin;
  std::size_t iterations = 0;
  std::vector<Rational> alphas;  // Newton iterates, strictly decreasing
};

/// Raised when validation finds f(A) + f(B) < f(A u B) + f(A n B).
class OracleInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SfmResult minimize_submodular(const SubmodularOracle& oracle, const SfmOptions& options = {});
SfmResult minimize_exhaustive(const SubmodularOracle& oracle);

/// Minimum over A of (w(E) - w(A)) / (f(E) - f(A)) for a polymatroid f,
/// skipping A with f(A) = f(E). Infinite when f(E) = 0.
RatioResult min_ratio(const SubmodularOracle& f, std::span<const Rational> weights, const SfmOptions& options = {});

/// f of the hedgegraph as an oracle over its hedges.
SubmodularOracle polymatroid_oracle(const Hedgegraph& graph);

struct IndependenceVerdict {
  bool independent = true;
  HedgeSet certificate;  // B subset of A with |B| > f(B) when dependent
};

/// A is independent iff min over B subset of A of f(B) - |B| is 0.
IndependenceVerdict matroid_independence_via_sfm(const Hedgegraph& graph, const HedgeSet& hedges,
                                                 const SfmOptions& options = {});

}  // namespace hedge

#endif  // HEDGEGRAPH_SFM_HPP
