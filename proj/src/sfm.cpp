#include "hedgegraph/sfm.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "hedgegraph/polymatroid.hpp"

namespace hedge {

namespace {

constexpr double kWeightTolerance = 1e-12;
constexpr double kNormTolerance = 1e-9;

void validate_oracle(const SubmodularOracle& oracle, const SfmOptions& options) {
  const std::size_t n = oracle.ground_size;
  std::mt19937_64 rng(options.validation_seed);
  std::bernoulli_distribution coin(0.5);
  auto check_bound = [&](const HedgeSet& s, std::int64_t value) {
    if (oracle.declared_bound > 0 && (value > oracle.declared_bound || value < -oracle.declared_bound)) {
      std::ostringstream msg;
      msg << "oracle value " << value << " at " << s << " exceeds the declared bound " << oracle.declared_bound;
      throw OracleInconsistency(msg.str());
    }
  };
  for (std::size_t t = 0; t < options.validation_samples; ++t) {
    HedgeSet a(n);
    HedgeSet b(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) a.insert(static_cast<HedgeIndex>(i));
      if (coin(rng)) b.insert(static_cast<HedgeIndex>(i));
    }
    const auto fa = oracle.evaluate(a);
    const auto fb = oracle.evaluate(b);
    const auto fu = oracle.evaluate(a | b);
    const auto fi = oracle.evaluate(a & b);
    check_bound(a, fa);
    check_bound(b, fb);
    if (fa + fb < fu + fi) {
      std::ostringstream msg;
      msg << "submodularity fails for A=" << a << ", B=" << b << ": " << fa << " + " << fb << " < " << fu << " + "
          << fi;
      throw OracleInconsistency(msg.str());
    }
  }
}

// Fujishige-Wolfe minimum-norm point in the base polytope of S -> f(S) - f(empty).
class MinNormPoint {
 public:
  MinNormPoint(const SubmodularOracle& oracle, std::size_t max_iterations)
      : oracle_(oracle), n_(oracle.ground_size), max_iterations_(max_iterations) {}

  SfmResult run() {
    SfmResult out;
    out.method = "min_norm_point";
    base_ = evaluate(HedgeSet(n_));
    best_value_ = base_;
    best_set_ = HedgeSet(n_);
    if (n_ == 0) {
      return finish(out, true);
    }

    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_));
    Eigen::VectorXd q = greedy(x);
    corral_ = {q};
    lambda_ = {1.0};
    x = q;

    while (out.iterations < max_iterations_) {
      ++out.iterations;
      q = greedy(x);
      if (certified(x)) return finish(out, true);

      const double xx = x.squaredNorm();
      if (xx - x.dot(q) <= kNormTolerance * std::max(1.0, xx)) break;

      corral_.push_back(q);
      lambda_.push_back(0.0);
      if (!minor_cycles(x)) break;
    }
    return finish(out, false);
  }

 private:
  std::int64_t evaluate(const HedgeSet& s) {
    ++evaluations_;
    return oracle_.evaluate(s);
  }

  // Vertex of the base polytope minimizing <dir, .>; every prefix of the
  // sorted order is also a candidate minimizer.
  Eigen::VectorXd greedy(const Eigen::VectorXd& dir) {
    std::vector<HedgeIndex> order(n_);
    std::iota(order.begin(), order.end(), HedgeIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](HedgeIndex a, HedgeIndex b) { return dir[a] < dir[b]; });
    Eigen::VectorXd q(static_cast<Eigen::Index>(n_));
    HedgeSet prefix(n_);
    std::int64_t previous = base_;
    for (HedgeIndex e : order) {
      prefix.insert(e);
      std::int64_t value = evaluate(prefix);
      q[e] = static_cast<double>(value - previous);
      previous = value;
      if (value < best_value_) {
        best_value_ = value;
        best_set_ = prefix;
      }
    }
    return q;
  }

  // For x in the base polytope, f(S) - f(empty) >= sum of negative parts of x.
  // Integer values make a gap below 1/2 conclusive.
  bool certified(const Eigen::VectorXd& x) const {
    double lower = static_cast<double>(base_);
    for (Eigen::Index i = 0; i < x.size(); ++i) lower += std::min(x[i], 0.0);
    return static_cast<double>(best_value_) - lower < 0.5;
  }

  Eigen::VectorXd affine_minimizer(std::vector<double>& alpha) const {
    const auto k = static_cast<Eigen::Index>(corral_.size());
    Eigen::MatrixXd points(static_cast<Eigen::Index>(n_), k);
    for (Eigen::Index j = 0; j < k; ++j) points.col(j) = corral_[static_cast<std::size_t>(j)];
    Eigen::MatrixXd system = Eigen::MatrixXd::Zero(k + 1, k + 1);
    system.topLeftCorner(k, k) = points.transpose() * points;
    system.block(0, k, k, 1).setOnes();
    system.block(k, 0, 1, k).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(k + 1);
    rhs[k] = 1.0;
    Eigen::VectorXd solution = system.completeOrthogonalDecomposition().solve(rhs);
    double total = solution.head(k).sum();
    alpha.assign(static_cast<std::size_t>(k), 0.0);
    for (Eigen::Index j = 0; j < k; ++j) alpha[static_cast<std::size_t>(j)] = solution[j] / total;
    Eigen::VectorXd y = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_));
    for (Eigen::Index j = 0; j < k; ++j) y += alpha[static_cast<std::size_t>(j)] * corral_[static_cast<std::size_t>(j)];
    return y;
  }

  // Returns false when the corral stops making progress numerically.
  bool minor_cycles(Eigen::VectorXd& x) {
    std::vector<double> alpha;
    for (std::size_t guard = 0; guard <= n_ + 2; ++guard) {
      Eigen::VectorXd y = affine_minimizer(alpha);
      if (std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > kWeightTolerance; })) {
        x = y;
        lambda_ = alpha;
        return true;
      }
      double theta = 1.0;
      for (std::size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] <= kWeightTolerance) theta = std::min(theta, lambda_[i] / (lambda_[i] - alpha[i]));
      x = theta * y + (1.0 - theta) * x;
      for (std::size_t i = 0; i < alpha.size(); ++i) lambda_[i] = theta * alpha[i] + (1.0 - theta) * lambda_[i];

      std::size_t kept = 0;
      double total = 0.0;
      bool dropped_new = false;
      for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (lambda_[i] > kWeightTolerance) {
          corral_[kept] = corral_[i];
          lambda_[kept] = lambda_[i];
          total += lambda_[i];
          ++kept;
        } else if (i + 1 == lambda_.size()) {
          dropped_new = true;
        }
      }
      corral_.resize(kept);
      lambda_.resize(kept);
      if (kept == 0) return false;
      for (double& l : lambda_) l /= total;
      if (dropped_new && theta <= kWeightTolerance) return false;
    }
    return false;
  }

  SfmResult finish(SfmResult& out, bool is_certified) {
    out.minimizer = best_set_;
    out.value = best_value_;
    out.evaluations = evaluations_;
    out.certified = is_certified;
    return out;
  }

  const SubmodularOracle& oracle_;
  std::size_t n_;
  std::size_t max_iterations_;
  std::size_t evaluations_ = 0;
  std::int64_t base_ = 0;
  std::int64_t best_value_ = 0;
  HedgeSet best_set_;
  std::vector<Eigen::VectorXd> corral_;
  std::vector<double> lambda_;
};

}  // namespace

SfmResult minimize_exhaustive(const SubmodularOracle& oracle) {
  const std::size_t n = oracle.ground_size;
  if (n > 30) throw OracleLimitError("exhaustive minimization over " + std::to_string(n) + " elements");
  SfmResult out;
  out.method = "exhaustive";
  out.certified = true;
  out.minimizer = HedgeSet(n);
  out.value = oracle.evaluate(out.minimizer);
  out.evaluations = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    HedgeSet s = HedgeSet::from_mask(n, mask);
    std::int64_t value = oracle.evaluate(s);
    ++out.evaluations;
    if (value < out.value) {
      out.value = value;
      out.minimizer = std::move(s);
    }
  }
  return out;
}

SfmResult minimize_submodular(const SubmodularOracle& oracle, const SfmOptions& options) {
  if (!oracle.evaluate) throw InvalidArgument("submodular oracle has no evaluation function");
  if (options.validate) validate_oracle(oracle, options);
  const std::size_t n = oracle.ground_size;
  std::size_t limit = options.max_iterations != 0 ? options.max_iterations : std::max<std::size_t>(1000, 20 * n * n);
  SfmResult result = MinNormPoint(oracle, limit).run();
  if (!result.certified && options.allow_fallback && n <= options.fallback_limit) {
    SfmResult sweep = minimize_exhaustive(oracle);
    sweep.evaluations += result.evaluations;
    sweep.iterations = result.iterations;
    return sweep;
  }
  return result;
}

RatioResult min_ratio(const SubmodularOracle& f, std::span<const Rational> weights, const SfmOptions& options) {
  const std::size_t n = f.ground_size;
  if (weights.size() != n) throw InvalidArgument("weight vector has the wrong length");
  for (const auto& w : weights)
    if (w < Rational(0)) throw InvalidArgument("weights must be nonnegative");
  if (f.evaluate(HedgeSet(n)) != 0) throw InvalidArgument("min_ratio expects f(empty) = 0");

  RatioResult out;
  out.argmin = HedgeSet(n);
  const std::int64_t f_full = f.evaluate(HedgeSet::full(n));
  if (f_full == 0) {
    out.value = Extended<Rational>::infinity();
    return out;
  }

  // Scale weights to integers by the lcm of their denominators.
  std::int64_t scale = 1;
  for (const auto& w : weights) scale = std::lcm(scale, w.denominator());
  std::vector<std::int64_t> scaled(n);
  std::int64_t scaled_full = 0;
  for (std::size_t e = 0; e < n; ++e) {
    scaled[e] = weights[e].numerator() * (scale / weights[e].denominator());
    scaled_full += scaled[e];
  }
  auto scaled_weight = [&](const HedgeSet& s) {
    std::int64_t total = 0;
    s.for_each([&](HedgeIndex e) { total += scaled[e]; });
    return total;
  };

  Rational alpha = Rational(scaled_full, scale) / f_full;
  out.alphas.push_back(alpha);
  while (true) {
    const std::int64_t p = alpha.numerator();
    const std::int64_t q = alpha.denominator();
    // q * scale * (alpha * f(A) - w(A)), an integer submodular function.
    SubmodularOracle h;
    h.ground_size = n;
    h.declared_bound = 0;
    h.evaluate = [&](const HedgeSet& s) { return p * scale * f.evaluate(s) - q * scaled_weight(s); };
    SfmResult step = minimize_submodular(h, options);
    ++out.iterations;
    const std::int64_t at_full = p * scale * f_full - q * scaled_full;
    if (step.value >= at_full) break;

    const std::int64_t f_a = f.evaluate(step.minimizer);
    if (f_a >= f_full) throw OracleInconsistency("Newton step produced a set with f(A) = f(E)");
    Rational next = Rational(scaled_full - scaled_weight(step.minimizer), scale) / (f_full - f_a);
    if (!(next < alpha)) throw OracleInconsistency("Newton iterate failed to decrease");
    alpha = next;
    out.argmin = step.minimizer;
    out.alphas.push_back(alpha);
  }
  out.value = alpha;
  return out;
}

SubmodularOracle polymatroid_oracle(const Hedgegraph& graph) {
  auto f = std::make_shared<Polymatroid>(graph);
  SubmodularOracle oracle;
  oracle.ground_size = graph.hedge_count();
  oracle.declared_bound = static_cast<std::int64_t>(graph.vertex_count());
  oracle.evaluate = [f](const HedgeSet& s) { return (*f)(s); };
  return oracle;
}

IndependenceVerdict matroid_independence_via_sfm(const Hedgegraph& graph, const HedgeSet& hedges,
                                                 const SfmOptions& options) {
  graph.check(hedges);
  const auto indices = hedges.indices();
  const std::size_t k = indices.size();
  auto to_global = [&](const HedgeSet& local) {
    HedgeSet out = graph.no_hedges();
    local.for_each([&](HedgeIndex i) { out.insert(indices[i]); });
    return out;
  };
  Polymatroid f(graph);
  SubmodularOracle g;
  g.ground_size = k;
  g.declared_bound = static_cast<std::int64_t>(graph.vertex_count() + k);
  g.evaluate = [&](const HedgeSet& local) { return f(to_global(local)) - static_cast<std::int64_t>(local.size()); };
  SfmResult result = minimize_submodular(g, options);
  IndependenceVerdict verdict;
  verdict.independent = result.value >= 0;
  verdict.certificate = verdict.independent ? graph.no_hedges() : to_global(result.minimizer);
  return verdict;
}

}  // namespace hedge
