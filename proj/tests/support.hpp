#ifndef HEDGEGRAPH_TESTS_SUPPORT_HPP
#define HEDGEGRAPH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hedgegraph/hedgegraph.hpp"

namespace hedge::testing {

inline std::string data_path(const std::string& name) { return std::string(HEDGE_DATA_DIR) + "/" + name; }

inline Hedgegraph load(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_hedgegraph(buffer.str());
}

inline std::vector<VertexId> vertices(const Hedgegraph& g, std::initializer_list<const char*> names) {
  std::vector<VertexId> out;
  for (const char* name : names) out.push_back(g.find_vertex(name).value());
  return out;
}

inline HedgeSet hedges(const Hedgegraph& g, std::initializer_list<const char*> ids) {
  HedgeSet out = g.no_hedges();
  for (const char* id : ids) out.insert(g.find_hedge(id).value());
  return out;
}

inline std::vector<VertexId> all_vertices(std::size_t n) {
  std::vector<VertexId> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = static_cast<VertexId>(v);
  return out;
}

/// One hedge holding the single hyperedge V.
inline Hedgegraph g1(std::size_t n) { return Hedgegraph::from_hyperedges(n, {{all_vertices(n)}}); }

/// n - 1 parallel copies of the hyperedge V.
inline Hedgegraph g2(std::size_t n) {
  std::vector<std::vector<std::vector<VertexId>>> hedges(n - 1, {all_vertices(n)});
  return Hedgegraph::from_hyperedges(n, hedges);
}

inline Hedgegraph cycle(std::size_t n) {
  std::vector<std::vector<std::vector<VertexId>>> hedges;
  for (std::size_t v = 0; v < n; ++v)
    hedges.push_back({{static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n)}});
  return Hedgegraph::from_hyperedges(n, hedges);
}

inline std::vector<Rational> unit_weights(const Hedgegraph& g) { return std::vector<Rational>(g.hedge_count(), Rational(1)); }

struct RandomShape {
  std::size_t min_vertices = 2;
  std::size_t max_vertices = 7;
  std::size_t min_hedges = 1;
  std::size_t max_hedges = 8;
  std::size_t max_hyperedge_size = 4;
  std::size_t max_hyperedges = 3;
};

/// Random hedgegraph with pairwise disjoint hyperedges of size >= 2 per hedge.
inline Hedgegraph random_hedgegraph(std::mt19937_64& rng, const RandomShape& shape = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t n = pick(shape.min_vertices, shape.max_vertices);
  const std::size_t m = pick(shape.min_hedges, shape.max_hedges);
  std::vector<std::vector<std::vector<VertexId>>> hedges;
  std::vector<VertexId> pool(n);
  for (std::size_t e = 0; e < m; ++e) {
    std::iota(pool.begin(), pool.end(), VertexId{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    std::size_t wanted = pick(1, shape.max_hyperedges);
    std::vector<std::vector<VertexId>> hedge;
    std::size_t used = 0;
    while (hedge.size() < wanted && n - used >= 2) {
      std::size_t size = pick(2, std::min(shape.max_hyperedge_size, n - used));
      hedge.emplace_back(pool.begin() + static_cast<std::ptrdiff_t>(used),
                         pool.begin() + static_cast<std::ptrdiff_t>(used + size));
      used += size;
    }
    hedges.push_back(std::move(hedge));
  }
  return Hedgegraph::from_hyperedges(n, hedges);
}

}  // namespace hedge::testing

#endif  // HEDGEGRAPH_TESTS_SUPPORT_HPP
