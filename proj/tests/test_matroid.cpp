#include <doctest.h>

#include "hedgegraph/matroid.hpp"
#include "hedgegraph/oracle.hpp"
#include "hedgegraph/polymatroid.hpp"
#include "support.hpp"

using namespace hedge;
using namespace hedge::testing;

namespace {

std::int64_t boundary(const Hedgegraph& g, const Partition& p) {
  return static_cast<std::int64_t>(partition_boundary(g, p).size());
}

std::int64_t blocks(const Partition& p) { return static_cast<std::int64_t>(p.block_count()); }

// max over nonempty A of ceil(|A| / r(A)), from the oracle rank.
std::size_t brute_cover_number(const Hedgegraph& g) {
  const std::size_t m = g.hedge_count();
  std::size_t best = 1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    HedgeSet a = HedgeSet::from_mask(m, mask);
    const auto r = static_cast<std::size_t>(exact_rank(g, a).value);
    best = std::max(best, (a.size() + r - 1) / r);
  }
  return best;
}

void check_packing(const Hedgegraph& g, const PackingResult& p, std::size_t k) {
  if (p.success) {
    REQUIRE(p.bases.size() == k);
    HedgeSet seen = g.no_hedges();
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(is_spanning_tree_trimming(g, p.trimmings[i]));
      CHECK(trimmed_hedges(g, p.trimmings[i]) == p.bases[i]);
      CHECK((seen & p.bases[i]).empty());
      seen |= p.bases[i];
    }
    CHECK((seen | p.leftover) == g.all_hedges());
  } else {
    REQUIRE(p.certificate.has_value());
    CHECK(blocks(*p.certificate) >= 2);
    CHECK(boundary(g, *p.certificate) < static_cast<std::int64_t>(k) * (blocks(*p.certificate) - 1));
  }
}

}  // namespace

TEST_CASE("independence on the five-hedge fixture") {
  Hedgegraph g = load("trimming.hg");
  HedgeSet good = hedges(g, {"e1", "e2", "e3", "e4"});
  IndependenceResult yes = is_independent(g, good);
  CHECK(yes.independent);
  CHECK(is_forest_trimming(g, yes.witness));
  CHECK(trimmed_hedges(g, yes.witness) == good);

  HedgeSet bad = hedges(g, {"e1", "e2", "e3", "e5"});
  IndependenceResult no = is_independent(g, bad);
  CHECK_FALSE(no.independent);
  CHECK(no.certificate.is_subset_of(bad));
  CHECK(static_cast<std::int64_t>(no.certificate.size()) > polymatroid_f(g, no.certificate));
  CHECK(rank(g, bad) == 3);
  CHECK(rank(g, g.all_hedges()) == 4);
  CHECK(is_independent(g, g.no_hedges()).independent);
}

TEST_CASE("trimming validators") {
  Hedgegraph g = load("trimming.hg");
  // e1 trimmed to {B, C}, e2 to {A, B}.
  Trimming t{{0, 1, 1, 2}, {1, 0, 0, 1}};
  CHECK(is_valid_trimming(g, t));
  CHECK(is_forest_trimming(g, t));
  CHECK_FALSE(is_spanning_tree_trimming(g, t));
  Trimming wrong{{0, 0, 0, 1}};  // A B is not inside either hyperedge of e1
  CHECK_FALSE(is_valid_trimming(g, wrong));
  Trimming twice{{1, 0, 0, 1}, {1, 0, 0, 1}};
  CHECK_FALSE(is_valid_trimming(g, twice));
  // e2 = {A, B}, e5 = {B, E}, e1 -> {A, E} closes a cycle.
  Trimming cyclic{{0, 0, 0, 4}, {1, 0, 0, 1}, {4, 0, 1, 4}};
  CHECK(is_valid_trimming(g, cyclic));
  CHECK_FALSE(is_forest_trimming(g, cyclic));
}

TEST_CASE("spanning tree trimmings") {
  Hedgegraph f4 = load("orientation.hg");
  SpanningTreeResult tree = spanning_tree_trimming(f4);
  CHECK(tree.found);
  CHECK(is_spanning_tree_trimming(f4, tree.trimming));
  CHECK(tree.hedges.size() == 3);

  for (std::size_t n = 3; n <= 6; ++n) {
    Hedgegraph one = g1(n);
    SpanningTreeResult none = spanning_tree_trimming(one);
    CHECK_FALSE(none.found);
    REQUIRE(none.certificate.has_value());
    CHECK(boundary(one, *none.certificate) < blocks(*none.certificate) - 1);
  }

  Hedgegraph path = parse_hedgegraph("vertices a b c d\nhedge x : a b\nhedge y : b c\nhedge z : c d\n");
  SpanningTreeResult p = spanning_tree_trimming(path);
  CHECK(p.found);
  CHECK(p.hedges == path.all_hedges());
  CHECK_THROWS_AS(spanning_tree_trimming(g1(1)), InvalidArgument);
}

TEST_CASE("packing on the introductory examples") {
  Hedgegraph two = g2(4);
  PackingResult one = pack_bases(two, 1);
  CHECK(one.success);
  check_packing(two, one, 1);
  PackingResult pair = pack_bases(two, 2);
  CHECK_FALSE(pair.success);
  check_packing(two, pair, 2);

  Hedgegraph c3 = load("c3.hg");
  CHECK(pack_bases(c3, 1).success);
  PackingResult c3pair = pack_bases(c3, 2);
  CHECK_FALSE(c3pair.success);
  check_packing(c3, c3pair, 2);
  CHECK_THROWS_AS(pack_bases(c3, 0), InvalidArgument);
}

TEST_CASE("packing succeeds exactly up to partition connectivity") {
  std::mt19937_64 rng(99);
  int exercised = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Hedgegraph g = random_hedgegraph(rng, {2, 6, 2, 10, 4, 3});
    const std::int64_t pc = exact_pc(g).value;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(pc) + 1; ++k) {
      PackingResult p = pack_bases(g, k);
      CHECK(p.success == (static_cast<std::int64_t>(k) <= pc));
      check_packing(g, p, k);
    }
    exercised += pc >= 1 ? 1 : 0;
  }
  CHECK(exercised > 20);
}

TEST_CASE("rank with witness matches the oracle rank") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Hedgegraph g = random_hedgegraph(rng);
    const std::size_t m = g.hedge_count();
    HedgeSet a = HedgeSet::from_mask(m, std::uniform_int_distribution<std::uint64_t>(0, (1ULL << m) - 1)(rng));
    MatroidRank r = rank_with_witness(g, a);
    CHECK(r.rank == exact_rank(g, a).value);
    CHECK(static_cast<std::int64_t>(r.independent.size()) == r.rank);
    CHECK(r.independent.is_subset_of(a));
    CHECK(is_forest_trimming(g, r.witness));
    CHECK(trimmed_hedges(g, r.witness) == r.independent);
    CHECK(r.tight.is_subset_of(a));
    CHECK(polymatroid_f(g, r.tight) + static_cast<std::int64_t>((a - r.tight).size()) == r.rank);
  }
}

TEST_CASE("covers by acyclic trimmable sets") {
  Hedgegraph g = load("trimming.hg");
  Hedgegraph sub = g.restrict_to(hedges(g, {"e1", "e2", "e3", "e4"}));
  CHECK(min_cover_number(sub).k == 1);
  CHECK(min_cover_number(g2(5)).k == 1);

  for (std::size_t m = 1; m <= 5; ++m) {
    std::vector<std::vector<std::vector<VertexId>>> parallel(m, {{0, 1}});
    Hedgegraph bundle = Hedgegraph::from_hyperedges(2, parallel);
    CoverNumber c = min_cover_number(bundle);
    CHECK(c.k == m);
    CHECK(c.cover.classes.size() == m);
    if (m > 1) CHECK(c.below_certificate.has_value());
  }

  Hedgegraph singleton = parse_hedgegraph("vertices a b\nhedge h : a\n");
  CHECK_THROWS_AS(min_cover_number(singleton), InvalidArgument);
}

TEST_CASE("cover number matches the rank-ratio oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    Hedgegraph g = random_hedgegraph(rng, {2, 5, 1, 8, 3, 2});
    CoverNumber c = min_cover_number(g);
    CHECK(c.k == brute_cover_number(g));
    CHECK(c.cover.success);
    HedgeSet seen = g.no_hedges();
    for (std::size_t i = 0; i < c.cover.classes.size(); ++i) {
      CHECK_FALSE(c.cover.classes[i].empty());
      CHECK((seen & c.cover.classes[i]).empty());
      seen |= c.cover.classes[i];
      CHECK(is_forest_trimming(g, c.cover.trimmings[i]));
      CHECK(trimmed_hedges(g, c.cover.trimmings[i]) == c.cover.classes[i]);
    }
    CHECK(seen == g.all_hedges());
    if (c.k > 1) {
      REQUIRE(c.below_certificate.has_value());
      const auto inside = static_cast<std::int64_t>(internal_hedges(g, *c.below_certificate).size());
      const auto n = static_cast<std::int64_t>(g.vertex_count());
      CHECK(inside > static_cast<std::int64_t>(c.k - 1) * (n - blocks(*c.below_certificate)));
    }
  }
}
