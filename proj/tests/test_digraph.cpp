#include <set>

#include "acyclic/construction.hpp"
#include "acyclic/digraph.hpp"
#include "acyclic/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace acyclic;

TEST_CASE("vertex sets") {
  VertexSet s(70, {0, 3, 69});
  CHECK(s.size() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(68));
  CHECK(s.members() == std::vector<Vertex>{0, 3, 69});
  CHECK(s.complement().size() == 67);
  CHECK(VertexSet::full(70).size() == 70);
  CHECK_THROWS_AS(s.insert(70), InvalidInput);
  s.erase(3);
  CHECK(s.size() == 2);
}

TEST_CASE("digraph construction validates input") {
  CHECK_THROWS_AS(Digraph(3, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), InvalidInput);
  Digraph d(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK(d.arc_count() == 2);
  CHECK(d.has_arc(0, 1));
  CHECK_FALSE(d.has_arc(1, 0));
  CHECK(d.out(0).size() == 1);
  CHECK(d.in(2).size() == 1);

  Digraph digon(2, {{0, 1}, {1, 0}});
  CHECK(digirth(digon) == 2);
  CHECK_THROWS_AS(OrientedGraph{digon}, InvalidInput);

  CHECK_THROWS_AS(UndirectedGraph(2, {{1, 1}}), InvalidInput);
  UndirectedGraph g(3, {{2, 0}, {0, 2}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 2});
}

TEST_CASE("is_acyclic examples") {
  const auto triangle = oracle::directed_cycle(3);
  CHECK_FALSE(is_acyclic(triangle, VertexSet::full(3)));
  CHECK(is_acyclic(triangle, VertexSet(3, {0, 1})));
  CHECK(is_acyclic(triangle, VertexSet(3, {0, 2})));
  CHECK(is_acyclic(triangle, VertexSet(3, {1, 2})));

  // construct(3,2): the oracle finds its directed cycles by enumeration.
  const auto d = construct(3, 2).graph;
  REQUIRE(d.order() == 5);
  CHECK(oracle::count_simple_cycles(d) > 0);
  CHECK_FALSE(is_acyclic(d, VertexSet::full(5)));

  CHECK_THROWS_AS(is_acyclic(triangle, VertexSet(4)), InvalidInput);
  CHECK(is_acyclic(Digraph(), VertexSet()));
}

TEST_CASE("digirth examples") {
  for (std::size_t g = 2; g <= 12; ++g) CHECK(digirth(oracle::directed_cycle(g)) == g);
  CHECK_FALSE(digirth(Digraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})).has_value());
  CHECK_FALSE(digirth(Digraph()).has_value());

  const auto d = construct(4, 3).graph;
  REQUIRE(d.order() == 10);
  CHECK(oracle::digirth(d) == 4);
  CHECK(digirth(d) == 4);
}

TEST_CASE("shortest_cycle respects removed vertices") {
  // Two triangles sharing vertex 0, plus a 4-cycle avoiding it.
  Digraph d(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 1}, {1, 5}});
  CHECK(shortest_cycle(d, VertexSet(8)) == std::vector<Vertex>{0, 1, 2});
  CHECK(shortest_cycle(d, VertexSet(8, {0})) == std::vector<Vertex>{1, 5, 6, 7});
  CHECK(shortest_cycle(d, VertexSet(8, {0, 5})).empty());
}

TEST_CASE("reverse") {
  const auto triangle = oracle::directed_cycle(3);
  const auto back = reverse(triangle);
  CHECK(back.has_arc(1, 0));
  CHECK(back.has_arc(2, 1));
  CHECK(back.has_arc(0, 2));
  CHECK(back.arc_count() == 3);

  Digraph dag(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto rdag = reverse(dag);
  CHECK(rdag.has_arc(3, 2));
  CHECK(rdag.has_arc(2, 1));
  CHECK(rdag.has_arc(1, 0));
  CHECK(is_acyclic(rdag, VertexSet::full(4)));
}

TEST_CASE("random digraph properties") {
  std::mt19937_64 rng(20241016);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = oracle::random_digraph(rng, 12);
    const auto r = reverse(d);
    CHECK(reverse(r) == d);
    CHECK(digirth(d) == digirth(r));
    CHECK(digirth(d) == oracle::digirth(d));
    CHECK(is_acyclic(d, VertexSet::full(d.order())) == !digirth(d).has_value());

    // Downward closure along a random chain of subsets.
    VertexSet s = VertexSet::full(d.order());
    bool acyclic_so_far = is_acyclic(d, s);
    std::vector<Vertex> order = s.members();
    std::shuffle(order.begin(), order.end(), rng);
    for (Vertex v : order) {
      s.erase(v);
      const bool now = is_acyclic(d, s);
      if (acyclic_so_far) CHECK(now);
      acyclic_so_far = now;
      std::uint64_t bits = 0;
      for (Vertex w : s.members()) bits |= std::uint64_t{1} << w;
      CHECK(now == !oracle::has_directed_cycle(d, bits));
    }
  }
}

TEST_CASE("orientation enumeration counts") {
  const UndirectedGraph edge(2, {{0, 1}});
  CHECK(orientations(edge, false).size() == 2);
  CHECK(orientations(edge, true).size() == 1);

  const auto triangle = oracle::complete_graph(3);
  CHECK(orientations(triangle, false).size() == 8);
  CHECK(orientations(triangle, true).size() == 4);

  const auto k4 = oracle::complete_graph(4);
  const auto all = orientations(k4, false);
  const auto half = orientations(k4, true);
  CHECK(all.size() == 64);
  CHECK(half.size() == 32);

  std::set<std::vector<Arc>> seen;
  for (const auto& d : all) seen.emplace(d.arcs().begin(), d.arcs().end());
  CHECK(seen.size() == 64);

  std::set<std::vector<Arc>> kept;
  for (const auto& d : half) kept.emplace(d.arcs().begin(), d.arcs().end());
  for (const auto& d : half) {
    const auto r = reverse(d);
    CHECK(kept.count(std::vector<Arc>(r.arcs().begin(), r.arcs().end())) == 0);
  }
}

TEST_CASE("orientation stream length up to 20 edges") {
  // A path on m+1 vertices has m edges.
  for (std::size_t m : {1U, 5U, 11U, 16U, 20U}) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, v + 1);
    const UndirectedGraph path(m + 1, std::move(edges));
    for (bool dedup : {false, true}) {
      OrientationCursor cursor(path, dedup);
      std::uint64_t count = 0;
      while (cursor.next()) ++count;
      CHECK(count == (std::uint64_t{1} << (dedup ? m - 1 : m)));
    }
  }
  CHECK(OrientationCursor::domain_size(0, true) == 1);
  CHECK_THROWS_AS(OrientationCursor::domain_size(64, false), ResourceGuard);
}

TEST_CASE("orient follows the canonical edge convention") {
  const auto triangle = oracle::complete_graph(3);  // edges (0,1) (0,2) (1,2)
  const auto d = orient(triangle, 0b010);
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(2, 0));
  CHECK(d.has_arc(1, 2));
  CHECK(digirth(d) == 3);
}
