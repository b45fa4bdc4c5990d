#include <doctest.h>

#include <sstream>

#include "fgm/graph.hpp"
#include "fgm/rng.hpp"
#include "fgm/trace.hpp"

using namespace fgm;

TEST_CASE("add_edge inserts once") {
  Graph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK(g.edge_count() == 1);
  g.finalize();
  CHECK(g.neighbors(0) == std::vector<NodeId>{1});
}

TEST_CASE("add_edge is idempotent on duplicates") {
  Graph g(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK(g.edge_count() == 1);
  CHECK(g.duplicate_count() == 2);
}

TEST_CASE("self-loops are rejected") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
}

TEST_CASE("degree") {
  Graph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(tri.degree(0) == 2);
  CHECK(tri.degree(1) == 2);
  CHECK(tri.degree(2) == 2);

  Graph star(6);
  for (NodeId leaf = 1; leaf <= 5; ++leaf) star.add_edge(0, leaf);
  CHECK(star.degree(0) == 5);

  Graph lonely(1);
  CHECK(lonely.degree(0) == 0);
  CHECK_THROWS_AS(lonely.degree(3), std::out_of_range);
}

TEST_CASE("edge list round-trip") {
  Rng rng(99);
  Graph g(40);
  for (int i = 0; i < 120; ++i) {
    const auto u = static_cast<NodeId>(rng.below(40));
    const auto v = static_cast<NodeId>(rng.below(40));
    if (u != v && u != 39 && v != 39) {
      auto a = std::min(u, v), b = std::max(u, v);
      if (g.neighbors(a).empty() ||
          std::find(g.neighbors(a).begin(), g.neighbors(a).end(), b) ==
              g.neighbors(a).end()) {
        g.add_edge(a, b);
      }
    }
  }
  g.add_edge(0, 39);  // pin the highest id so n survives the trip
  g.finalize();
  std::stringstream ss;
  g.write_edge_list(ss);
  const Graph back = Graph::read_edge_list(ss);
  CHECK(back == g);
}

TEST_CASE("handshake: m is half the degree sum") {
  Rng rng(7);
  Graph g(30);
  for (int i = 0; i < 60; ++i) {
    const auto u = static_cast<NodeId>(rng.below(30));
    const auto v = static_cast<NodeId>(rng.below(30));
    if (u != v) g.add_edge(std::min(u, v), std::max(u, v));
  }
  std::size_t degree_sum = 0;
  for (NodeId u = 0; u < 30; ++u) degree_sum += g.degree(u);
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("trace file round-trip") {
  GenTrace t;
  t.records.push_back(TraceRecord{0, 0, {}, {}});
  t.records.push_back(TraceRecord{1, 3, {0}, {0}});
  t.records.push_back(TraceRecord{2, 2, {0, 1}, {1}});
  std::stringstream ss;
  t.write(ss);
  const GenTrace back = GenTrace::read(ss);
  REQUIRE(back.records.size() == 3);
  CHECK(back.records[2].pnbr == std::vector<NodeId>{0, 1});
  CHECK(back.records[2].accepted == std::vector<NodeId>{1});
  CHECK(back.records[1].k == 3);
  CHECK(back.contains(2, 1));
  CHECK_FALSE(back.contains(1, 1));
}
