#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "fgm/neighbors.hpp"

using namespace fgm;

TEST_CASE("compute_k substitutes the paper defaults") {
  CHECK(compute_k(1.0, 40.0, 1.0, 1000, 1) == 40);
}

TEST_CASE("compute_k clamps at the pool size") {
  CHECK(compute_k(30.0, 40.0, 1.0, 1000, 1) == 1000);
}

TEST_CASE("compute_k is zero for the first arrival") {
  CHECK(compute_k(5.0, 40.0, 1.0, 0, 1) == 0);
  CHECK(compute_k(0.001, 40.0, 1.0, 0, 1) == 0);
}

TEST_CASE("compute_k applies the floor") {
  CHECK(compute_k(0.001, 40.0, 1.0, 500, 1) == 1);
  CHECK(compute_k(0.001, 40.0, 1.0, 500, 0) == 0);
  CHECK(compute_k(0.001, 40.0, 1.0, 500, 5) == 5);
}

TEST_CASE("make_query_point weights order and geography") {
  NodeAttr a{0.5, {0.2, 0.4}, 1.0};
  CHECK(make_query_point(a, 1.0, 1.0) == QueryPoint{0.5, 0.2, 0.4});
  CHECK(make_query_point(a, 0.0, 1.0) == QueryPoint{0.0, 0.2, 0.4});
  CHECK(make_query_point(a, 1.0, 0.0) == QueryPoint{0.5, 0.0, 0.0});
}

TEST_CASE("minkowski distance") {
  CHECK(minkowski_distance({1, 2, 3}, {1, 2, 3}, 2.0) == doctest::Approx(0.0));
  CHECK(minkowski_distance({0, 0}, {3, 4}, 2.0) == doctest::Approx(5.0));
  CHECK(minkowski_distance({0, 0}, {3, 4}, 1.0) == doctest::Approx(7.0));
  CHECK(minkowski_distance({0, 0}, {3, 4}, 3.0) ==
        doctest::Approx(std::cbrt(27.0 + 64.0)));
}

TEST_CASE("singleton pool returns its only member") {
  Rng rng(1);
  ExactKnnIndex idx(2.0);
  idx.insert(0, {0.0, 0.0});
  CHECK(idx.query({9.0, 9.0}, 1, 1, rng) == std::vector<NodeId>{0});
}

TEST_CASE("duplicate insert throws") {
  ExactKnnIndex idx(2.0);
  idx.insert(0, {0.0, 0.0});
  CHECK_THROWS_AS(idx.insert(0, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("index size counts insertions") {
  ExactKnnIndex idx(2.0);
  for (NodeId i = 0; i < 10; ++i) idx.insert(i, {double(i), 0.0});
  CHECK(idx.size() == 10);
}

TEST_CASE("query picks the nearest two") {
  Rng rng(1);
  ExactKnnIndex idx(2.0);
  idx.insert(0, {0.0, 0.0});
  idx.insert(1, {1.0, 0.0});
  idx.insert(2, {5.0, 0.0});
  CHECK(idx.query({0.1, 0.0}, 3, 2, rng) == std::vector<NodeId>{0, 1});
  CHECK(idx.query({0.1, 0.0}, 3, 0, rng).empty());
}

TEST_CASE("exact knn matches the sort-all-distances oracle") {
  Rng data_rng(17);
  std::vector<QueryPoint> points;
  ExactKnnIndex idx(2.0);
  for (NodeId i = 0; i < 50; ++i) {
    QueryPoint q{data_rng.uniform(), data_rng.uniform()};
    points.push_back(q);
    idx.insert(i, q);
  }
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const QueryPoint q{data_rng.uniform(), data_rng.uniform()};
    // oracle: sort all 50 (distance, id) pairs
    std::vector<std::pair<double, NodeId>> all;
    for (NodeId i = 0; i < 50; ++i) {
      all.emplace_back(minkowski_distance(q, points[i], 2.0), i);
    }
    std::sort(all.begin(), all.end());
    std::vector<NodeId> expect;
    for (int i = 0; i < 10; ++i) expect.push_back(all[i].second);
    std::sort(expect.begin(), expect.end());

    auto got = idx.query(q, 1000, 10, rng);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
  }
}

TEST_CASE("lsh with k = pool size has recall 1") {
  LshParams lp;
  lp.seed = 5;
  lp.box_lo = {0.0, 0.0};
  lp.box_hi = {1.0, 1.0};
  LshIndex lsh(2, 2.0, lp);
  ExactKnnIndex exact(2.0);
  Rng data_rng(23);
  std::vector<QueryPoint> queries;
  for (NodeId i = 0; i < 64; ++i) {
    QueryPoint q{data_rng.uniform(), data_rng.uniform()};
    lsh.insert(i, q);
    exact.insert(i, q);
    queries.push_back(q);
  }
  Rng rng(1);
  CHECK(lsh_recall(lsh, exact, queries, 64, rng) == doctest::Approx(1.0));
}

TEST_CASE("lsh recall on a uniform 2-D pool") {
  LshParams lp;
  lp.seed = 5;
  lp.box_lo = {0.0, 0.0};
  lp.box_hi = {1.0, 1.0};
  LshIndex lsh(2, 2.0, lp);
  ExactKnnIndex exact(2.0);
  Rng data_rng(31);
  std::vector<QueryPoint> queries;
  for (NodeId i = 0; i < 10000; ++i) {
    QueryPoint q{data_rng.uniform(), data_rng.uniform()};
    lsh.insert(i, q);
    exact.insert(i, q);
    if (i % 50 == 0) queries.push_back(q);
  }
  Rng rng(1);
  const double recall = lsh_recall(lsh, exact, queries, 40, rng);
  CHECK(recall >= 0.5);
}

TEST_CASE("lsh grows its hash width under load") {
  LshParams lp;
  lp.seed = 9;
  lp.box_lo = {0.0, 0.0};
  lp.box_hi = {1.0, 1.0};
  LshIndex lsh(2, 2.0, lp);
  const std::uint32_t start_bits = lsh.current_bits();
  Rng data_rng(3);
  for (NodeId i = 0; i < 40000; ++i) {
    lsh.insert(i, {data_rng.uniform(), data_rng.uniform()});
  }
  CHECK(lsh.current_bits() > start_bits);
}

TEST_CASE("lsh query never returns the querying node or unseen ids") {
  LshParams lp;
  lp.seed = 4;
  lp.box_lo = {0.0, 0.0};
  lp.box_hi = {1.0, 1.0};
  LshIndex lsh(2, 2.0, lp);
  Rng data_rng(8);
  Rng rng(2);
  for (NodeId i = 0; i < 500; ++i) {
    QueryPoint q{data_rng.uniform(), data_rng.uniform()};
    if (i > 0) {
      const auto res = lsh.query(q, i, 20, rng);
      for (NodeId id : res) CHECK(id < i);
      std::vector<NodeId> sorted = res;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      CHECK(res.size() == std::min<std::size_t>(20, i));
    }
    lsh.insert(i, q);
  }
}

TEST_CASE("precomputed backend filters to arrived ids and truncates") {
  std::vector<std::vector<NodeId>> lists = {
      {},        // node 0
      {0},       // node 1
      {3, 0, 1}, // node 2: 3 has not arrived yet at arrival 2
      {2, 1, 0},
  };
  PrecomputedIndex idx(lists);
  Rng rng(1);
  idx.insert(0, {});
  idx.insert(1, {});
  CHECK(idx.query({}, 2, 5, rng) == std::vector<NodeId>{0, 1});
  idx.insert(2, {});
  CHECK(idx.query({}, 3, 2, rng) == std::vector<NodeId>{2, 1});
}

TEST_CASE("precomputed file loader") {
  const std::string path = "/tmp/fgm_pnbr_test.txt";
  {
    std::ofstream out(path);
    out << "0:\n1: 0\n2: 1,0\n3: 2,0\n";
  }
  PrecomputedIndex idx = PrecomputedIndex::load(path, 4);
  std::remove(path.c_str());
  Rng rng(1);
  idx.insert(0, {});
  idx.insert(1, {});
  idx.insert(2, {});
  CHECK(idx.query({}, 2, 4, rng) == std::vector<NodeId>{1, 0});
  CHECK(idx.query({}, 3, 1, rng) == std::vector<NodeId>{2});
}
