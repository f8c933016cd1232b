#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "netform/graph.hpp"

using netform::Edge;
using netform::Graph;

namespace {

Graph path3() {  // 0 - 1 - 2
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_CASE("add_edge inserts once and reports repeats") {
  Graph g(4);
  REQUIRE(g.add_edge(0, 1));
  REQUIRE_FALSE(g.add_edge(1, 0));  // same undirected edge
  REQUIRE(g.edge_count() == 1);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 0));
}

TEST_CASE("self-loops and unknown nodes are rejected") {
  Graph g(3);
  REQUIRE_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  REQUIRE_THROWS_AS(g.add_edge(-1, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(g.has_edge(0, 99), std::invalid_argument);
  REQUIRE(g.edge_count() == 0);
}

TEST_CASE("remove_edge undoes add_edge") {
  Graph g(3);
  g.add_edge(0, 1);
  REQUIRE(g.remove_edge(1, 0));
  REQUIRE_FALSE(g.remove_edge(0, 1));
  REQUIRE(g.edge_count() == 0);
  REQUIRE_FALSE(g.has_edge(0, 1));
}

TEST_CASE("neighbors stay sorted") {
  Graph g(5);
  g.add_edge(2, 4);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  REQUIRE(g.neighbors(2) == std::vector<int>{0, 3, 4});
  REQUIRE(g.degree(2) == 3);
}

TEST_CASE("common neighbors merge sorted lists") {
  Graph g(6);
  // 0 and 1 share 2 and 3; 4 is exclusive to 0; 5 exclusive to 1.
  for (int v : {2, 3, 4}) g.add_edge(0, v);
  for (int v : {2, 3, 5}) g.add_edge(1, v);
  REQUIRE(g.common_neighbors(0, 1) == std::vector<int>{2, 3});
  REQUIRE(g.common_neighbor_count(0, 1) == 2);
  REQUIRE(g.common_neighbors(4, 5).empty());
}

TEST_CASE("edges enumerate lexicographically as (min,max)") {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  g.add_edge(0, 1);
  REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("non_neighbors excludes self and adjacency") {
  Graph g = path3();
  REQUIRE(g.non_neighbors(0) == std::vector<int>{2});
  REQUIRE(g.non_neighbors(1).empty());
}

TEST_CASE("edge_diff separates additions from removals") {
  Graph base(4);
  base.add_edge(0, 1);
  base.add_edge(1, 2);
  Graph grown(4);
  grown.add_edge(0, 1);
  grown.add_edge(2, 3);
  const auto diff = netform::edge_diff(base, grown);
  REQUIRE(diff.added == std::vector<Edge>{{2, 3}});
  REQUIRE(diff.removed == std::vector<Edge>{{1, 2}});
  REQUIRE(diff.base_edge_count == 2);
  REQUIRE(diff.final_edge_count == 2);
  REQUIRE(diff.percent_new_edges() == Catch::Approx(50.0));

  Graph other(5);
  REQUIRE_THROWS_AS(netform::edge_diff(base, other), std::invalid_argument);
}

TEST_CASE("percent_new_edges handles an empty base") {
  netform::GraphDiff none;
  REQUIRE(none.percent_new_edges() == 0.0);
}

TEST_CASE("bfs distances and unreachable nodes") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  const auto dist = netform::bfs_distances(g, 0);
  REQUIRE(dist == std::vector<int>{0, 1, 2, -1, -1});
}

TEST_CASE("connected components are ordered and sorted") {
  Graph g(6);
  g.add_edge(3, 5);
  g.add_edge(0, 2);
  const auto comps = netform::connected_components(g);
  REQUIRE(comps == std::vector<std::vector<int>>{{0, 2}, {1}, {3, 5}, {4}});
  REQUIRE(netform::component_sizes(g) == std::vector<std::size_t>{2, 2, 1, 1});
}

TEST_CASE("local clustering: triangle is 1, path is 0, low degree is 0") {
  Graph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  REQUIRE(netform::local_clustering(tri) == std::vector<double>{1.0, 1.0, 1.0});
  REQUIRE(netform::local_clustering(path3()) == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("local clustering on a partially closed neighborhood") {
  // Node 0 adjacent to 1, 2, 3 with only the pair (1,2) linked: 1/3.
  Graph g(4);
  for (int v : {1, 2, 3}) g.add_edge(0, v);
  g.add_edge(1, 2);
  REQUIRE(netform::local_clustering(g)[0] == Catch::Approx(1.0 / 3.0));
}

TEST_CASE("graph copies are independent snapshots") {
  Graph g(3);
  g.add_edge(0, 1);
  Graph snapshot = g;
  g.add_edge(1, 2);
  REQUIRE(snapshot.edge_count() == 1);
  REQUIRE_FALSE(snapshot.has_edge(1, 2));
  REQUIRE(g.edge_count() == 2);
  REQUIRE_FALSE(snapshot == g);
}
