#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <vector>

#include "netform/netgen.hpp"

using Catch::Approx;
using netform::Graph;
using netform::Rng;

TEST_CASE("ring lattice links floor(k/2) neighbors per side") {
  const Graph g = netform::ring_lattice(10, 4);
  REQUIRE(g.edge_count() == 20);
  for (int u = 0; u < 10; ++u) REQUIRE(g.degree(u) == 4);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(0, 2));
  REQUIRE(g.has_edge(0, 8));
  REQUIRE_FALSE(g.has_edge(0, 3));
  // Odd k rounds down: k = 5 produces the same lattice as k = 4.
  REQUIRE(g == netform::ring_lattice(10, 5));
  REQUIRE_THROWS_AS(netform::ring_lattice(4, 4), std::invalid_argument);
  REQUIRE_THROWS_AS(netform::ring_lattice(10, 1), std::invalid_argument);
}

TEST_CASE("erdos-renyi endpoints: p=0 empty, p=1 complete") {
  Rng rng(1);
  REQUIRE(netform::erdos_renyi(20, 0.0, rng).edge_count() == 0);
  REQUIRE(netform::erdos_renyi(20, 1.0, rng).edge_count() == 190);
  REQUIRE_THROWS_AS(netform::erdos_renyi(5, 1.5, rng), std::invalid_argument);
}

TEST_CASE("erdos-renyi edge count concentrates around p * C(n,2)") {
  Rng rng(7);
  const Graph g = netform::erdos_renyi(200, 0.1, rng);
  // Binomial(19900, 0.1): mean 1990, sd ~ 42.3; allow 4 sigma.
  REQUIRE(std::fabs(static_cast<double>(g.edge_count()) - 1990.0) < 170.0);
}

TEST_CASE("erdos-renyi is reproducible per seed") {
  Rng a(55), b(55), c(56);
  const Graph g1 = netform::erdos_renyi(60, 0.1, a);
  const Graph g2 = netform::erdos_renyi(60, 0.1, b);
  const Graph g3 = netform::erdos_renyi(60, 0.1, c);
  REQUIRE(g1 == g2);
  REQUIRE_FALSE(g1 == g3);
}

TEST_CASE("sbm splits blocks evenly and separates densities") {
  Rng rng(3);
  const auto seeded = netform::stochastic_block_model(50, 0.5, 0.1, 2, rng);
  REQUIRE(seeded.block_labels.size() == 50);
  int first_block = 0;
  for (int l : seeded.block_labels) first_block += (l == 0) ? 1 : 0;
  REQUIRE(first_block == 25);
  std::size_t within = 0, between = 0;
  for (const auto& e : seeded.graph.edges()) {
    if (seeded.block_labels[static_cast<std::size_t>(e.first)] ==
        seeded.block_labels[static_cast<std::size_t>(e.second)])
      ++within;
    else
      ++between;
  }
  // Within: Binomial(600, 0.5) -> 300 +- 4 * 12.2; between: Binomial(625, 0.1)
  // -> 62.5 +- 4 * 7.5.
  REQUIRE(std::fabs(static_cast<double>(within) - 300.0) < 49.0);
  REQUIRE(std::fabs(static_cast<double>(between) - 62.5) < 30.0);
}

TEST_CASE("sbm with uneven sizes gives the extra node to early blocks") {
  Rng rng(9);
  const auto seeded = netform::stochastic_block_model(7, 1.0, 0.0, 3, rng);
  REQUIRE(seeded.block_labels == std::vector<int>{0, 0, 0, 1, 1, 2, 2});
}

TEST_CASE("watts-strogatz with beta 0 is exactly the ring lattice") {
  Rng rng(10);
  REQUIRE(netform::watts_strogatz(30, 4, 0.0, rng) == netform::ring_lattice(30, 4));
}

TEST_CASE("watts-strogatz preserves edge count and keeps sources attached") {
  Rng rng(17);
  const Graph g = netform::watts_strogatz(50, 4, 1.0, rng);
  REQUIRE(g.edge_count() == 100);
  for (int u = 0; u < 50; ++u) REQUIRE(g.degree(u) >= 2);
  // Full rewiring should break the pure lattice.
  REQUIRE_FALSE(g == netform::ring_lattice(50, 4));
}

TEST_CASE("barabasi-albert edge budget and connectivity") {
  Rng rng(21);
  const Graph g = netform::barabasi_albert(50, 2, rng);
  REQUIRE(g.edge_count() == 96);  // (n - m) arrivals with m edges each
  REQUIRE(netform::component_sizes(g).front() == 50);

  Rng rng2(22);
  const Graph tree = netform::barabasi_albert(2000, 1, rng2);
  REQUIRE(tree.edge_count() == 1999);
  REQUIRE(netform::component_sizes(tree).front() == 2000);
  REQUIRE_THROWS_AS(netform::barabasi_albert(3, 3, rng2), std::invalid_argument);
}

TEST_CASE("barabasi-albert prefers high-degree targets") {
  Rng rng(5);
  const Graph g = netform::barabasi_albert(500, 1, rng);
  // The earliest nodes should accumulate far more than the mean degree.
  std::size_t max_degree = 0;
  for (int u = 0; u < 500; ++u) max_degree = std::max(max_degree, g.degree(u));
  REQUIRE(max_degree >= 20);
}

TEST_CASE("make_seed_graph dispatches on kind") {
  Rng rng(2);
  netform::SeedSpec spec;
  spec.kind = netform::SeedSpec::Kind::empty;
  spec.n = 12;
  REQUIRE(netform::make_seed_graph(spec, rng).graph.edge_count() == 0);
  REQUIRE(netform::make_seed_graph(spec, rng).graph.node_count() == 12);

  spec.kind = netform::SeedSpec::Kind::sbm;
  spec.n = 10;
  const auto sbm = netform::make_seed_graph(spec, rng);
  REQUIRE(sbm.block_labels.size() == 10);

  spec.kind = netform::SeedSpec::Kind::ring_lattice;
  spec.k = 4;
  REQUIRE(netform::make_seed_graph(spec, rng).graph.edge_count() == 20);
  REQUIRE(netform::make_seed_graph(spec, rng).block_labels.empty());
}

TEST_CASE("default attribute schema carries the expected vocabulary") {
  const auto schema = netform::AttributeSchema::defaults();
  REQUIRE(schema.features.size() == 3);
  REQUIRE(schema.features[0].name == "hobby");
  REQUIRE(schema.features[1].name == "favorite_color");
  REQUIRE(schema.features[2].name == "location");
  const auto with_lucky = netform::AttributeSchema::defaults(true);
  REQUIRE(with_lucky.features.size() == 4);
  REQUIRE(with_lucky.features[3].name == "lucky_number");
  REQUIRE(with_lucky.features[3].values.size() == 10);
}

TEST_CASE("generated attributes draw uniformly from the vocabulary") {
  Rng rng(77);
  const auto table =
      netform::generate_attributes(300, netform::AttributeSchema::defaults(), rng);
  REQUIRE(table.node_count() == 300);
  REQUIRE(table.feature_names ==
          std::vector<std::string>{"hobby", "favorite_color", "location"});
  std::map<std::string, int> hobby_counts;
  for (const auto& row : table.rows) {
    REQUIRE(row.size() == 3);
    ++hobby_counts[row[0]];
  }
  // Multinomial(300, 1/3): mean 100, sd ~ 8.2; allow 4 sigma.
  for (const auto& [value, count] : hobby_counts) {
    REQUIRE(std::fabs(count - 100.0) < 33.0);
  }
  REQUIRE(hobby_counts.size() == 3);
}

TEST_CASE("similarity counts equal feature values") {
  netform::AttributeTable t;
  t.feature_names = {"hobby", "favorite_color"};
  t.rows = {{"hiking", "red"}, {"hiking", "blue"}, {"reading", "red"}};
  REQUIRE(t.similarity(0, 1) == 1);
  REQUIRE(t.similarity(0, 2) == 1);
  REQUIRE(t.similarity(1, 2) == 0);
  REQUIRE(t.similarity(0, 0) == 2);
  REQUIRE(t.feature_index("favorite_color") == 1);
  REQUIRE(t.feature_index("missing") == -1);
}
