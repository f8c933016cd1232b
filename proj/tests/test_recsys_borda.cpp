#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <vector>

#include "netform/borda.hpp"
#include "netform/netgen.hpp"
#include "netform/recsys.hpp"

using Catch::Approx;
using netform::AttributeTable;
using netform::CriterionRanking;
using netform::Graph;
using netform::NodeId;
using netform::Rng;

namespace {

/// Two disjoint cliques: every edge lives inside a clique, every
/// cross-clique pair shares no neighbors.
Graph two_cliques(int size) {
  Graph g(2 * static_cast<std::size_t>(size));
  for (int block = 0; block < 2; ++block)
    for (int u = 0; u < size; ++u)
      for (int v = u + 1; v < size; ++v)
        g.add_edge(block * size + u, block * size + v);
  return g;
}

}  // namespace

TEST_CASE("pair features on a hand-checked path") {
  // 0-2, 1-2, 2-3: the pair (0,1) shares the single neighbor 2 of degree 3.
  Graph g(4);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const auto f = netform::pair_features(g, nullptr, 0, 1);
  REQUIRE(f.common == 1.0);
  REQUIRE(f.adamic_adar == Approx(1.0 / std::log(3.0)).margin(1e-5));
  REQUIRE(f.pa_score == 1.0);
  REQUIRE(f.jaccard == Approx(1.0));  // union is the single shared neighbor
  REQUIRE(f.similarity == 0.0);       // no attributes supplied

  const auto far = netform::pair_features(g, nullptr, 0, 3);
  REQUIRE(far.common == 1.0);
  REQUIRE(far.jaccard == Approx(1.0));
  const auto hub = netform::pair_features(g, nullptr, 0, 2);
  REQUIRE(hub.common == 0.0);
  REQUIRE(hub.adamic_adar == 0.0);
  REQUIRE(hub.pa_score == 3.0);
}

TEST_CASE("pair features pick up attribute similarity") {
  Graph g(2);
  AttributeTable attrs;
  attrs.feature_names = {"hobby", "favorite_color"};
  attrs.rows = {{"hiking", "red"}, {"hiking", "blue"}};
  const auto f = netform::pair_features(g, &attrs, 0, 1);
  REQUIRE(f.similarity == 1.0);
}

TEST_CASE("training balances positive and negative classes") {
  Rng rng(5);
  const Graph g = netform::erdos_renyi(60, 0.1, rng);
  Rng train_rng(6);
  const auto model = netform::train_recsys(g, nullptr, 50, train_rng);
  REQUIRE(model.n_pairs == 100);
  REQUIRE(model.train_auc >= 0.5);
  REQUIRE(model.train_auc <= 1.0);
}

TEST_CASE("a separable configuration reaches perfect training auc") {
  // Within-clique edges all have many common neighbors; sampled non-edges
  // are all cross-clique pairs with none.  The classes separate perfectly;
  // the fit saturates with finite coefficients and ranks them cleanly.
  const Graph g = two_cliques(8);
  Rng rng(7);
  const auto model = netform::train_recsys(g, nullptr, 40, rng);
  REQUIRE(model.train_auc == Approx(1.0).margin(1e-12));
  for (double c : model.psi) REQUIRE(std::isfinite(c));
}

TEST_CASE("training requires edges and usable pairs") {
  Graph empty(5);
  Rng rng(8);
  REQUIRE_THROWS_AS(netform::train_recsys(empty, nullptr, 10, rng),
                    netform::DataError);
  // A complete graph has no non-edges to sample.
  const Graph k4 = two_cliques(2);  // two disjoint K2s: non-edges exist
  Graph complete(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) complete.add_edge(u, v);
  REQUIRE_THROWS_AS(netform::train_recsys(complete, nullptr, 10, rng),
                    netform::DataError);
  (void)k4;
}

TEST_CASE("ranking orders by score and breaks ties by ascending id") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  netform::RecsysModel model;
  model.psi = {0.0, 0.0, 0.0, 0.0, 0.0, 0.0};  // every score is exactly 0.5
  const std::vector<NodeId> pool{5, 2, 4, 3};
  const auto top = netform::recsys_rank(model, g, nullptr, 0, pool, 3);
  REQUIRE(top == std::vector<NodeId>{2, 3, 4});

  // Reward common neighbors: candidates 2 and 3 (via node 1) outrank 4, 5.
  model.psi = {0.0, 0.0, 0.0, 2.0, 0.0, 0.0};
  const auto informed = netform::recsys_rank(model, g, nullptr, 0, pool, 4);
  REQUIRE(std::set<NodeId>(informed.begin(), informed.begin() + 2) ==
          std::set<NodeId>{2, 3});
  REQUIRE(informed.size() == 4);

  // Requesting more than the pool returns the whole pool.
  const auto all = netform::recsys_rank(model, g, nullptr, 0, pool, 99);
  REQUIRE(all.size() == 4);
}

TEST_CASE("borda vectors score 4 minus rank in (PA, TC, H) order") {
  // Homophily first, triadic closure second, preferential attachment last.
  CriterionRanking r;
  r.similarity = 1;
  r.common = 2;
  r.degree = 3;
  const auto v = netform::borda_vector(r);
  REQUIRE(v == std::array<double, 3>{1.0, 2.0, 3.0});
}

TEST_CASE("invalid rankings are rejected") {
  CriterionRanking dup;
  dup.degree = 1;
  dup.common = 1;
  dup.similarity = 3;
  REQUIRE_FALSE(dup.is_permutation());
  REQUIRE_THROWS_AS(netform::borda_vector(dup), netform::DataError);
  CriterionRanking range;
  range.degree = 0;
  range.common = 2;
  range.similarity = 3;
  REQUIRE_THROWS_AS(netform::borda_vector(range), netform::DataError);
  REQUIRE_THROWS_AS(netform::borda_group({}), netform::DataError);
}

TEST_CASE("group means always sum to six") {
  std::vector<CriterionRanking> group;
  CriterionRanking a;
  a.degree = 3;
  a.common = 2;
  a.similarity = 1;
  CriterionRanking b;
  b.degree = 1;
  b.common = 2;
  b.similarity = 3;
  CriterionRanking c;
  c.degree = 2;
  c.common = 1;
  c.similarity = 3;
  group = {a, b, c};
  const auto summary = netform::borda_group(group);
  REQUIRE(summary.respondents == 3);
  REQUIRE(summary.mean[0] + summary.mean[1] + summary.mean[2] == Approx(6.0));
  REQUIRE(summary.mean[0] == Approx(2.0));  // PA ranks 3,1,2 -> scores 1,3,2
}

TEST_CASE("alignment is the spearman correlation of the profiles") {
  const std::array<double, 3> order{1.0, 2.0, 3.0};
  const std::array<double, 3> reversed{3.0, 2.0, 1.0};
  REQUIRE(netform::borda_alignment(order, order) == Approx(1.0));
  REQUIRE(netform::borda_alignment(order, reversed) == Approx(-1.0));
}
