#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "netform/metrics.hpp"
#include "netform/netgen.hpp"

using Catch::Approx;
using netform::Graph;
using netform::Rng;

namespace {

/// Independent transitivity oracle: enumerate all node triples.
double brute_transitivity(const Graph& g) {
  const int n = static_cast<int>(g.node_count());
  long long triangles = 0, triples = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const int links = (g.has_edge(a, b) ? 1 : 0) + (g.has_edge(a, c) ? 1 : 0) +
                          (g.has_edge(b, c) ? 1 : 0);
        if (links == 3) ++triangles;
        // Each triple with j >= 2 links contains (j choose 2) length-2 paths.
        if (links == 2) ++triples;
        if (links == 3) triples += 3;
      }
  if (triples == 0) return 0.0;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

/// Independent mean-distance oracle: Floyd-Warshall on the largest component.
double brute_path_length(const Graph& g) {
  const int n = static_cast<int>(g.node_count());
  const double inf = 1e18;
  std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), inf));
  for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  for (const auto& e : g.edges()) {
    d[static_cast<std::size_t>(e.first)][static_cast<std::size_t>(e.second)] = 1;
    d[static_cast<std::size_t>(e.second)][static_cast<std::size_t>(e.first)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                     d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                         d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
  const auto comps = netform::connected_components(g);
  const std::vector<int>* largest = &comps.front();
  for (const auto& c : comps)
    if (c.size() > largest->size()) largest = &c;
  if (largest->size() < 2) return 0.0;
  double total = 0.0;
  int pairs = 0;
  for (int a : *largest)
    for (int b : *largest)
      if (b > a) {
        total += d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        ++pairs;
      }
  return total / pairs;
}

Graph k4_minus_edge() {
  Graph g(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
  g.remove_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("transitivity of K4 minus an edge is 3/4") {
  const Graph g = k4_minus_edge();
  REQUIRE(netform::transitivity(g) == Approx(0.75).margin(1e-12));
  REQUIRE(brute_transitivity(g) == Approx(0.75).margin(1e-12));
}

TEST_CASE("transitivity matches the brute-force oracle on a random graph") {
  Rng rng(14);
  const Graph g = netform::erdos_renyi(40, 0.15, rng);
  REQUIRE(netform::transitivity(g) == Approx(brute_transitivity(g)).margin(1e-12));
}

TEST_CASE("transitivity of triangle-free and empty graphs is zero") {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  REQUIRE(netform::transitivity(path) == 0.0);
  REQUIRE(netform::transitivity(Graph(5)) == 0.0);
}

TEST_CASE("closing a 2-path into a triangle moves transitivity 0 -> 1") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  netform::TransitivityTracker tracker(g);
  const double before = tracker.transitivity();
  tracker.register_add(g, 0, 2);
  g.add_edge(0, 2);
  REQUIRE(before == 0.0);
  REQUIRE(tracker.transitivity() == Approx(1.0).margin(1e-12));
  REQUIRE(tracker.transitivity() - before == Approx(1.0).margin(1e-12));
}

TEST_CASE("incremental tracker agrees with recomputation along a growth path") {
  Rng rng(33);
  Graph g(30);
  netform::TransitivityTracker tracker(g);
  for (int step = 0; step < 120; ++step) {
    const int u = static_cast<int>(rng.uniform_below(30));
    const int v = static_cast<int>(rng.uniform_below(30));
    if (u == v || g.has_edge(u, v)) continue;
    tracker.register_add(g, u, v);
    g.add_edge(u, v);
    REQUIRE(tracker.transitivity() ==
            Approx(netform::transitivity(g)).margin(1e-10));
  }
}

TEST_CASE("assortativity of the complete bipartite K_{2,2} is -1") {
  Graph g(4);
  for (int a : {0, 1})
    for (int b : {2, 3}) g.add_edge(a, b);
  const std::vector<int> part{0, 0, 1, 1};
  REQUIRE(netform::categorical_assortativity(g, part) == Approx(-1.0).margin(1e-12));
}

TEST_CASE("assortativity of label-aligned components is +1") {
  Graph g(6);
  for (int base : {0, 3})
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) g.add_edge(base + a, base + b);
  const std::vector<int> labels{0, 0, 0, 1, 1, 1};
  REQUIRE(netform::categorical_assortativity(g, labels) == Approx(1.0).margin(1e-12));
}

TEST_CASE("assortativity is NaN when only one category exists") {
  Graph g(3);
  g.add_edge(0, 1);
  REQUIRE(std::isnan(netform::categorical_assortativity(g, {7, 7, 7})));
  REQUIRE(std::isnan(netform::categorical_assortativity(Graph(2), {0, 1})));
}

TEST_CASE("random labels put assortativity inside the Monte Carlo null band") {
  Rng rng(100);
  const Graph g = netform::erdos_renyi(60, 0.15, rng);
  std::vector<int> labels(60);
  for (auto& l : labels) l = static_cast<int>(rng.uniform_below(3));
  const double observed = netform::categorical_assortativity(g, labels);
  // Null distribution by label shuffling.
  std::vector<double> null_r;
  std::vector<int> shuffled = labels;
  for (int rep = 0; rep < 200; ++rep) {
    rng.shuffle(shuffled);
    null_r.push_back(netform::categorical_assortativity(g, shuffled));
  }
  double mean = 0.0;
  for (double v : null_r) mean += v;
  mean /= static_cast<double>(null_r.size());
  double var = 0.0;
  for (double v : null_r) var += (v - mean) * (v - mean);
  var /= static_cast<double>(null_r.size() - 1);
  REQUIRE(std::fabs(observed - mean) < 4.0 * std::sqrt(var));
}

TEST_CASE("attribute assortativity matches the dense-label computation") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.add_edge(1, 2);
  const std::vector<std::string> colors{"red", "red", "blue", "blue"};
  const std::vector<int> labels{0, 0, 1, 1};
  REQUIRE(netform::attribute_assortativity(g, colors) ==
          Approx(netform::categorical_assortativity(g, labels)).margin(1e-15));
}

TEST_CASE("within-group fraction counts same-label endpoints") {
  const std::vector<netform::Edge> edges{{0, 1}, {0, 2}, {1, 3}};
  const std::vector<int> labels{0, 0, 1, 1};
  REQUIRE(netform::within_group_fraction(edges, labels) == Approx(1.0 / 3.0));
  REQUIRE(std::isnan(netform::within_group_fraction({}, labels)));
}

TEST_CASE("power-law fit matches the closed form on a constant tail") {
  const std::vector<double> x{1, 1, 1, 1};
  const auto fit = netform::power_law_fit(x, 1.0);
  // gamma = 1 + 1/ln 2, se = (gamma - 1)/2.
  REQUIRE(fit.gamma == Approx(2.442695).margin(1e-4));
  REQUIRE(fit.std_err == Approx(0.721348).margin(1e-4));
  REQUIRE(fit.n_tail == 4);
}

TEST_CASE("power-law fit ignores observations below x_min") {
  const std::vector<double> x{0, 0, 1, 1, 1, 1, 0.5};
  const auto fit = netform::power_law_fit(x, 1.0);
  REQUIRE(fit.n_tail == 4);
  REQUIRE(fit.gamma == Approx(2.442695).margin(1e-4));
  REQUIRE_THROWS_AS(netform::power_law_fit({0.0, 0.5}, 1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(netform::power_law_fit(x, 0.5), std::invalid_argument);
}

TEST_CASE("small-world metrics of the (10,4) ring lattice") {
  const Graph g = netform::ring_lattice(10, 4);
  const auto sw = netform::small_world_metrics(g);
  REQUIRE(sw.clustering == Approx(0.5).margin(1e-12));
  REQUIRE(sw.path_length == Approx(5.0 / 3.0).margin(1e-12));
  REQUIRE(sw.path_length == Approx(brute_path_length(g)).margin(1e-12));
}

TEST_CASE("path length uses the largest component only") {
  Graph g(7);
  // Component {0,1,2} is a triangle; component {3,4,5,6} is a path.
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  // Largest component is the 4-path: distances 1,1,1,2,2,3 -> mean 10/6.
  REQUIRE(netform::characteristic_path_length(g) == Approx(10.0 / 6.0).margin(1e-12));
  REQUIRE(netform::characteristic_path_length(g) ==
          Approx(brute_path_length(g)).margin(1e-12));
  // Clustering averages over all nodes, isolated-path nodes contributing 0.
  REQUIRE(netform::mean_local_clustering(g) == Approx(3.0 / 7.0).margin(1e-12));
}

TEST_CASE("path length degenerates to zero without any pair") {
  REQUIRE(netform::characteristic_path_length(Graph(4)) == 0.0);
  REQUIRE(netform::characteristic_path_length(Graph(0)) == 0.0);
}

TEST_CASE("top-k curve on a hand case with distinct scores") {
  // Three alternatives, chosen is the best one: in the top for every k.
  netform::ScoredDecision best{{5.0, 1.0, 3.0}, 0};
  // Chosen is the worst one: only in the top once k covers all three.
  netform::ScoredDecision worst{{5.0, 1.0, 3.0}, 1};
  const auto curve = netform::topk_curve({best, worst});
  REQUIRE(curve.percent.size() == 100);
  // q = 33%: k = ceil(0.33 * 3) = 1 slot -> credits 1 and 0.
  REQUIRE(curve.empirical[32] == Approx(0.5));
  REQUIRE(curve.null_line[32] == Approx(1.0 / 3.0));
  // q = 100%: everything is in the top.
  REQUIRE(curve.empirical[99] == Approx(1.0));
  REQUIRE(curve.null_line[99] == Approx(1.0));
}

TEST_CASE("top-k curve resolves ties fractionally") {
  // Chosen shares the top score with one other alternative: with one slot
  // the tie is split half/half.
  netform::ScoredDecision tied{{4.0, 4.0, 1.0}, 0};
  const auto curve = netform::topk_curve({tied});
  REQUIRE(curve.empirical[0] == Approx(0.5));  // q=1% -> k=1
  REQUIRE(curve.null_line[0] == Approx(1.0 / 3.0));
  // q=67% -> k=ceil(2.01)=3? ceil(0.67*3)=ceil(2.01)=3 covers everything.
  REQUIRE(curve.empirical[66] == Approx(1.0));
}

TEST_CASE("top-k curve is monotone in the percentile") {
  Rng rng(5);
  std::vector<netform::ScoredDecision> decisions;
  for (int i = 0; i < 50; ++i) {
    netform::ScoredDecision d;
    for (int a = 0; a < 10; ++a)
      d.scores.push_back(static_cast<double>(rng.uniform_below(4)));
    d.chosen = static_cast<int>(rng.uniform_below(10));
    decisions.push_back(d);
  }
  const auto curve = netform::topk_curve(decisions);
  for (std::size_t i = 1; i < curve.empirical.size(); ++i) {
    REQUIRE(curve.empirical[i] >= curve.empirical[i - 1] - 1e-12);
    REQUIRE(curve.null_line[i] >= curve.null_line[i - 1] - 1e-12);
  }
}

TEST_CASE("uniform choices track the top-k null line") {
  Rng rng(31);
  std::vector<netform::ScoredDecision> decisions;
  const int n_dec = 4000;
  for (int i = 0; i < n_dec; ++i) {
    netform::ScoredDecision d;
    for (int a = 0; a < 15; ++a)
      d.scores.push_back(static_cast<double>(rng.uniform_below(5)));
    d.chosen = static_cast<int>(rng.uniform_below(15));
    decisions.push_back(d);
  }
  const auto curve = netform::topk_curve(decisions);
  for (int q : {4, 19, 46, 73, 99}) {
    const double p0 = curve.null_line[static_cast<std::size_t>(q)];
    const double sigma = std::sqrt(p0 * (1.0 - p0) / n_dec);
    REQUIRE(std::fabs(curve.empirical[static_cast<std::size_t>(q)] - p0) <=
            4.0 * sigma + 1e-9);
  }
}
