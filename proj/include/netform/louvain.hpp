#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "netform/graph.hpp"
#include "netform/rng.hpp"

namespace netform {

/// Weight assigned to an existing edge {u, v}; must be non-negative.
using EdgeWeightFn = std::function<double(NodeId, NodeId)>;

inline EdgeWeightFn unit_weights() {
  return [](NodeId, NodeId) { return 1.0; };
}

struct ModularityResult {
  std::vector<int> community;  // dense labels 0..C-1, renumbered by first use
  double q = 0.0;              // weighted modularity of `community`
  double resolution = 1.0;
};

/// Weighted modularity Q = sum_c [ L_c / W - r * (k_c / (2W))^2 ] where W is
/// the total edge weight, L_c the intra-community weight, and k_c the total
/// weighted degree of community c.  Graphs with zero total weight get Q = 0.
inline double weighted_modularity(const Graph& g, const EdgeWeightFn& weight,
                                  const std::vector<int>& community,
                                  double resolution = 1.0) {
  if (community.size() != g.node_count())
    throw std::invalid_argument("modularity: community size mismatch");
  double total = 0.0;
  std::unordered_map<int, double> intra, strength;
  for (const Edge& e : g.edges()) {
    const double w = weight(e.first, e.second);
    if (w < 0.0) throw std::invalid_argument("modularity: negative edge weight");
    total += w;
    const int cu = community[static_cast<std::size_t>(e.first)];
    const int cv = community[static_cast<std::size_t>(e.second)];
    strength[cu] += w;
    strength[cv] += w;
    if (cu == cv) intra[cu] += w;
  }
  if (total <= 0.0) return 0.0;
  double q = 0.0;
  for (const auto& [c, k] : strength) {
    const double l = intra.count(c) ? intra.at(c) : 0.0;
    const double frac = k / (2.0 * total);
    q += l / total - resolution * frac * frac;
  }
  return q;
}

namespace louvain_detail {

/// Weighted graph in adjacency-list form used between aggregation levels.
struct WeightedGraph {
  // adjacency[u] -> (v, w); self-loops appear once with their full weight.
  std::vector<std::vector<std::pair<int, double>>> adjacency;
  double total_weight = 0.0;  // sum of edge weights, self-loops included once

  std::size_t size() const { return adjacency.size(); }
};

/// One pass of local moving.  Returns true if any node changed community.
inline bool local_moving(const WeightedGraph& g, std::vector<int>& community,
                         Rng& rng) {
  const std::size_t n = g.size();
  const double two_w = 2.0 * g.total_weight;
  // Weighted degree (self-loops count twice) and community totals.
  std::vector<double> strength(n, 0.0), self_loop(n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (const auto& [v, w] : g.adjacency[u]) {
      if (static_cast<std::size_t>(v) == u) {
        strength[u] += 2.0 * w;
        self_loop[u] = w;
      } else {
        strength[u] += w;
      }
    }
  std::vector<double> community_strength(n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    community_strength[static_cast<std::size_t>(community[u])] += strength[u];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(order);

  bool moved_any = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t u : order) {
      const int home = community[u];
      // Weight from u to each adjacent community (ordered for determinism).
      std::map<int, double> links;
      links[home] += 0.0;
      for (const auto& [v, w] : g.adjacency[u])
        if (static_cast<std::size_t>(v) != u)
          links[community[static_cast<std::size_t>(v)]] += w;
      community_strength[static_cast<std::size_t>(home)] -= strength[u];
      // Gain of joining community c (relative to staying isolated):
      //   k_{u,c} / W - r * Sigma_c * k_u / (2 W^2); shared factors dropped.
      auto gain_of = [&](int c, double k_uc) {
        return k_uc -
               community_strength[static_cast<std::size_t>(c)] * strength[u] / two_w;
      };
      int best = home;
      double best_gain = gain_of(home, links.at(home));
      for (const auto& [c, k_uc] : links) {
        if (c == home) continue;
        const double gain = gain_of(c, k_uc);
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best = c;
        }
      }
      community_strength[static_cast<std::size_t>(best)] += strength[u];
      if (best != home) {
        community[u] = best;
        improved = true;
        moved_any = true;
      }
    }
  }
  return moved_any;
}

/// Collapse communities into single nodes, summing parallel edge weights.
inline WeightedGraph aggregate(const WeightedGraph& g, std::vector<int>& community) {
  // Renumber communities densely in order of first appearance.
  std::unordered_map<int, int> dense;
  for (int& c : community) {
    auto [it, inserted] = dense.emplace(c, static_cast<int>(dense.size()));
    c = it->second;
  }
  WeightedGraph out;
  out.adjacency.resize(dense.size());
  out.total_weight = g.total_weight;
  std::vector<std::unordered_map<int, double>> merged(dense.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    const int cu = community[u];
    for (const auto& [v, w] : g.adjacency[u]) {
      const int cv = community[static_cast<std::size_t>(v)];
      if (static_cast<std::size_t>(v) < u) continue;  // visit each edge once
      if (static_cast<std::size_t>(v) == u) {
        merged[static_cast<std::size_t>(cu)][cu] += w;  // existing self-loop
      } else if (cu == cv) {
        merged[static_cast<std::size_t>(cu)][cu] += w;  // intra edge becomes loop
      } else {
        merged[static_cast<std::size_t>(cu)][cv] += w;
        merged[static_cast<std::size_t>(cv)][cu] += w;
      }
    }
  }
  for (std::size_t c = 0; c < merged.size(); ++c)
    for (const auto& [d, w] : merged[c])
      out.adjacency[c].emplace_back(d, w);
  return out;
}

}  // namespace louvain_detail

/// Louvain community detection on `g` with arbitrary non-negative edge
/// weights and a resolution parameter.
///
/// Node visiting order inside each level is drawn from `rng`, so distinct
/// seeds give independent runs of the usual randomized heuristic.  The
/// returned modularity is recomputed from the partition with
/// weighted_modularity (never carried over from the internal gains).
inline ModularityResult louvain_communities(const Graph& g, const EdgeWeightFn& weight,
                                            double resolution, Rng& rng) {
  if (resolution <= 0.0)
    throw std::invalid_argument("louvain: resolution must be positive");
  const std::size_t n = g.node_count();
  ModularityResult result;
  result.resolution = resolution;
  result.community.resize(n);
  std::iota(result.community.begin(), result.community.end(), 0);

  louvain_detail::WeightedGraph level;
  level.adjacency.resize(n);
  for (const Edge& e : g.edges()) {
    const double w = weight(e.first, e.second);
    if (w < 0.0) throw std::invalid_argument("louvain: negative edge weight");
    if (w == 0.0) continue;
    level.adjacency[static_cast<std::size_t>(e.first)].emplace_back(e.second, w);
    level.adjacency[static_cast<std::size_t>(e.second)].emplace_back(e.first, w);
    level.total_weight += w;
  }
  if (level.total_weight <= 0.0) {
    // Nothing to optimize; singleton communities and Q = 0.
    result.q = 0.0;
    return result;
  }

  std::vector<int> mapping(n);  // original node -> current level node
  std::iota(mapping.begin(), mapping.end(), 0);

  for (int depth = 0; depth < 64; ++depth) {
    std::vector<int> community(level.size());
    std::iota(community.begin(), community.end(), 0);
    // Resolution r only enters the local gain as k_uc - r * Sigma * k_u / 2W;
    // shrinking the advertised total weight by r realizes exactly that.
    louvain_detail::WeightedGraph scaled = level;
    if (resolution != 1.0) scaled.total_weight = level.total_weight / resolution;
    const bool moved = louvain_detail::local_moving(scaled, community, rng);
    if (!moved) break;
    level = louvain_detail::aggregate(level, community);
    for (std::size_t i = 0; i < n; ++i)
      mapping[i] = community[static_cast<std::size_t>(mapping[i])];
    if (level.size() == community.size()) break;  // no shrinkage
  }

  // Dense labels in order of first appearance over node ids.
  std::unordered_map<int, int> dense;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = dense.emplace(mapping[i], static_cast<int>(dense.size()));
    result.community[i] = it->second;
  }
  result.q = weighted_modularity(g, weight, result.community, resolution);
  return result;
}

/// Independent Louvain runs with sub-streams of `rng`; run i uses stream
/// "louvain-run/i".
inline std::vector<ModularityResult> louvain_runs(const Graph& g,
                                                  const EdgeWeightFn& weight,
                                                  double resolution, int runs,
                                                  const Rng& rng) {
  std::vector<ModularityResult> out;
  out.reserve(static_cast<std::size_t>(runs));
  for (int i = 0; i < runs; ++i) {
    Rng stream = rng.stream("louvain-run", static_cast<std::uint64_t>(i));
    out.push_back(louvain_communities(g, weight, resolution, stream));
  }
  return out;
}

}  // namespace netform
