#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "netform/graph.hpp"
#include "netform/stats.hpp"

namespace netform {

/// Triangle count (T) and connected-triple count (P) of a graph; the
/// transitivity is 3T / P.  Kept as a pair so that edge insertions can be
/// applied incrementally: adding edge {u, v} raises T by |N(u) ∩ N(v)| and
/// P by deg(u) + deg(v) (degrees before insertion).
class TransitivityTracker {
public:
  TransitivityTracker() = default;

  explicit TransitivityTracker(const Graph& g) {
    for (NodeId u = 0; u < static_cast<NodeId>(g.node_count()); ++u) {
      const double d = static_cast<double>(g.degree(u));
      paths_ += d * (d - 1.0) / 2.0;
    }
    double closed = 0.0;
    for (const Edge& e : g.edges())
      closed += static_cast<double>(g.common_neighbor_count(e.first, e.second));
    triangles_ = closed / 3.0;
  }

  /// Account for edge {u, v}; call before g.add_edge(u, v).
  void register_add(const Graph& g, NodeId u, NodeId v) {
    triangles_ += static_cast<double>(g.common_neighbor_count(u, v));
    paths_ += static_cast<double>(g.degree(u) + g.degree(v));
  }

  double transitivity() const {
    return paths_ > 0.0 ? 3.0 * triangles_ / paths_ : 0.0;
  }

  double triangles() const { return triangles_; }
  double connected_triples() const { return paths_; }

private:
  double triangles_ = 0.0;
  double paths_ = 0.0;
};

/// Global transitivity 3T / P; 0 for graphs with no connected triple.
inline double transitivity(const Graph& g) {
  return TransitivityTracker(g).transitivity();
}

/// Mean local clustering coefficient (degree < 2 contributes 0).
inline double mean_local_clustering(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  const std::vector<double> cc = local_clustering(g);
  double sum = 0.0;
  for (double c : cc) sum += c;
  return sum / static_cast<double>(cc.size());
}

/// Characteristic path length: mean pairwise BFS distance within the
/// largest connected component (ties broken toward the component containing
/// the smallest node id).  Graphs whose largest component is a single node
/// get L = 0.
inline double characteristic_path_length(const Graph& g) {
  const auto components = connected_components(g);
  if (components.empty()) return 0.0;
  const std::vector<NodeId>* largest = &components.front();
  for (const auto& c : components)
    if (c.size() > largest->size()) largest = &c;
  const std::size_t n = largest->size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (NodeId s : *largest) {
    const std::vector<int> dist = bfs_distances(g, s);
    for (NodeId t : *largest)
      if (t > s) total += static_cast<double>(dist[static_cast<std::size_t>(t)]);
  }
  return total / (static_cast<double>(n) * (n - 1.0) / 2.0);
}

struct SmallWorldMetrics {
  double path_length = 0.0;  // L
  double clustering = 0.0;   // C
};

inline SmallWorldMetrics small_world_metrics(const Graph& g) {
  return {characteristic_path_length(g), mean_local_clustering(g)};
}

/// Newman's attribute assortativity for a categorical node label.
/// With M the edge mixing matrix (each undirected edge counted once in each
/// direction) and a_k its marginals, R = (tr M - sum a_k^2) / (1 - sum a_k^2).
/// Returns NaN when every edge joins a single category pair that makes the
/// denominator vanish (all nodes effectively one category).
inline double categorical_assortativity(const Graph& g, const std::vector<int>& label) {
  if (label.size() != g.node_count())
    throw std::invalid_argument("assortativity: label size mismatch");
  if (g.edge_count() == 0)
    return std::numeric_limits<double>::quiet_NaN();
  std::map<int, int> dense;
  for (int l : label) dense.emplace(l, 0);
  int next = 0;
  for (auto& [value, index] : dense) index = next++;
  const std::size_t k = dense.size();
  std::vector<double> mix(k * k, 0.0);
  const double per_end = 1.0 / (2.0 * static_cast<double>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    const int a = dense[label[static_cast<std::size_t>(e.first)]];
    const int b = dense[label[static_cast<std::size_t>(e.second)]];
    mix[static_cast<std::size_t>(a) * k + static_cast<std::size_t>(b)] += per_end;
    mix[static_cast<std::size_t>(b) * k + static_cast<std::size_t>(a)] += per_end;
  }
  double trace = 0.0, squares = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    trace += mix[i * k + i];
    double row = 0.0;
    for (std::size_t j = 0; j < k; ++j) row += mix[i * k + j];
    squares += row * row;
  }
  const double denom = 1.0 - squares;
  if (denom == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (trace - squares) / denom;
}

/// Assortativity of a categorical attribute column by name.
inline double attribute_assortativity(const Graph& g,
                                      const std::vector<std::string>& values) {
  if (values.size() != g.node_count())
    throw std::invalid_argument("assortativity: value column size mismatch");
  std::map<std::string, int> dense;
  std::vector<int> label(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto [it, inserted] = dense.emplace(values[i], static_cast<int>(dense.size()));
    label[i] = it->second;
  }
  return categorical_assortativity(g, label);
}

/// Fraction of edges whose endpoints share a group label.
inline double within_group_fraction(const std::vector<Edge>& edges,
                                    const std::vector<int>& label) {
  if (edges.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::size_t within = 0;
  for (const Edge& e : edges)
    if (label.at(static_cast<std::size_t>(e.first)) ==
        label.at(static_cast<std::size_t>(e.second)))
      ++within;
  return static_cast<double>(within) / static_cast<double>(edges.size());
}

struct PowerLawFit {
  double gamma = 0.0;     // estimated exponent
  double std_err = 0.0;   // (gamma - 1) / sqrt(n_tail)
  double x_min = 1.0;
  std::size_t n_tail = 0;  // observations >= x_min
};

/// Discrete power-law exponent by the Clauset-Shalizi-Newman continuous
/// approximation: gamma = 1 + n_tail / sum ln(x_i / (x_min - 1/2)) over the
/// tail x_i >= x_min.  Zero-valued observations below x_min are ignored.
inline PowerLawFit power_law_fit(const std::vector<double>& samples, double x_min) {
  if (x_min < 1.0) throw std::invalid_argument("power_law_fit: x_min < 1");
  PowerLawFit fit;
  fit.x_min = x_min;
  double log_sum = 0.0;
  for (double x : samples) {
    if (x < x_min) continue;
    log_sum += std::log(x / (x_min - 0.5));
    ++fit.n_tail;
  }
  if (fit.n_tail == 0)
    throw std::invalid_argument("power_law_fit: no observations at or above x_min");
  if (log_sum <= 0.0)
    throw std::invalid_argument("power_law_fit: degenerate tail");
  fit.gamma = 1.0 + static_cast<double>(fit.n_tail) / log_sum;
  fit.std_err = (fit.gamma - 1.0) / std::sqrt(static_cast<double>(fit.n_tail));
  return fit;
}

/// One decision for rank-curve purposes: the scores of the presented
/// alternatives (in presentation order) and the chosen index.
struct ScoredDecision {
  std::vector<double> scores;
  int chosen = 0;
};

/// Empirical top-k% curve over a set of decisions, with the matching
/// uniform-choice null line.
///
/// For percentile q, each decision with A alternatives admits k =
/// ceil(q * A / 100) top slots.  The chosen alternative's credit uses
/// min-rank with fractional resolution of score ties: if r alternatives
/// score strictly higher than the chosen one and its score is shared by m
/// alternatives, the credit is clamp(k - r, 0, m) / m.  Under uniform
/// random choice the expected credit is exactly k / A, which the null line
/// reports (averaged over decisions).
struct TopKCurve {
  std::vector<int> percent;        // 1..100
  std::vector<double> empirical;   // mean credit per percentile
  std::vector<double> null_line;   // mean k/A per percentile
};

inline TopKCurve topk_curve(const std::vector<ScoredDecision>& decisions) {
  if (decisions.empty()) throw std::invalid_argument("topk_curve: no decisions");
  TopKCurve curve;
  for (int q = 1; q <= 100; ++q) curve.percent.push_back(q);
  curve.empirical.assign(100, 0.0);
  curve.null_line.assign(100, 0.0);
  for (const auto& d : decisions) {
    const std::size_t a = d.scores.size();
    if (a == 0) throw std::invalid_argument("topk_curve: decision without alternatives");
    if (d.chosen < 0 || static_cast<std::size_t>(d.chosen) >= a)
      throw std::invalid_argument("topk_curve: chosen index out of range");
    const double chosen_score = d.scores[static_cast<std::size_t>(d.chosen)];
    std::size_t higher = 0, tied = 0;
    for (double s : d.scores) {
      if (s > chosen_score) ++higher;
      else if (s == chosen_score) ++tied;
    }
    for (int q = 1; q <= 100; ++q) {
      const double k = std::ceil(static_cast<double>(q) * static_cast<double>(a) / 100.0);
      const double credit =
          std::clamp(k - static_cast<double>(higher), 0.0, static_cast<double>(tied)) /
          static_cast<double>(tied);
      curve.empirical[static_cast<std::size_t>(q - 1)] += credit;
      curve.null_line[static_cast<std::size_t>(q - 1)] += k / static_cast<double>(a);
    }
  }
  const double n = static_cast<double>(decisions.size());
  for (int q = 0; q < 100; ++q) {
    curve.empirical[static_cast<std::size_t>(q)] /= n;
    curve.null_line[static_cast<std::size_t>(q)] /= n;
  }
  return curve;
}

}  // namespace netform
