#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "netform/choice.hpp"
#include "netform/errors.hpp"
#include "netform/graph.hpp"
#include "netform/netgen.hpp"
#include "netform/rng.hpp"

namespace netform {

/// Link-prediction features of a node pair.
struct PairFeatures {
  double similarity = 0.0;   // shared attribute count (0 without attributes)
  double common = 0.0;       // common neighbor count
  double pa_score = 0.0;     // degree product
  double adamic_adar = 0.0;  // sum over common neighbors of 1/ln(degree)
  double jaccard = 0.0;      // |N(u) & N(v)| / |N(u) | N(v)|

  std::array<double, 5> as_array() const {
    return {similarity, common, pa_score, adamic_adar, jaccard};
  }
};

inline PairFeatures pair_features(const Graph& g, const AttributeTable* attrs,
                                  NodeId u, NodeId v) {
  PairFeatures f;
  if (attrs != nullptr && !attrs->empty()) f.similarity = attrs->similarity(u, v);
  const std::vector<NodeId> shared = g.common_neighbors(u, v);
  f.common = static_cast<double>(shared.size());
  f.pa_score = static_cast<double>(g.degree(u)) * static_cast<double>(g.degree(v));
  for (NodeId k : shared)
    // A common neighbor is adjacent to both endpoints, so its degree is at
    // least 2 and the logarithm is safely positive.
    f.adamic_adar += 1.0 / std::log(static_cast<double>(g.degree(k)));
  const std::size_t unions = g.degree(u) + g.degree(v) - shared.size();
  f.jaccard = unions > 0 ? f.common / static_cast<double>(unions) : 0.0;
  return f;
}

/// Logistic link predictor psi . (1, features).
struct RecsysModel {
  std::array<double, 6> psi{};  // intercept first, then PairFeatures order
  double train_auc = 0.0;
  bool ridge_fallback = false;   // quasi-separation forced a penalized fit
  std::size_t n_pairs = 0;       // training rows (both classes)
};

inline double recsys_score(const RecsysModel& model, const Graph& g,
                           const AttributeTable* attrs, NodeId u, NodeId v) {
  const std::array<double, 5> z = pair_features(g, attrs, u, v).as_array();
  double eta = model.psi[0];
  for (std::size_t i = 0; i < 5; ++i) eta += model.psi[i + 1] * z[i];
  return 1.0 / (1.0 + std::exp(-eta));
}

namespace recsys_detail {

/// Mann-Whitney AUC with average ranks for tied scores.
inline double rank_auc(const std::vector<double>& scores,
                       const std::vector<int>& labels) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] < scores[b];
  });
  std::vector<double> rank(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double shared = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = shared;
    i = j + 1;
  }
  double positive_rank_sum = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (labels[k] == 1) {
      positive_rank_sum += rank[k];
      ++n_pos;
    }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0)
    throw DataError("train_recsys: need both classes for AUC");
  return (positive_rank_sum - static_cast<double>(n_pos) * (n_pos + 1) / 2.0) /
         (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

/// Newton fit of the 6-parameter logistic model; lambda > 0 adds an L2
/// penalty (excluding nothing -- the intercept is penalized too, which is
/// acceptable for the fallback's stabilizing role).  Returns false if the
/// iteration failed to converge or diverged.
inline bool fit_logistic(const std::vector<std::array<double, 6>>& x,
                         const std::vector<int>& y, double lambda,
                         std::array<double, 6>& out) {
  Eigen::Matrix<double, 6, 1> psi = Eigen::Matrix<double, 6, 1>::Zero();
  for (int iter = 0; iter < 100; ++iter) {
    Eigen::Matrix<double, 6, 1> grad = -lambda * psi;
    Eigen::Matrix<double, 6, 6> hess =
        -lambda * Eigen::Matrix<double, 6, 6>::Identity();
    for (std::size_t r = 0; r < x.size(); ++r) {
      Eigen::Matrix<double, 6, 1> z;
      for (int f = 0; f < 6; ++f) z(f) = x[r][static_cast<std::size_t>(f)];
      const double eta = psi.dot(z);
      const double p = 1.0 / (1.0 + std::exp(-eta));
      grad += (static_cast<double>(y[r]) - p) * z;
      hess -= p * (1.0 - p) * z * z.transpose();
    }
    if (grad.lpNorm<Eigen::Infinity>() <= 1e-9) break;
    Eigen::LDLT<Eigen::Matrix<double, 6, 6>> solver(-hess);
    Eigen::Matrix<double, 6, 1> step = solver.solve(grad);
    if (!step.allFinite()) return false;
    // Dampen very large steps to keep the iteration stable.
    const double norm = step.lpNorm<Eigen::Infinity>();
    if (norm > 10.0) step *= 10.0 / norm;
    psi += step;
    if (!psi.allFinite() || psi.lpNorm<Eigen::Infinity>() > 1e4) return false;
  }
  for (int f = 0; f < 6; ++f) out[static_cast<std::size_t>(f)] = psi(f);
  return true;
}

}  // namespace recsys_detail

/// Train the logistic link predictor on a balanced sample: up to
/// `sample_per_class` existing edges as positives and equally many uniform
/// non-adjacent pairs as negatives.  Quasi-separated data (common on sparse
/// graphs, where e.g. every positive pair has a common neighbor) falls back
/// to a lightly ridge-penalized fit.
inline RecsysModel train_recsys(const Graph& g, const AttributeTable* attrs,
                                std::size_t sample_per_class, Rng& rng) {
  const std::vector<Edge> edges = g.edges();
  if (edges.empty()) throw DataError("train_recsys: graph has no edges");
  const std::size_t n = g.node_count();
  const std::size_t max_non_edges = n * (n - 1) / 2 - edges.size();
  const std::size_t per_class =
      std::min({sample_per_class, edges.size(), max_non_edges});
  if (per_class == 0) throw DataError("train_recsys: no usable pairs");

  std::vector<std::array<double, 6>> x;
  std::vector<int> y;
  auto push_pair = [&](NodeId u, NodeId v, int label) {
    const std::array<double, 5> z = pair_features(g, attrs, u, v).as_array();
    std::array<double, 6> row;
    row[0] = 1.0;
    for (std::size_t i = 0; i < 5; ++i) row[i + 1] = z[i];
    x.push_back(row);
    y.push_back(label);
  };

  for (std::size_t i : rng.sample_without_replacement(edges.size(), per_class))
    push_pair(edges[i].first, edges[i].second, 1);

  std::set<Edge> negatives;
  while (negatives.size() < per_class) {
    const NodeId u = static_cast<NodeId>(rng.uniform_below(n));
    const NodeId v = static_cast<NodeId>(rng.uniform_below(n));
    if (u == v || g.has_edge(u, v)) continue;
    negatives.insert(make_edge(u, v));
  }
  for (const Edge& e : negatives) push_pair(e.first, e.second, 0);

  RecsysModel model;
  model.n_pairs = x.size();
  if (!recsys_detail::fit_logistic(x, y, 0.0, model.psi)) {
    model.ridge_fallback = true;
    if (!recsys_detail::fit_logistic(x, y, 1e-3, model.psi))
      throw DataError("train_recsys: logistic fit failed even with ridge penalty");
  }

  std::vector<double> scores;
  scores.reserve(x.size());
  for (const auto& row : x) {
    double eta = 0.0;
    for (std::size_t f = 0; f < 6; ++f) eta += model.psi[f] * row[f];
    scores.push_back(eta);  // monotone in probability; AUC is rank-based
  }
  model.train_auc = recsys_detail::rank_auc(scores, y);
  return model;
}

/// Rank `pool` for `chooser` by predicted link probability, descending;
/// ties broken by ascending node id.  Returns the leading `a` candidates.
inline std::vector<NodeId> recsys_rank(const RecsysModel& model, const Graph& g,
                                       const AttributeTable* attrs, NodeId chooser,
                                       const std::vector<NodeId>& pool, int a) {
  std::vector<std::pair<double, NodeId>> ranked;
  ranked.reserve(pool.size());
  for (NodeId v : pool)
    ranked.emplace_back(-recsys_score(model, g, attrs, chooser, v), v);
  std::sort(ranked.begin(), ranked.end());
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(a), ranked.size());
  std::vector<NodeId> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(ranked[i].second);
  return out;
}

}  // namespace netform
