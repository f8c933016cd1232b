#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "netform/rng.hpp"

namespace netform {

/// Feature order used throughout the choice stack:
///   0 - degree of the candidate            (preferential attachment)
///   1 - attribute similarity to the chooser (homophily)
///   2 - common neighbors with the chooser   (triadic closure)
inline constexpr std::size_t kChoiceFeatureCount = 3;
inline constexpr std::array<const char*, kChoiceFeatureCount> kChoiceFeatureNames = {
    "degree", "similarity", "common_neighbors"};

using FeatureVector = std::array<double, kChoiceFeatureCount>;
using ThetaVector = std::array<double, kChoiceFeatureCount>;

/// One candidate in a choice set.
struct Alternative {
  int node = -1;      // node id this candidate refers to (or a synthetic id)
  FeatureVector raw{};  // raw counts: degree, similarity, common neighbors
  FeatureVector x{};    // transformed features (see feature_transform)
};

/// One recorded decision: the presented alternatives and the chosen index.
struct ChoiceObservation {
  int chooser = -1;
  std::vector<Alternative> alternatives;
  int chosen = -1;  // index into `alternatives`
};

using ChoiceDataset = std::vector<ChoiceObservation>;

/// Dampened log transform f(x) = ln((x + 1) / (x_max + 1)); the +1 keeps
/// zero counts finite and the shared denominator pins f(x_max) = 0.
inline double feature_transform(double x, double x_max) {
  if (x < 0.0 || x_max < 0.0)
    throw std::invalid_argument("feature_transform: negative count");
  if (x > x_max) throw std::invalid_argument("feature_transform: x exceeds x_max");
  return std::log((x + 1.0) / (x_max + 1.0));
}

/// Fill every alternative's transformed features from the raw counts, using
/// the dataset-global maximum of each feature column.
///
/// Within a choice set the multinomial-logit probabilities are invariant to
/// the normalizing constant (it shifts all utilities equally), so per-set
/// and global maxima induce the same choice model; the global convention
/// makes coefficients comparable across observations.
inline void apply_feature_transform(ChoiceDataset& data) {
  FeatureVector max{};
  for (const auto& obs : data)
    for (const auto& alt : obs.alternatives)
      for (std::size_t f = 0; f < kChoiceFeatureCount; ++f)
        max[f] = std::max(max[f], alt.raw[f]);
  for (auto& obs : data)
    for (auto& alt : obs.alternatives)
      for (std::size_t f = 0; f < kChoiceFeatureCount; ++f)
        alt.x[f] = feature_transform(alt.raw[f], max[f]);
}

/// Transform a single alternative set in isolation (per-set maxima).  Used
/// at decision time, where only the presented candidates are in scope.
inline std::vector<FeatureVector> transform_feature_set(
    const std::vector<FeatureVector>& raw) {
  FeatureVector max{};
  for (const auto& r : raw)
    for (std::size_t f = 0; f < kChoiceFeatureCount; ++f)
      max[f] = std::max(max[f], r[f]);
  std::vector<FeatureVector> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t f = 0; f < kChoiceFeatureCount; ++f)
      out[i][f] = feature_transform(raw[i][f], max[f]);
  return out;
}

/// Utility of an alternative under theta.
inline double mnl_utility(const ThetaVector& theta, const FeatureVector& x) {
  double u = 0.0;
  for (std::size_t f = 0; f < kChoiceFeatureCount; ++f) u += theta[f] * x[f];
  return u;
}

/// Choice probabilities softmax(theta . x) over one alternative set.
inline std::vector<double> mnl_probabilities(const ThetaVector& theta,
                                             const std::vector<FeatureVector>& x) {
  if (x.empty()) throw std::invalid_argument("mnl_probabilities: empty set");
  std::vector<double> p(x.size());
  double max_u = -1e300;
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = mnl_utility(theta, x[i]);
    max_u = std::max(max_u, p[i]);
  }
  double total = 0.0;
  for (double& v : p) {
    v = std::exp(v - max_u);
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

/// Uniform-random decision: delta distinct indices in preference order.
inline std::vector<int> decide_random(std::size_t n_alternatives, int delta,
                                      Rng& rng) {
  if (n_alternatives == 0) throw std::invalid_argument("decide_random: empty set");
  const std::size_t k =
      std::min<std::size_t>(static_cast<std::size_t>(delta), n_alternatives);
  std::vector<int> out;
  for (std::size_t i : rng.sample_without_replacement(n_alternatives, k))
    out.push_back(static_cast<int>(i));
  return out;
}

/// Scripted multinomial-logit decision: i.i.d. standard Gumbel noise added
/// to each utility, alternatives ranked by realized utility, top delta
/// returned.  The Gumbel-argmax construction samples exactly the softmax
/// choice distribution.
inline std::vector<int> decide_mnl(const ThetaVector& theta,
                                   const std::vector<FeatureVector>& x, int delta,
                                   Rng& rng) {
  if (x.empty()) throw std::invalid_argument("decide_mnl: empty set");
  std::vector<double> utility(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    utility[i] = mnl_utility(theta, x[i]) + rng.gumbel();
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return utility[static_cast<std::size_t>(a)] > utility[static_cast<std::size_t>(b)];
  });
  const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(delta), x.size());
  order.resize(k);
  return order;
}

}  // namespace netform
