#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>

#include "netform/choice.hpp"
#include "netform/errors.hpp"
#include "netform/rng.hpp"

namespace netform {

/// Log-likelihood, gradient, and Hessian of the conditional multinomial
/// logit at theta, over the transformed features of `data`.
struct MnlEval {
  double log_lik = 0.0;
  ThetaVector gradient{};
  Eigen::Matrix3d hessian = Eigen::Matrix3d::Zero();
};

inline MnlEval mnl_loglik(const ChoiceDataset& data, const ThetaVector& theta) {
  if (data.empty()) throw DataError("mnl_loglik: empty dataset");
  MnlEval eval;
  Eigen::Vector3d grad = Eigen::Vector3d::Zero();
  for (const auto& obs : data) {
    const std::size_t a = obs.alternatives.size();
    if (a == 0) throw DataError("mnl_loglik: observation without alternatives");
    if (obs.chosen < 0 || static_cast<std::size_t>(obs.chosen) >= a)
      throw DataError("mnl_loglik: chosen index out of range");
    // Stable log-sum-exp.
    double max_u = -1e300;
    std::vector<double> u(a);
    for (std::size_t j = 0; j < a; ++j) {
      u[j] = mnl_utility(theta, obs.alternatives[j].x);
      max_u = std::max(max_u, u[j]);
    }
    double z = 0.0;
    for (std::size_t j = 0; j < a; ++j) z += std::exp(u[j] - max_u);
    eval.log_lik += u[static_cast<std::size_t>(obs.chosen)] - (max_u + std::log(z));

    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
    for (std::size_t j = 0; j < a; ++j) {
      const double p = std::exp(u[j] - max_u) / z;
      Eigen::Vector3d x(obs.alternatives[j].x[0], obs.alternatives[j].x[1],
                        obs.alternatives[j].x[2]);
      mean += p * x;
      second += p * x * x.transpose();
    }
    const auto& cx = obs.alternatives[static_cast<std::size_t>(obs.chosen)].x;
    grad += Eigen::Vector3d(cx[0], cx[1], cx[2]) - mean;
    eval.hessian -= second - mean * mean.transpose();
  }
  for (int f = 0; f < 3; ++f) eval.gradient[static_cast<std::size_t>(f)] = grad(f);
  return eval;
}

/// Which standard-error convention to report.
///  - observed_information: sqrt(diag(-H^-1)) with H the total-sample
///    Hessian.  Equivalent to sqrt(-Hbar^-1 / N) for the mean Hessian Hbar,
///    i.e. the per-observation information form stated alongside the model.
///  - total_hessian_over_n: sqrt(diag(-H^-1) / N) with H again the total
///    Hessian; a stricter reading of the same formula, kept available for
///    comparison.
enum class MnlSeMode { observed_information, total_hessian_over_n };

struct MnlFit {
  ThetaVector theta{};
  ThetaVector std_err{};
  ThetaVector p_value{};
  double log_likelihood = 0.0;
  double aic = 0.0;    // 2k - 2LL with k = 3 structural coefficients
  double aic_k4 = 0.0;  // same with k = 4 (intercept-style counting)
  std::size_t n_obs = 0;
  int iterations = 0;
  double grad_norm = 0.0;            // final max-norm of the gradient
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();  // (-H)^-1 at theta-hat
};

namespace mnl_detail {

inline void check_identifiable(const ChoiceDataset& data) {
  std::array<bool, kChoiceFeatureCount> varies{};
  for (const auto& obs : data) {
    for (std::size_t f = 0; f < kChoiceFeatureCount; ++f) {
      if (varies[f] || obs.alternatives.empty()) continue;
      const double first = obs.alternatives.front().x[f];
      for (const auto& alt : obs.alternatives)
        if (std::fabs(alt.x[f] - first) > 1e-12) {
          varies[f] = true;
          break;
        }
    }
  }
  for (std::size_t f = 0; f < kChoiceFeatureCount; ++f)
    if (!varies[f])
      throw DataError(std::string("fit_mnl: feature '") + kChoiceFeatureNames[f] +
                      "' is constant within every choice set; "
                      "its coefficient is not identifiable");
}

}  // namespace mnl_detail

/// Maximum-likelihood fit of the three-parameter conditional logit by
/// Newton iteration with analytic gradient and Hessian and backtracking
/// line search.  Converges to max-norm(gradient) <= 1e-10 (hard failure
/// beyond 1e-8); throws DataError on non-identifiable features.
inline MnlFit fit_mnl(const ChoiceDataset& data,
                      MnlSeMode se_mode = MnlSeMode::observed_information) {
  mnl_detail::check_identifiable(data);
  ThetaVector theta{};  // zero start
  MnlEval eval = mnl_loglik(data, theta);
  int iterations = 0;
  const int max_iterations = 200;
  for (; iterations < max_iterations; ++iterations) {
    const double g_norm = std::max(
        {std::fabs(eval.gradient[0]), std::fabs(eval.gradient[1]),
         std::fabs(eval.gradient[2])});
    if (g_norm <= 1e-10) break;
    Eigen::Vector3d g(eval.gradient[0], eval.gradient[1], eval.gradient[2]);
    Eigen::LDLT<Eigen::Matrix3d> solver(-eval.hessian);
    if (solver.info() != Eigen::Success)
      throw DataError("fit_mnl: singular Hessian (collinear features)");
    Eigen::Vector3d direction = solver.solve(g);
    if (!direction.allFinite() || direction.dot(g) <= 0.0)
      throw DataError("fit_mnl: Hessian not negative definite "
                      "(degenerate or collinear features)");
    double step = 1.0;
    bool advanced = false;
    // Near the optimum the true improvement of a full Newton step drops
    // below the rounding noise of the summed log-likelihood; accept any
    // trial within that noise band so the final contraction step is taken.
    const double noise = 1e-12 * (1.0 + std::fabs(eval.log_lik));
    for (int half = 0; half < 60; ++half) {
      ThetaVector trial = theta;
      for (int f = 0; f < 3; ++f)
        trial[static_cast<std::size_t>(f)] += step * direction(f);
      MnlEval trial_eval = mnl_loglik(data, trial);
      if (trial_eval.log_lik > eval.log_lik - noise) {
        theta = trial;
        eval = trial_eval;
        advanced = true;
        break;
      }
      step *= 0.5;
    }
    if (!advanced) break;  // no ascent possible; gradient check decides below
  }

  const double g_norm = std::max({std::fabs(eval.gradient[0]),
                                  std::fabs(eval.gradient[1]),
                                  std::fabs(eval.gradient[2])});
  if (g_norm > 1e-8)
    throw DataError("fit_mnl: failed to converge (gradient norm " +
                    std::to_string(g_norm) + ")");

  MnlFit fit;
  fit.theta = theta;
  fit.log_likelihood = eval.log_lik;
  fit.n_obs = data.size();
  fit.iterations = iterations;
  fit.grad_norm = g_norm;
  fit.aic = 2.0 * 3.0 - 2.0 * eval.log_lik;
  fit.aic_k4 = 2.0 * 4.0 - 2.0 * eval.log_lik;

  Eigen::LDLT<Eigen::Matrix3d> solver(-eval.hessian);
  Eigen::Matrix3d cov = solver.solve(Eigen::Matrix3d::Identity());
  fit.covariance = cov;
  const double scale =
      (se_mode == MnlSeMode::observed_information)
          ? 1.0
          : 1.0 / static_cast<double>(data.size());
  boost::math::normal_distribution<double> normal01;
  for (int f = 0; f < 3; ++f) {
    const double variance = cov(f, f) * scale;
    fit.std_err[static_cast<std::size_t>(f)] =
        variance > 0.0 ? std::sqrt(variance) : 0.0;
    const double se = fit.std_err[static_cast<std::size_t>(f)];
    if (se > 0.0) {
      const double z = std::fabs(theta[static_cast<std::size_t>(f)]) / se;
      fit.p_value[static_cast<std::size_t>(f)] =
          2.0 * boost::math::cdf(boost::math::complement(normal01, z));
    } else {
      fit.p_value[static_cast<std::size_t>(f)] =
          theta[static_cast<std::size_t>(f)] == 0.0 ? 1.0 : 0.0;
    }
  }
  return fit;
}

/// Average marginal effects: AME_k = mean over alternatives of
/// theta_k * p * (1 - p), with delta-method standard errors propagated
/// through the fitted covariance.
struct AmeResult {
  ThetaVector ame{};
  ThetaVector std_err{};
};

inline AmeResult average_marginal_effects(const MnlFit& fit,
                                          const ChoiceDataset& data) {
  if (data.empty()) throw DataError("average_marginal_effects: empty dataset");
  AmeResult result;
  std::size_t count = 0;
  // Gradient of each AME_k with respect to theta, accumulated alongside.
  std::array<Eigen::Vector3d, 3> jac{Eigen::Vector3d::Zero(),
                                     Eigen::Vector3d::Zero(),
                                     Eigen::Vector3d::Zero()};
  for (const auto& obs : data) {
    std::vector<FeatureVector> xs;
    xs.reserve(obs.alternatives.size());
    for (const auto& alt : obs.alternatives) xs.push_back(alt.x);
    const std::vector<double> p = mnl_probabilities(fit.theta, xs);
    // E_p[x] for the probability derivative.
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (std::size_t j = 0; j < xs.size(); ++j)
      mean += p[j] * Eigen::Vector3d(xs[j][0], xs[j][1], xs[j][2]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      const double pj = p[j];
      const Eigen::Vector3d xj(xs[j][0], xs[j][1], xs[j][2]);
      const Eigen::Vector3d dp = pj * (xj - mean);  // dp_j / dtheta
      for (int k = 0; k < 3; ++k) {
        result.ame[static_cast<std::size_t>(k)] +=
            fit.theta[static_cast<std::size_t>(k)] * pj * (1.0 - pj);
        // d/dtheta_l [theta_k p (1-p)] =
        //   delta_kl p(1-p) + theta_k (1 - 2p) dp/dtheta_l
        Eigen::Vector3d row =
            fit.theta[static_cast<std::size_t>(k)] * (1.0 - 2.0 * pj) * dp;
        row(k) += pj * (1.0 - pj);
        jac[static_cast<std::size_t>(k)] += row;
      }
      ++count;
    }
  }
  for (int k = 0; k < 3; ++k) {
    result.ame[static_cast<std::size_t>(k)] /= static_cast<double>(count);
    const Eigen::Vector3d g = jac[static_cast<std::size_t>(k)] / static_cast<double>(count);
    const double var = g.dot(fit.covariance * g);
    result.std_err[static_cast<std::size_t>(k)] = var > 0.0 ? std::sqrt(var) : 0.0;
  }
  return result;
}

/// Draws one transformed alternative set for Monte Carlo integration.
using AltSetSampler = std::function<std::vector<FeatureVector>(Rng&)>;

/// Total-variation distance between the choice distributions of two
/// coefficient vectors: TV = 1/2 E[ sum_j |p^A_j - p^B_j| ] over alternative
/// sets drawn from `sampler`.
inline double tv_distance(const ThetaVector& theta_a, const ThetaVector& theta_b,
                          const AltSetSampler& sampler, int n_mc, Rng& rng) {
  if (n_mc < 1) throw std::invalid_argument("tv_distance: n_mc < 1");
  double total = 0.0;
  for (int rep = 0; rep < n_mc; ++rep) {
    const std::vector<FeatureVector> xs = sampler(rng);
    const std::vector<double> pa = mnl_probabilities(theta_a, xs);
    const std::vector<double> pb = mnl_probabilities(theta_b, xs);
    double l1 = 0.0;
    for (std::size_t j = 0; j < pa.size(); ++j) l1 += std::fabs(pa[j] - pb[j]);
    total += 0.5 * l1;
  }
  return total / static_cast<double>(n_mc);
}

/// Sampler over the observed alternative sets of a dataset (uniform draw).
inline AltSetSampler make_dataset_sampler(const ChoiceDataset& data) {
  if (data.empty()) throw DataError("make_dataset_sampler: empty dataset");
  return [&data](Rng& rng) {
    const auto& obs = data[rng.uniform_below(data.size())];
    std::vector<FeatureVector> xs;
    xs.reserve(obs.alternatives.size());
    for (const auto& alt : obs.alternatives) xs.push_back(alt.x);
    return xs;
  };
}

}  // namespace netform
