#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace netform {

struct TTestResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-sided
  double mean_a = 0.0;
  double mean_b = 0.0;  // hypothesized mean (one-sample) or second sample mean
};

struct LinRegResult {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  double t = 0.0;
  double p = 1.0;  // two-sided, H0: slope = 0
  double r2 = 0.0;
};

struct KsResult {
  double statistic = 0.0;  // sup |F_a - F_b|
  double p = 1.0;          // asymptotic two-sample p-value
};

namespace stats_detail {

inline double mean_of(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("stats: empty sample");
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

inline double sample_var(std::span<const double> x, double m) {
  if (x.size() < 2) throw std::invalid_argument("stats: need at least 2 observations");
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

inline double t_two_sided_p(double t, double df) {
  if (!std::isfinite(t)) return 0.0;
  boost::math::students_t_distribution<double> dist(df);
  return 2.0 * boost::math::cdf(dist, -std::fabs(t));
}

/// Average ranks (1-based); tied values share the mean of their rank block.
inline std::vector<double> average_ranks(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
    const double shared = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

}  // namespace stats_detail

/// Pearson correlation; 0 if either sample is constant.
inline double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson: length mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need at least 2 pairs");
  const double mx = stats_detail::mean_of(x);
  const double my = stats_detail::mean_of(y);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

/// Spearman rank correlation with average ranks for ties.
inline double spearman(std::span<const double> x, std::span<const double> y) {
  const std::vector<double> rx = stats_detail::average_ranks(x);
  const std::vector<double> ry = stats_detail::average_ranks(y);
  return pearson(rx, ry);
}

/// One-sample two-sided t-test of H0: mean(x) == mu0.
inline TTestResult t_test_one_sample(std::span<const double> x, double mu0) {
  const double m = stats_detail::mean_of(x);
  const double var = stats_detail::sample_var(x, m);
  const double n = static_cast<double>(x.size());
  TTestResult r;
  r.mean_a = m;
  r.mean_b = mu0;
  r.df = n - 1.0;
  if (var <= 0.0) {
    r.t = (m == mu0) ? 0.0 : std::numeric_limits<double>::infinity() * (m > mu0 ? 1 : -1);
    r.p = (m == mu0) ? 1.0 : 0.0;
    return r;
  }
  r.t = (m - mu0) / std::sqrt(var / n);
  r.p = stats_detail::t_two_sided_p(r.t, r.df);
  return r;
}

/// Two-sample two-sided Welch t-test (unequal variances,
/// Welch–Satterthwaite degrees of freedom).
inline TTestResult t_test_two_sample(std::span<const double> a,
                                     std::span<const double> b) {
  const double ma = stats_detail::mean_of(a);
  const double mb = stats_detail::mean_of(b);
  const double va = stats_detail::sample_var(a, ma);
  const double vb = stats_detail::sample_var(b, mb);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  TTestResult r;
  r.mean_a = ma;
  r.mean_b = mb;
  const double sa = va / na;
  const double sb = vb / nb;
  if (sa + sb <= 0.0) {
    r.df = na + nb - 2.0;
    r.t = (ma == mb) ? 0.0 : std::numeric_limits<double>::infinity() * (ma > mb ? 1 : -1);
    r.p = (ma == mb) ? 1.0 : 0.0;
    return r;
  }
  r.t = (ma - mb) / std::sqrt(sa + sb);
  r.df = (sa + sb) * (sa + sb) /
         (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
  r.p = stats_detail::t_two_sided_p(r.t, r.df);
  return r;
}

/// Ordinary least squares y = intercept + slope * x with the usual
/// two-sided t-test on the slope.
inline LinRegResult linreg(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("linreg: length mismatch");
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("linreg: need at least 3 points");
  const double mx = stats_detail::mean_of(x);
  const double my = stats_detail::mean_of(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0.0) throw std::invalid_argument("linreg: x is constant");
  LinRegResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = y[i] - (r.intercept + r.slope * x[i]);
    rss += e * e;
  }
  const double dof = static_cast<double>(n - 2);
  const double sigma2 = rss / dof;
  r.slope_se = std::sqrt(sigma2 / sxx);
  if (r.slope_se > 0.0) {
    r.t = r.slope / r.slope_se;
    r.p = stats_detail::t_two_sided_p(r.t, dof);
  } else {
    r.t = (r.slope == 0.0) ? 0.0 : std::numeric_limits<double>::infinity();
    r.p = (r.slope == 0.0) ? 1.0 : 0.0;
  }
  r.r2 = (syy > 0.0) ? 1.0 - rss / syy : 1.0;
  return r;
}

/// Survival function of the Kolmogorov distribution,
/// Q(lambda) = 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
inline double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  const double a2 = -2.0 * lambda * lambda;
  double fac = 2.0;
  double sum = 0.0;
  double term_bf = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = fac * std::exp(a2 * j * j);
    sum += term;
    if (std::fabs(term) <= 0.001 * term_bf || std::fabs(term) <= 1e-10 * sum)
      return std::clamp(sum, 0.0, 1.0);
    fac = -fac;
    term_bf = std::fabs(term);
  }
  return 1.0;  // series only fails to converge for tiny lambda, where Q -> 1
}

/// Two-sample Kolmogorov–Smirnov test with the asymptotic p-value
/// (small-sample correction lambda = (sqrt(Ne) + 0.12 + 0.11/sqrt(Ne)) * D).
inline KsResult ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0;
  while (ia < sa.size() && ib < sb.size()) {
    const double va = sa[ia];
    const double vb = sb[ib];
    const double value = std::min(va, vb);
    while (ia < sa.size() && sa[ia] == value) ++ia;
    while (ib < sb.size() && sb[ib] == value) ++ib;
    const double fa = static_cast<double>(ia) / na;
    const double fb = static_cast<double>(ib) / nb;
    d = std::max(d, std::fabs(fa - fb));
  }
  KsResult r;
  r.statistic = d;
  const double ne = na * nb / (na + nb);
  const double sq = std::sqrt(ne);
  r.p = kolmogorov_q((sq + 0.12 + 0.11 / sq) * d);
  return r;
}

/// Significance stars: * p < .05, ** p < .01, *** p < .001.
inline const char* significance_stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

/// Bonferroni correction: multiply by the number of tests, cap at 1.
inline double bonferroni(double p, int test_count) {
  if (test_count < 1) throw std::invalid_argument("bonferroni: test_count < 1");
  return std::min(1.0, p * static_cast<double>(test_count));
}

}  // namespace netform
