#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "netform/stats.hpp"

using Catch::Approx;

TEST_CASE("one-sample t against zero") {
  // mean 1.0, sd 0.1, n 3: t = 1.0 / (0.1 / sqrt(3)) = 17.3205.
  const std::vector<double> x{0.9, 1.0, 1.1};
  const auto r = netform::t_test_one_sample(x, 0.0);
  REQUIRE(r.t == Approx(17.320508).epsilon(1e-6));
  REQUIRE(r.df == Approx(2.0));
  REQUIRE(r.p < 0.01);
}

TEST_CASE("one-sample t at the hypothesized mean is null") {
  const std::vector<double> x{0.9, 1.0, 1.1};
  const auto r = netform::t_test_one_sample(x, 1.0);
  REQUIRE(r.t == Approx(0.0).margin(1e-12));
  REQUIRE(r.p == Approx(1.0));
}

TEST_CASE("one-sample t on a constant sample") {
  const std::vector<double> x{2.0, 2.0, 2.0};
  REQUIRE(netform::t_test_one_sample(x, 2.0).p == 1.0);
  REQUIRE(netform::t_test_one_sample(x, 0.0).p == 0.0);
}

TEST_CASE("two-sample Welch t on a hand-checked pair") {
  // Equal variances 5/3, mean gap -1: t = -1.0954, Welch df = 6.
  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> b{2, 3, 4, 5};
  const auto r = netform::t_test_two_sample(a, b);
  REQUIRE(r.t == Approx(-1.095445).epsilon(1e-5));
  REQUIRE(r.df == Approx(6.0).epsilon(1e-9));
  REQUIRE(r.p == Approx(0.315360).margin(5e-4));
}

TEST_CASE("two-sample t on identical samples is null") {
  const std::vector<double> a{1, 2, 3};
  const auto r = netform::t_test_two_sample(a, a);
  REQUIRE(r.t == Approx(0.0).margin(1e-12));
  REQUIRE(r.p == Approx(1.0));
}

TEST_CASE("spearman handles monotone, reversed, and tied data") {
  const std::vector<double> up{1, 2, 3, 4};
  const std::vector<double> down{9, 7, 4, 1};
  const std::vector<double> curved{1, 10, 100, 1000};
  REQUIRE(netform::spearman(up, curved) == Approx(1.0));
  REQUIRE(netform::spearman(up, down) == Approx(-1.0));
  // Average ranks for the tie: x-ranks (1, 2.5, 2.5, 4) vs (1,2,3,4)
  // gives rho = sqrt(0.9).
  const std::vector<double> tied{1, 2, 2, 3};
  REQUIRE(netform::spearman(tied, up) == Approx(std::sqrt(0.9)).epsilon(1e-9));
}

TEST_CASE("pearson of a constant series is zero") {
  const std::vector<double> c{5, 5, 5};
  const std::vector<double> y{1, 2, 3};
  REQUIRE(netform::pearson(c, y) == 0.0);
}

TEST_CASE("linreg recovers an exact line") {
  const std::vector<double> x{0, 1, 2, 3};
  const std::vector<double> y{1, 3, 5, 7};
  const auto r = netform::linreg(x, y);
  REQUIRE(r.slope == Approx(2.0));
  REQUIRE(r.intercept == Approx(1.0));
  REQUIRE(r.p == Approx(0.0).margin(1e-12));
  REQUIRE(r.r2 == Approx(1.0));
}

TEST_CASE("linreg on a hand-checked noisy triple") {
  // slope 1.5, intercept -2/3, slope se sqrt(1/12), t = 3sqrt(3), df 1.
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{1, 2, 4};
  const auto r = netform::linreg(x, y);
  REQUIRE(r.slope == Approx(1.5));
  REQUIRE(r.intercept == Approx(-2.0 / 3.0).epsilon(1e-9));
  REQUIRE(r.slope_se == Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-9));
  REQUIRE(r.t == Approx(3.0 * std::sqrt(3.0)).epsilon(1e-9));
  REQUIRE(r.p == Approx(0.121038).margin(5e-4));
  REQUIRE_THROWS_AS(netform::linreg(std::vector<double>{1, 1, 1}, y),
                    std::invalid_argument);
}

TEST_CASE("ks statistic on the hand-checked pair is exactly 2/3") {
  const std::vector<double> a{1, 2, 1};
  const std::vector<double> b{2, 2, 2};
  const auto r = netform::ks_two_sample(a, b);
  REQUIRE(r.statistic == Approx(2.0 / 3.0).margin(1e-12));
  REQUIRE(r.p > 0.25);
  REQUIRE(r.p < 0.40);
}

TEST_CASE("ks on identical samples is null") {
  const std::vector<double> a{3, 1, 4, 1, 5};
  const auto r = netform::ks_two_sample(a, a);
  REQUIRE(r.statistic == 0.0);
  REQUIRE(r.p == Approx(1.0));
}

TEST_CASE("ks on disjoint supports saturates") {
  const std::vector<double> a{1, 1, 1, 1, 1, 1, 1, 1};
  const std::vector<double> b{9, 9, 9, 9, 9, 9, 9, 9};
  const auto r = netform::ks_two_sample(a, b);
  REQUIRE(r.statistic == Approx(1.0));
  REQUIRE(r.p < 0.01);
}

TEST_CASE("kolmogorov survival function endpoints") {
  REQUIRE(netform::kolmogorov_q(0.0) == 1.0);
  REQUIRE(netform::kolmogorov_q(1e-9) == Approx(1.0));
  REQUIRE(netform::kolmogorov_q(5.0) == Approx(0.0).margin(1e-10));
  // Known value: Q(1.0) = 0.26999967...
  REQUIRE(netform::kolmogorov_q(1.0) == Approx(0.270000).margin(1e-4));
}

TEST_CASE("significance stars and Bonferroni") {
  REQUIRE(std::string(netform::significance_stars(0.2)) == "");
  REQUIRE(std::string(netform::significance_stars(0.05)) == "");
  REQUIRE(std::string(netform::significance_stars(0.04)) == "*");
  REQUIRE(std::string(netform::significance_stars(0.009)) == "**");
  REQUIRE(std::string(netform::significance_stars(0.0009)) == "***");
  REQUIRE(netform::bonferroni(0.02, 3) == Approx(0.06));
  REQUIRE(netform::bonferroni(0.5, 3) == 1.0);
  REQUIRE_THROWS_AS(netform::bonferroni(0.5, 0), std::invalid_argument);
}

TEST_CASE("degenerate inputs raise") {
  const std::vector<double> empty;
  const std::vector<double> one{1.0};
  const std::vector<double> two{1.0, 2.0};
  REQUIRE_THROWS_AS(netform::t_test_one_sample(empty, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(netform::t_test_one_sample(one, 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(netform::ks_two_sample(empty, two), std::invalid_argument);
  REQUIRE_THROWS_AS(netform::spearman(two, one), std::invalid_argument);
}
