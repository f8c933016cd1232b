#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "netform/rng.hpp"

using netform::Rng;

TEST_CASE("identical seeds replay identical draw sequences") {
  Rng a(12345), b(12345);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("nearby seeds decorrelate") {
  Rng a(1), b(2);
  int agree = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++agree;
  REQUIRE(agree == 0);
}

TEST_CASE("named streams are independent of the parent and each other") {
  Rng root(777);
  Rng s1 = root.stream("policy");
  Rng s2 = root.stream("shuffle");
  Rng s1_again = root.stream("policy");
  REQUIRE(s1.next_u64() == s1_again.next_u64());
  Rng s1_b = root.stream("policy");
  Rng s2_b = root.stream("shuffle");
  int agree = 0;
  for (int i = 0; i < 64; ++i)
    if (s1_b.next_u64() == s2_b.next_u64()) ++agree;
  REQUIRE(agree == 0);
}

TEST_CASE("deriving a stream consumes no draws from the parent") {
  Rng a(9001), b(9001);
  (void)a.stream("anything");
  (void)a.stream("indexed", 17);
  REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("indexed streams differ per index") {
  Rng root(5);
  REQUIRE(root.stream("rep", 0).next_u64() != root.stream("rep", 1).next_u64());
}

TEST_CASE("uniform01 stays in [0,1) and covers the range") {
  Rng rng(31337);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  REQUIRE(lo < 0.01);
  REQUIRE(hi > 0.99);
}

TEST_CASE("uniform_below is unbiased across residue classes") {
  // Chi-square goodness of fit over 10 buckets; 16.92 is the 95th percentile
  // of chi-square with 9 degrees of freedom, widened to the 99.9th (27.88)
  // to keep the test stable under a fixed seed.
  Rng rng(2024);
  const int buckets = 10, draws = 100000;
  std::vector<int> count(buckets, 0);
  for (int i = 0; i < draws; ++i)
    ++count[static_cast<std::size_t>(rng.uniform_below(buckets))];
  const double expected = static_cast<double>(draws) / buckets;
  double chi2 = 0.0;
  for (int c : count) chi2 += (c - expected) * (c - expected) / expected;
  REQUIRE(chi2 < 27.88);
}

TEST_CASE("uniform_int covers closed bounds") {
  Rng rng(11);
  std::set<long long> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(rng.uniform_int(-2, 2));
  REQUIRE(seen == std::set<long long>{-2, -1, 0, 1, 2});
}

TEST_CASE("gumbel draws match the standard Gumbel mean and variance") {
  // Mean is the Euler-Mascheroni constant, variance pi^2/6.
  Rng rng(99);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gumbel();
    sum += g;
    sq += g * g;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  REQUIRE(mean == Catch::Approx(0.5772156649).margin(0.01));
  REQUIRE(var == Catch::Approx(1.6449340668).margin(0.05));
}

TEST_CASE("shuffle yields a permutation and is seed-deterministic") {
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[static_cast<std::size_t>(i)] = i;
  std::vector<int> w = v;
  Rng a(4), b(4);
  a.shuffle(v);
  b.shuffle(w);
  REQUIRE(v == w);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) REQUIRE(sorted[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("sample_without_replacement returns k distinct in-range indices") {
  Rng rng(8);
  const auto picks = rng.sample_without_replacement(100, 15);
  REQUIRE(picks.size() == 15);
  std::set<std::size_t> unique(picks.begin(), picks.end());
  REQUIRE(unique.size() == 15);
  for (std::size_t p : picks) REQUIRE(p < 100);
  REQUIRE_THROWS_AS(rng.sample_without_replacement(3, 4), std::invalid_argument);
}

TEST_CASE("weighted_index follows the weights") {
  Rng rng(123);
  std::vector<double> w{1.0, 3.0, 0.0, 6.0};
  std::vector<int> count(4, 0);
  const int n = 100000;
  for (int i = 0; i < n; ++i) ++count[rng.weighted_index(w)];
  REQUIRE(count[2] == 0);
  REQUIRE(count[0] / static_cast<double>(n) == Catch::Approx(0.1).margin(0.01));
  REQUIRE(count[1] / static_cast<double>(n) == Catch::Approx(0.3).margin(0.01));
  REQUIRE(count[3] / static_cast<double>(n) == Catch::Approx(0.6).margin(0.01));
  REQUIRE_THROWS_AS(rng.weighted_index(std::vector<double>{0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("draw layout is pinned for the current stream version") {
  // Frozen reference draws; a change here is a generator change and must
  // bump netform::kRngVersion.
  REQUIRE(netform::kRngVersion == 1);
  Rng rng(42);
  REQUIRE(rng.next_u64() == 0x47526757130f9f52ULL);
  REQUIRE(rng.next_u64() == 0x581ce1ff0e4ae394ULL);
  REQUIRE(rng.next_u64() == 0x09bc585a244823f2ULL);
  REQUIRE(rng.next_u64() == 0xde4431fa3c80db06ULL);
  REQUIRE(Rng(42).stream("policy").next_u64() == 0x77e6d7f132f89bd6ULL);
  Rng u(7);
  REQUIRE(u.uniform01() == Catch::Approx(0.90076068060688341).margin(1e-15));
  REQUIRE(u.uniform01() == Catch::Approx(0.58293029302807808).margin(1e-15));
  REQUIRE(u.uniform01() == Catch::Approx(0.45244189501146836).margin(1e-15));
}
