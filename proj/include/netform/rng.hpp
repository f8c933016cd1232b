#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace netform {

/// Version tag of the random stream layout.  Any change to the generator
/// algorithm, the stream-derivation scheme, or the draw order of the helpers
/// below must bump this constant; artifacts record it so that replays can
/// detect incompatible streams.
inline constexpr int kRngVersion = 1;

namespace detail {

/// splitmix64 finalizer (Steele, Lea & Flood 2014).  Used both as the state
/// mixer of the generator and to fold stream names into seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// FNV-1a hash of a stream name; stable across platforms.
inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

/// Deterministic pseudo-random generator with named sub-streams.
///
/// The generator is a splitmix64 counter: identical seeds produce identical
/// draw sequences on every platform, independent of the standard library.
/// Sub-streams are derived from a parent seed and a textual stage name so
/// that independent pipeline stages (seed graph, candidate shuffling, policy
/// noise, analysis resampling, ...) never share a stream and adding draws to
/// one stage cannot disturb another.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed), seed_(seed) {
    // Warm up so that nearby integer seeds decorrelate immediately.
    detail::splitmix64(state_);
    detail::splitmix64(state_);
  }

  /// Derive the seed of a named sub-stream of `parent_seed`.
  static std::uint64_t derive_seed(std::uint64_t parent_seed, std::string_view stream) {
    std::uint64_t s = parent_seed ^ (0x6a09e667f3bcc909ULL + detail::fnv1a(stream));
    return detail::splitmix64(s);
  }

  /// A fresh generator for the named sub-stream of this generator's seed.
  /// Does not consume any draws from this generator.
  Rng stream(std::string_view name) const { return Rng(derive_seed(seed_, name)); }

  /// Convenience for per-index streams ("decision/17", "rep/3", ...).
  Rng stream(std::string_view name, std::uint64_t index) const {
    return Rng(derive_seed(derive_seed(seed_, name), std::to_string(index)));
  }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1); safe as a log argument.
  double uniform_open01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n).  Rejection sampling keeps the distribution
  /// exact for every n.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  /// Uniform integer in [lo, hi] inclusive.
  long long uniform_int(long long lo, long long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    return lo + static_cast<long long>(
                    uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Standard Gumbel draw via inverse CDF (location 0, scale 1).
  double gumbel() { return -std::log(-std::log(uniform_open01())); }

  /// Standard normal draw (Box–Muller; one draw consumed per pair member).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u = uniform_open01();
    const double v = uniform_open01();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * 3.14159265358979323846 * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// In-place Fisher–Yates shuffle with platform-independent draws.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// k distinct indices drawn uniformly from [0, n), in draw order.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
    // Partial Fisher–Yates over an index array; O(n) memory is fine at the
    // population sizes used here (thousands of nodes).
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(uniform_below(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
  }

  /// One index drawn from the discrete distribution proportional to
  /// `weights` (all non-negative, at least one positive).
  std::size_t weighted_index(const std::vector<double>& weights) {
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw std::invalid_argument("weighted_index: negative weight");
      total += w;
    }
    if (total <= 0.0) throw std::invalid_argument("weighted_index: zero total weight");
    double u = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return weights.size() - 1;  // numerical slack on the last bucket
  }

  std::uint64_t seed() const { return seed_; }

private:
  std::uint64_t state_;
  std::uint64_t seed_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace netform
