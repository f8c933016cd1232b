#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "netform/errors.hpp"
#include "netform/stats.hpp"

namespace netform {

/// Importance ranking of the three link-formation criteria as reported by a
/// survey respondent: 1 = most important ... 3 = least important, one rank
/// per criterion, mutually exclusive.
struct CriterionRanking {
  int degree = 0;      // preferential attachment
  int common = 0;      // triadic closure (common friends)
  int similarity = 0;  // homophily

  bool is_permutation() const {
    std::array<bool, 3> seen{};
    for (int r : {degree, common, similarity}) {
      if (r < 1 || r > 3 || seen[static_cast<std::size_t>(r - 1)]) return false;
      seen[static_cast<std::size_t>(r - 1)] = true;
    }
    return true;
  }
};

/// Borda score vector in (PA, TC, H) order: each criterion scores
/// 4 - rank, so the most important criterion earns 3 points and the vector
/// always sums to 6.
inline std::array<double, 3> borda_vector(const CriterionRanking& ranking) {
  if (!ranking.is_permutation())
    throw DataError("borda_vector: ranks must be a permutation of {1,2,3}");
  return {static_cast<double>(4 - ranking.degree),
          static_cast<double>(4 - ranking.common),
          static_cast<double>(4 - ranking.similarity)};
}

struct BordaGroupSummary {
  std::array<double, 3> mean{};  // (PA, TC, H); sums to 6 by construction
  std::size_t respondents = 0;
};

inline BordaGroupSummary borda_group(const std::vector<CriterionRanking>& rankings) {
  if (rankings.empty()) throw DataError("borda_group: no rankings");
  BordaGroupSummary summary;
  summary.respondents = rankings.size();
  for (const auto& r : rankings) {
    const auto v = borda_vector(r);
    for (std::size_t i = 0; i < 3; ++i) summary.mean[i] += v[i];
  }
  for (std::size_t i = 0; i < 3; ++i)
    summary.mean[i] /= static_cast<double>(rankings.size());
  return summary;
}

/// Spearman rank alignment of two Borda mean vectors (or any two
/// three-component importance profiles).
inline double borda_alignment(const std::array<double, 3>& a,
                              const std::array<double, 3>& b) {
  const std::vector<double> va(a.begin(), a.end());
  const std::vector<double> vb(b.begin(), b.end());
  return spearman(va, vb);
}

}  // namespace netform
