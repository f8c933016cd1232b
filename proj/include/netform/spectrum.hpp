#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "netform/graph.hpp"
#include "netform/rng.hpp"

namespace netform {

namespace spectrum_detail {

/// y = A x for the (symmetric) adjacency matrix via neighbor lists.
inline void adjacency_multiply(const Graph& g, const Eigen::MatrixXd& x,
                               Eigen::MatrixXd& y) {
  y.setZero(x.rows(), x.cols());
  for (NodeId u = 0; u < static_cast<NodeId>(g.node_count()); ++u)
    for (NodeId v : g.neighbors(u))
      y.row(u) += x.row(v);
}

}  // namespace spectrum_detail

/// Number of leading adjacency singular values retained for large graphs.
inline constexpr std::size_t kSpectrumTopK = 500;

/// Threshold up to which the full spectrum is computed densely.
inline constexpr std::size_t kSpectrumDenseLimit = 2000;

/// Full singular spectrum via a dense symmetric eigensolve (the adjacency
/// matrix is symmetric, so singular values are absolute eigenvalues).
inline std::vector<double> adjacency_singular_values_dense(const Graph& g) {
  const std::size_t n = g.node_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(n));
  for (const Edge& e : g.edges()) {
    a(e.first, e.second) = 1.0;
    a(e.second, e.first) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> sv(n);
  for (std::size_t i = 0; i < n; ++i)
    sv[i] = std::fabs(solver.eigenvalues()(static_cast<Eigen::Index>(i)));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

/// Leading k singular values by randomized subspace (power) iteration with
/// sparse matrix products.  Deterministic: the start block is seeded from
/// the graph size.  Power iterations on A preserve |lambda| ordering
/// because they are equivalent to iterating the PSD matrix A^2.
inline std::vector<double> adjacency_singular_values_iterative(const Graph& g,
                                                               std::size_t k) {
  const std::size_t n = g.node_count();
  k = std::min(k, n);
  const std::size_t block = std::min(n, k + 32);  // oversampling
  Rng start(Rng::derive_seed(static_cast<std::uint64_t>(n), "spectrum-start"));
  Eigen::MatrixXd q(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(block));
  for (Eigen::Index i = 0; i < q.rows(); ++i)
    for (Eigen::Index j = 0; j < q.cols(); ++j) q(i, j) = start.normal();
  Eigen::MatrixXd y(q.rows(), q.cols());
  const int iterations = 20;
  for (int it = 0; it < iterations; ++it) {
    spectrum_detail::adjacency_multiply(g, q, y);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
    q = qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
  }
  // Rayleigh-Ritz: eigenvalues of Q^T A Q approximate the dominant ones.
  spectrum_detail::adjacency_multiply(g, q, y);
  Eigen::MatrixXd small = q.transpose() * y;
  small = 0.5 * (small + small.transpose());  // enforce symmetry
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(small, Eigen::EigenvaluesOnly);
  std::vector<double> sv(static_cast<std::size_t>(solver.eigenvalues().size()));
  for (std::size_t i = 0; i < sv.size(); ++i)
    sv[i] = std::fabs(solver.eigenvalues()(static_cast<Eigen::Index>(i)));
  std::sort(sv.rbegin(), sv.rend());
  sv.resize(k);
  return sv;
}

/// Singular values of the adjacency matrix in descending order: the full
/// spectrum (dense solve) up to kSpectrumDenseLimit nodes, the leading
/// kSpectrumTopK values (subspace iteration) beyond that.
inline std::vector<double> adjacency_singular_values(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return {};
  if (g.edge_count() == 0) return std::vector<double>(std::min(n, kSpectrumTopK), 0.0);
  if (n <= kSpectrumDenseLimit) return adjacency_singular_values_dense(g);
  return adjacency_singular_values_iterative(g, kSpectrumTopK);
}

}  // namespace netform
