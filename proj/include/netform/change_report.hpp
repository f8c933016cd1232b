#pragma once

#include <vector>

#include "netform/graph.hpp"
#include "netform/metrics.hpp"
#include "netform/spectrum.hpp"
#include "netform/stats.hpp"

namespace netform {

/// Distributional comparison of a base graph and a grown/rewired version of
/// it: two-sample KS tests over the degree sequence, connected-component
/// sizes, adjacency singular values, and local clustering coefficients,
/// plus the edge-level diff.
struct GraphChangeReport {
  KsResult degree_ks;
  KsResult component_ks;
  KsResult spectrum_ks;
  KsResult clustering_ks;
  std::size_t added_edges = 0;
  std::size_t removed_edges = 0;
  double percent_new_edges = 0.0;
};

inline GraphChangeReport graph_change_report(const Graph& base,
                                             const Graph& final_graph) {
  if (base.node_count() != final_graph.node_count())
    throw std::invalid_argument("graph_change_report: node sets differ");
  GraphChangeReport report;

  auto to_doubles = [](const std::vector<std::size_t>& v) {
    return std::vector<double>(v.begin(), v.end());
  };
  const std::vector<double> deg_a = to_doubles(base.degrees());
  const std::vector<double> deg_b = to_doubles(final_graph.degrees());
  report.degree_ks = ks_two_sample(deg_a, deg_b);

  const std::vector<double> comp_a = to_doubles(component_sizes(base));
  const std::vector<double> comp_b = to_doubles(component_sizes(final_graph));
  report.component_ks = ks_two_sample(comp_a, comp_b);

  report.spectrum_ks = ks_two_sample(adjacency_singular_values(base),
                                     adjacency_singular_values(final_graph));
  report.clustering_ks =
      ks_two_sample(local_clustering(base), local_clustering(final_graph));

  const GraphDiff diff = edge_diff(base, final_graph);
  report.added_edges = diff.added.size();
  report.removed_edges = diff.removed.size();
  report.percent_new_edges = diff.percent_new_edges();
  return report;
}

}  // namespace netform
