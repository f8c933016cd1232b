// Minimal walkthrough: build a seed graph and print headline metrics.
#include <cstdio>

#include "netform/metrics.hpp"
#include "netform/netgen.hpp"

int main() {
  netform::Rng rng(42);
  const netform::Graph g = netform::watts_strogatz(100, 4, 0.1, rng);
  const auto sw = netform::small_world_metrics(g);
  std::printf("watts-strogatz n=100 k=4 beta=0.1\n");
  std::printf("  edges          %zu\n", g.edge_count());
  std::printf("  path length L  %.4f\n", sw.path_length);
  std::printf("  clustering C   %.4f\n", sw.clustering);
  std::printf("  transitivity   %.4f\n", netform::transitivity(g));
  return 0;
}
