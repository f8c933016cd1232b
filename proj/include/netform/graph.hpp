#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace netform {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;  // always stored with first < second

/// Normalize an unordered pair to (min, max).
inline Edge make_edge(NodeId u, NodeId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph over the dense node set {0, ..., n-1}.
///
/// Adjacency lists are kept sorted so that membership tests and
/// common-neighbor queries are O(deg) merges.  Copying a Graph is the
/// supported snapshot mechanism: copies are deep and independent.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adj_(node_count) {}

  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool has_node(NodeId u) const {
    return u >= 0 && static_cast<std::size_t>(u) < adj_.size();
  }

  void check_node(NodeId u) const {
    if (!has_node(u))
      throw std::invalid_argument("graph: unknown node " + std::to_string(u));
  }

  bool has_edge(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Insert the undirected edge {u, v}.  Returns false (and leaves the graph
  /// unchanged) if the edge already exists.  Self-loops are rejected.
  bool add_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    if (u == v)
      throw std::invalid_argument("graph: self-loop on node " + std::to_string(u));
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
  }

  /// Remove the undirected edge {u, v}.  Returns false if it was absent.
  bool remove_edge(NodeId u, NodeId v) {
    check_node(u);
    check_node(v);
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v) return false;
    nu.erase(it);
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
    return true;
  }

  /// Neighbors of u in ascending id order.
  const std::vector<NodeId>& neighbors(NodeId u) const {
    check_node(u);
    return adj_[static_cast<std::size_t>(u)];
  }

  std::size_t degree(NodeId u) const { return neighbors(u).size(); }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(adj_.size());
    for (std::size_t i = 0; i < adj_.size(); ++i) d[i] = adj_[i].size();
    return d;
  }

  /// Common neighbors of u and v in ascending id order (sorted-list merge).
  std::vector<NodeId> common_neighbors(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  }

  std::size_t common_neighbor_count(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    const auto& a = adj_[static_cast<std::size_t>(u)];
    const auto& b = adj_[static_cast<std::size_t>(v)];
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) ++ia;
      else if (*ib < *ia) ++ib;
      else { ++count; ++ia; ++ib; }
    }
    return count;
  }

  /// All edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adj_.size(); ++u)
      for (NodeId v : adj_[u])
        if (static_cast<NodeId>(u) < v) out.emplace_back(static_cast<NodeId>(u), v);
    return out;
  }

  /// Nodes not adjacent to u and distinct from u, ascending.
  std::vector<NodeId> non_neighbors(NodeId u) const {
    check_node(u);
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    std::vector<NodeId> out;
    out.reserve(adj_.size() - nbrs.size());
    auto it = nbrs.begin();
    for (NodeId v = 0; v < static_cast<NodeId>(adj_.size()); ++v) {
      while (it != nbrs.end() && *it < v) ++it;
      if (v != u && (it == nbrs.end() || *it != v)) out.push_back(v);
    }
    return out;
  }

  bool operator==(const Graph& other) const {
    return adj_ == other.adj_;
  }

private:
  std::vector<std::vector<NodeId>> adj_;
  std::size_t edge_count_ = 0;
};

/// Difference between two graphs over the same node set.
struct GraphDiff {
  std::vector<Edge> added;    // in final but not base, lexicographic
  std::vector<Edge> removed;  // in base but not final, lexicographic
  std::size_t base_edge_count = 0;
  std::size_t final_edge_count = 0;

  /// Added edges as a percentage of the base edge count.
  double percent_new_edges() const {
    if (base_edge_count == 0) return added.empty() ? 0.0 : 100.0;
    return 100.0 * static_cast<double>(added.size()) /
           static_cast<double>(base_edge_count);
  }
};

/// Edge-set difference of two graphs over the same node set.
inline GraphDiff edge_diff(const Graph& base, const Graph& final_graph) {
  if (base.node_count() != final_graph.node_count())
    throw std::invalid_argument("edge_diff: node sets differ");
  const std::vector<Edge> a = base.edges();
  const std::vector<Edge> b = final_graph.edges();
  GraphDiff diff;
  diff.base_edge_count = a.size();
  diff.final_edge_count = b.size();
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(diff.added));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(diff.removed));
  return diff;
}

/// BFS distances from `source`; unreachable nodes get -1.
inline std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  g.check_node(source);
  std::vector<int> dist(g.node_count(), -1);
  std::queue<NodeId> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    const int du = dist[static_cast<std::size_t>(u)];
    for (NodeId v : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = du + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

/// Connected components as node lists; components ordered by smallest
/// member, members ascending.
inline std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> components;
  std::vector<bool> seen(g.node_count(), false);
  for (NodeId s = 0; s < static_cast<NodeId>(g.node_count()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<NodeId> comp;
    std::queue<NodeId> frontier;
    seen[static_cast<std::size_t>(s)] = true;
    frontier.push(s);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      comp.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          frontier.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

/// Sizes of connected components, descending.
inline std::vector<std::size_t> component_sizes(const Graph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : connected_components(g)) sizes.push_back(c.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

/// Local clustering coefficient per node; nodes of degree < 2 get 0.
inline std::vector<double> local_clustering(const Graph& g) {
  std::vector<double> cc(g.node_count(), 0.0);
  for (NodeId u = 0; u < static_cast<NodeId>(g.node_count()); ++u) {
    const auto& nbrs = g.neighbors(u);
    const std::size_t d = nbrs.size();
    if (d < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (g.has_edge(nbrs[i], nbrs[j])) ++links;
    cc[static_cast<std::size_t>(u)] =
        2.0 * static_cast<double>(links) / (static_cast<double>(d) * (d - 1));
  }
  return cc;
}

}  // namespace netform
