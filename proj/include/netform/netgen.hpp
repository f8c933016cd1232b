#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "netform/graph.hpp"
#include "netform/rng.hpp"

namespace netform {

/// Categorical node attribute: a name and the value vocabulary.
struct AttributeFeature {
  std::string name;
  std::vector<std::string> values;
};

/// Ordered list of categorical features assigned to every node.
struct AttributeSchema {
  std::vector<AttributeFeature> features;

  /// Default vocabulary: hobby, favorite color, location; optionally a
  /// ten-valued "lucky number" distractor that carries no planted signal.
  static AttributeSchema defaults(bool with_lucky_number = false) {
    AttributeSchema s;
    s.features.push_back({"hobby", {"hiking", "reading", "painting"}});
    s.features.push_back({"favorite_color", {"red", "blue", "green"}});
    s.features.push_back({"location", {"New York", "Boston", "Chicago"}});
    if (with_lucky_number) {
      AttributeFeature lucky{"lucky_number", {}};
      for (int i = 0; i <= 9; ++i) lucky.values.push_back(std::to_string(i));
      s.features.push_back(std::move(lucky));
    }
    return s;
  }
};

/// Per-node categorical attribute values; row r holds node r's values in
/// schema feature order.
struct AttributeTable {
  std::vector<std::string> feature_names;
  std::vector<std::vector<std::string>> rows;

  std::size_t node_count() const { return rows.size(); }
  bool empty() const { return rows.empty(); }

  /// Number of features on which u and v hold identical values.
  int similarity(NodeId u, NodeId v) const {
    const auto& a = rows.at(static_cast<std::size_t>(u));
    const auto& b = rows.at(static_cast<std::size_t>(v));
    int shared = 0;
    for (std::size_t f = 0; f < a.size(); ++f)
      if (a[f] == b[f]) ++shared;
    return shared;
  }

  int feature_index(const std::string& name) const {
    for (std::size_t f = 0; f < feature_names.size(); ++f)
      if (feature_names[f] == name) return static_cast<int>(f);
    return -1;
  }
};

/// Each node draws each feature value independently and uniformly.
/// Draw order: node-major, feature-minor.
inline AttributeTable generate_attributes(std::size_t n, const AttributeSchema& schema,
                                          Rng& rng) {
  AttributeTable table;
  for (const auto& f : schema.features) {
    if (f.values.empty())
      throw std::invalid_argument("attribute schema: feature '" + f.name +
                                  "' has no values");
    table.feature_names.push_back(f.name);
  }
  table.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    table.rows[i].reserve(schema.features.size());
    for (const auto& f : schema.features)
      table.rows[i].push_back(f.values[rng.uniform_below(f.values.size())]);
  }
  return table;
}

/// Seed-graph request.  Fields beyond `kind` and `n` apply only to the
/// matching generator.
struct SeedSpec {
  enum class Kind { empty, er, sbm, ring_lattice, watts_strogatz, barabasi_albert };

  Kind kind = Kind::empty;
  std::size_t n = 0;
  double p = 0.1;        // er: edge probability
  double p_in = 0.5;     // sbm: within-block probability
  double p_out = 0.1;    // sbm: between-block probability
  int blocks = 2;        // sbm: number of equal-as-possible blocks
  int k = 4;             // ring lattice / Watts-Strogatz: floor(k/2) links per side
  double beta = 0.0;     // Watts-Strogatz: rewiring probability
  int m = 1;             // Barabasi-Albert: edges per arriving node
};

/// A generated seed graph; `block_labels` is non-empty only for SBM seeds.
struct SeededGraph {
  Graph graph;
  std::vector<int> block_labels;
};

/// Erdos-Renyi G(n, p).  Draw order: pairs (u, v) with u < v, u-major.
inline Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p outside [0, 1]");
  Graph g(n);
  for (NodeId u = 0; u + 1 < static_cast<NodeId>(n); ++u)
    for (NodeId v = u + 1; v < static_cast<NodeId>(n); ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

/// Stochastic block model with `blocks` contiguous, equal-as-possible blocks.
/// Node u's block is u / ceil(n/blocks) adjusted so sizes differ by at most 1.
inline SeededGraph stochastic_block_model(std::size_t n, double p_in, double p_out,
                                          int blocks, Rng& rng) {
  if (blocks < 1) throw std::invalid_argument("sbm: need at least one block");
  if (p_in < 0 || p_in > 1 || p_out < 0 || p_out > 1)
    throw std::invalid_argument("sbm: probabilities outside [0, 1]");
  SeededGraph out;
  out.graph = Graph(n);
  out.block_labels.resize(n);
  // First (n % blocks) blocks get one extra node.
  const std::size_t base = n / static_cast<std::size_t>(blocks);
  const std::size_t extra = n % static_cast<std::size_t>(blocks);
  std::size_t node = 0;
  for (int b = 0; b < blocks; ++b) {
    const std::size_t size = base + (static_cast<std::size_t>(b) < extra ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) out.block_labels[node++] = b;
  }
  for (NodeId u = 0; u + 1 < static_cast<NodeId>(n); ++u)
    for (NodeId v = u + 1; v < static_cast<NodeId>(n); ++v) {
      const double p = (out.block_labels[static_cast<std::size_t>(u)] ==
                        out.block_labels[static_cast<std::size_t>(v)])
                           ? p_in
                           : p_out;
      if (rng.bernoulli(p)) out.graph.add_edge(u, v);
    }
  return out;
}

/// Ring lattice: node i links to its floor(k/2) nearest neighbors on each
/// side, so odd k yields effective degree k - 1.
inline Graph ring_lattice(std::size_t n, int k) {
  const int half = k / 2;
  if (half < 1) throw std::invalid_argument("ring_lattice: k < 2");
  if (n < 2 * static_cast<std::size_t>(half) + 1)
    throw std::invalid_argument("ring_lattice: n too small for k");
  Graph g(n);
  for (NodeId i = 0; i < static_cast<NodeId>(n); ++i)
    for (int j = 1; j <= half; ++j)
      g.add_edge(i, static_cast<NodeId>((i + j) % static_cast<NodeId>(n)));
  return g;
}

/// Classical Watts-Strogatz: start from the ring lattice, then visit each
/// node in ascending order and each of its floor(k/2) clockwise lattice
/// edges; with probability beta replace that edge's far endpoint with a
/// uniform draw over nodes that are neither the source nor already adjacent
/// to it.  Draw order: one bernoulli per lattice edge, then (on rewire) one
/// index draw.
inline Graph watts_strogatz(std::size_t n, int k, double beta, Rng& rng) {
  if (beta < 0.0 || beta > 1.0)
    throw std::invalid_argument("watts_strogatz: beta outside [0, 1]");
  Graph g = ring_lattice(n, k);
  const int half = k / 2;
  for (NodeId i = 0; i < static_cast<NodeId>(n); ++i) {
    for (int j = 1; j <= half; ++j) {
      const NodeId old = static_cast<NodeId>((i + j) % static_cast<NodeId>(n));
      if (!rng.bernoulli(beta)) continue;
      if (!g.has_edge(i, old)) continue;  // already rewired away earlier
      const std::vector<NodeId> candidates = g.non_neighbors(i);
      if (candidates.empty()) continue;
      const NodeId target = candidates[rng.uniform_below(candidates.size())];
      g.remove_edge(i, old);
      g.add_edge(i, target);
    }
  }
  return g;
}

/// Barabasi-Albert preferential attachment.  Nodes 0..m-1 start isolated;
/// each arriving node attaches to m distinct targets sampled proportionally
/// to degree (the first arrival links to all initial nodes).
inline Graph barabasi_albert(std::size_t n, int m, Rng& rng) {
  if (m < 1) throw std::invalid_argument("barabasi_albert: m < 1");
  if (n < static_cast<std::size_t>(m) + 1)
    throw std::invalid_argument("barabasi_albert: n must exceed m");
  Graph g(n);
  // `attachment` holds one entry per edge endpoint, so sampling an entry
  // uniformly is sampling a node proportionally to its degree.
  std::vector<NodeId> attachment;
  std::vector<NodeId> targets(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) targets[static_cast<std::size_t>(i)] = i;
  for (NodeId source = m; source < static_cast<NodeId>(n); ++source) {
    for (NodeId t : targets) {
      g.add_edge(source, t);
      attachment.push_back(t);
      attachment.push_back(source);
    }
    if (source + 1 == static_cast<NodeId>(n)) break;
    // Sample m distinct nodes from the endpoint multiset.
    std::set<NodeId> chosen;
    while (chosen.size() < static_cast<std::size_t>(m))
      chosen.insert(attachment[rng.uniform_below(attachment.size())]);
    targets.assign(chosen.begin(), chosen.end());
  }
  return g;
}

/// Build the seed graph requested by `spec`.
inline SeededGraph make_seed_graph(const SeedSpec& spec, Rng& rng) {
  SeededGraph out;
  switch (spec.kind) {
    case SeedSpec::Kind::empty:
      out.graph = Graph(spec.n);
      return out;
    case SeedSpec::Kind::er:
      out.graph = erdos_renyi(spec.n, spec.p, rng);
      return out;
    case SeedSpec::Kind::sbm:
      return stochastic_block_model(spec.n, spec.p_in, spec.p_out, spec.blocks, rng);
    case SeedSpec::Kind::ring_lattice:
      out.graph = ring_lattice(spec.n, spec.k);
      return out;
    case SeedSpec::Kind::watts_strogatz:
      out.graph = watts_strogatz(spec.n, spec.k, spec.beta, rng);
      return out;
    case SeedSpec::Kind::barabasi_albert:
      out.graph = barabasi_albert(spec.n, spec.m, rng);
      return out;
  }
  throw std::invalid_argument("make_seed_graph: unknown kind");
}

}  // namespace netform
