#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netform/artifact_io.hpp"
#include "netform/change_report.hpp"
#include "netform/choice.hpp"
#include "netform/config.hpp"
#include "netform/errors.hpp"
#include "netform/graph.hpp"
#include "netform/llm_client.hpp"
#include "netform/louvain.hpp"
#include "netform/metrics.hpp"
#include "netform/mnl.hpp"
#include "netform/netgen.hpp"
#include "netform/policy.hpp"
#include "netform/prompt.hpp"
#include "netform/query.hpp"
#include "netform/recsys.hpp"
#include "netform/rng.hpp"
#include "netform/stats.hpp"

namespace netform {

/// A policy plus the client (when one exists) that must outlive it.
struct PolicyHandle {
  std::unique_ptr<Policy> policy;
  std::shared_ptr<LlmClient> client;
};

inline PolicyHandle make_policy(const ExperimentConfig& cfg) {
  PolicyHandle handle;
  switch (cfg.policy) {
    case PolicyKind::random:
      handle.policy = std::make_unique<RandomPolicy>();
      break;
    case PolicyKind::mnl:
      handle.policy = std::make_unique<MnlPolicy>(cfg.theta);
      break;
    case PolicyKind::llm:
      handle.client = std::make_shared<LlmClient>(cfg.llm);
      handle.policy = std::make_unique<LlmPolicy>(handle.client);
      break;
  }
  return handle;
}

namespace experiments_detail {

/// The policy consumes its own seed stream so that changing only this seed
/// leaves seed graphs, attributes, and candidate sampling untouched.
inline std::uint64_t policy_stream_seed(const ExperimentConfig& cfg) {
  return cfg.policy_seed != 0 ? cfg.policy_seed
                              : Rng::derive_seed(cfg.seed, "policy");
}

inline NodeId selection_node(const SelectionEntry& selection) {
  try {
    return static_cast<NodeId>(std::stoll(selection.name));
  } catch (const std::exception&) {
    throw PolicyError("policy selected non-numeric candidate '" +
                      selection.name + "'");
  }
}

/// Shared growth-driver scaffolding: seeds the per-purpose RNG streams,
/// owns the artifact under construction, and turns one policy query into
/// one decision record (or an aborted run with the partial log preserved).
struct Driver {
  const ExperimentConfig& cfg;
  Policy& policy;
  Rng policy_rng;
  Rng present_rng;
  RunArtifact artifact;
  bool aborted = false;

  Driver(const ExperimentConfig& cfg_, Policy& policy_)
      : cfg(cfg_),
        policy(policy_),
        policy_rng(policy_stream_seed(cfg_)),
        present_rng(Rng::derive_seed(cfg_.seed, "present")) {
    artifact.config = cfg_;
    artifact.fingerprint = config_fingerprint(cfg_);
  }

  bool step(const Graph& g, const AttributeTable* attrs, PromptLayout layout,
            int t, NodeId chooser, std::vector<NodeId> candidates,
            DecisionRecord& out) {
    if (cfg.shuffle_candidates) present_rng.shuffle(candidates);
    const DecisionQuery query =
        make_query(g, attrs, layout, cfg.environment, cfg.variant, chooser,
                   candidates, cfg.delta);
    out = DecisionRecord{};
    out.t = t;
    out.chooser = chooser;
    out.presented = candidates;
    out.features = query.raw_features;
    try {
      PolicyDecision decision = policy.decide(query, policy_rng);
      for (const auto& selection : decision.selections)
        out.selected.push_back(selection_node(selection));
      out.committed = out.selected;
      out.policy = decision.policy;
      out.raw = decision.raw_response;
      return true;
    } catch (const PolicyError& e) {
      abort_run(e.what());
      return false;
    }
  }

  void abort_run(const std::string& message) {
    aborted = true;
    artifact.report["aborted"] = true;
    artifact.report["abort_message"] = message;
  }
};

inline bool graphs_equal(const Graph& a, const Graph& b) {
  return a.node_count() == b.node_count() && a.edges() == b.edges();
}

inline double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

/// Type-7 (linear interpolation) quantile of an unsorted sample.
inline double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile: empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - std::floor(pos);
  return values[lo] + frac * (values[hi] - values[lo]);
}

}  // namespace experiments_detail

/// Growth by sequential arrival: node t joins and picks among all earlier
/// nodes, shown as neighbor lists.  The very first node has no one to pick
/// and is skipped, so n nodes yield n-1 logged decisions.
inline RunArtifact run_p1(const ExperimentConfig& cfg, Policy& policy) {
  experiments_detail::Driver d(cfg, policy);
  Graph g(static_cast<std::size_t>(cfg.n));
  d.artifact.initial = g;
  for (NodeId arrival = 1; arrival < static_cast<NodeId>(cfg.n) && !d.aborted;
       ++arrival) {
    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < arrival; ++v) candidates.push_back(v);
    DecisionRecord rec;
    if (!d.step(g, nullptr, PromptLayout::neighbors,
                static_cast<int>(arrival) - 1, arrival, std::move(candidates),
                rec))
      break;
    for (NodeId v : rec.committed) g.add_edge(rec.chooser, v);
    d.artifact.log.push_back(std::move(rec));
  }
  d.artifact.final_graph = g;
  return std::move(d.artifact);
}

/// Densification over a fixed node set: step t queries node t mod n (ascending
/// order) with its current non-neighbors and common-neighbor information.
/// With mutual confirmation on, a pick becomes a standing proposal and the
/// edge commits only once both endpoints have proposed it.
inline RunArtifact run_p2(const ExperimentConfig& cfg, Policy& policy) {
  experiments_detail::Driver d(cfg, policy);
  Rng seed_rng(Rng::derive_seed(cfg.seed, "seed-graph"));
  SeedSpec spec;
  spec.n = static_cast<std::size_t>(cfg.n);
  if (cfg.seed_kind == "sbm") {
    spec.kind = SeedSpec::Kind::sbm;
    spec.p_in = cfg.sbm_p_in;
    spec.p_out = cfg.sbm_p_out;
    spec.blocks = cfg.blocks;
  } else {
    spec.kind = SeedSpec::Kind::er;
    spec.p = cfg.er_p;
  }
  SeededGraph seeded = make_seed_graph(spec, seed_rng);
  Graph g = seeded.graph;
  d.artifact.initial = g;
  d.artifact.block_labels = seeded.block_labels;
  const PromptLayout layout = cfg.common_as_count
                                  ? PromptLayout::common_neighbors_count
                                  : PromptLayout::common_neighbors_list;
  std::set<std::pair<NodeId, NodeId>> proposals;
  for (int t = 0; t < cfg.steps && !d.aborted; ++t) {
    const NodeId u = static_cast<NodeId>(t % cfg.n);
    std::vector<NodeId> candidates = g.non_neighbors(u);
    if (candidates.empty()) continue;  // saturated node; the round advances
    DecisionRecord rec;
    if (!d.step(g, nullptr, layout, t, u, std::move(candidates), rec)) break;
    if (cfg.mutual_confirmation) {
      std::vector<NodeId> committed;
      for (NodeId v : rec.selected) {
        if (proposals.erase({v, u}) > 0)
          committed.push_back(v);
        else
          proposals.insert({u, v});
      }
      rec.committed = std::move(committed);
    }
    for (NodeId v : rec.committed) g.add_edge(u, v);
    d.artifact.log.push_back(std::move(rec));
  }
  d.artifact.final_graph = g;
  return std::move(d.artifact);
}

/// Attribute-driven formation on an empty seed: each node in ascending order
/// sees every current non-neighbor's attribute map and links to up to delta
/// of them.
inline RunArtifact run_p3(const ExperimentConfig& cfg, Policy& policy) {
  experiments_detail::Driver d(cfg, policy);
  Rng attr_rng(Rng::derive_seed(cfg.seed, "attributes"));
  d.artifact.attributes = generate_attributes(
      static_cast<std::size_t>(cfg.n), AttributeSchema::defaults(cfg.distractor),
      attr_rng);
  Graph g(static_cast<std::size_t>(cfg.n));
  d.artifact.initial = g;
  for (NodeId u = 0; u < static_cast<NodeId>(cfg.n) && !d.aborted; ++u) {
    std::vector<NodeId> candidates = g.non_neighbors(u);
    if (candidates.empty()) continue;
    DecisionRecord rec;
    if (!d.step(g, &d.artifact.attributes, PromptLayout::attributes,
                static_cast<int>(u), u, std::move(candidates), rec))
      break;
    for (NodeId v : rec.committed) g.add_edge(u, v);
    d.artifact.log.push_back(std::move(rec));
  }
  d.artifact.final_graph = g;
  return std::move(d.artifact);
}

namespace experiments_detail {

struct RewireOutcome {
  Graph initial;
  Graph graph;
  std::vector<DecisionRecord> log;
  int lanes_selected = 0;  // lattice edges drawn for rewiring
  int skips = 0;           // lanes abandoned after the single re-query
  std::vector<std::string> skip_messages;
};

/// One altered Watts-Strogatz pass: every clockwise lattice edge is drawn
/// for rewiring with probability beta; on selection the policy picks the
/// replacement endpoint among current non-neighbors.  A failed decision is
/// re-queried once and then the lane is skipped with the old edge kept, so
/// the edge count n*floor(k/2) is invariant.
inline RewireOutcome rewire_run(const ExperimentConfig& cfg, Policy& policy,
                                std::size_t n, Rng beta_rng, Rng present_rng,
                                Rng policy_rng) {
  RewireOutcome out;
  out.initial = ring_lattice(n, cfg.k);
  Graph g = out.initial;
  const int half = cfg.k / 2;
  int t = 0;
  for (NodeId u = 0; u < static_cast<NodeId>(n); ++u) {
    for (int j = 1; j <= half; ++j) {
      const NodeId old_target =
          static_cast<NodeId>((u + j) % static_cast<NodeId>(n));
      if (!beta_rng.bernoulli(cfg.beta)) continue;
      if (!g.has_edge(u, old_target)) continue;  // already rewired away
      ++out.lanes_selected;
      for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<NodeId> candidates = g.non_neighbors(u);
        if (candidates.empty()) break;  // chooser saturated; keep the edge
        if (cfg.shuffle_candidates) present_rng.shuffle(candidates);
        const DecisionQuery query =
            make_query(g, nullptr, PromptLayout::neighbors, cfg.environment,
                       cfg.variant, u, candidates, 1);
        DecisionRecord rec;
        rec.t = t++;
        rec.chooser = u;
        rec.presented = candidates;
        rec.features = query.raw_features;
        try {
          PolicyDecision decision = policy.decide(query, policy_rng);
          rec.policy = decision.policy;
          rec.raw = decision.raw_response;
          if (!decision.selections.empty()) {
            const NodeId w = selection_node(decision.selections.front());
            rec.selected = {w};
            rec.committed = {w};
            rec.has_rewired = true;
            rec.rewired = make_edge(u, old_target);
            g.remove_edge(u, old_target);
            g.add_edge(u, w);
          }
          out.log.push_back(std::move(rec));
          break;  // abstention keeps the old edge
        } catch (const PolicyError& e) {
          if (attempt == 1) {
            ++out.skips;
            out.skip_messages.push_back(e.what());
          }
        }
      }
    }
  }
  out.graph = std::move(g);
  return out;
}

}  // namespace experiments_detail

/// Small-world laboratory: one altered-WS run per (size, repetition) cell of
/// the grid, with the reference-size run's graph and log stored as the
/// artifact and the (n, L, C) series kept in the report for regression.
inline RunArtifact run_p5(const ExperimentConfig& cfg, Policy& policy) {
  using experiments_detail::rewire_run;
  RunArtifact artifact;
  artifact.config = cfg;
  artifact.fingerprint = config_fingerprint(cfg);
  const std::uint64_t policy_base = experiments_detail::policy_stream_seed(cfg);
  const Rng master(cfg.seed);
  const Rng policy_master(policy_base);

  std::vector<std::size_t> sizes;
  for (int n = cfg.grid_min; n <= cfg.grid_max; n += cfg.grid_step)
    sizes.push_back(static_cast<std::size_t>(n));
  const auto reference_n = static_cast<std::size_t>(cfg.reference_n);
  if (std::find(sizes.begin(), sizes.end(), reference_n) == sizes.end())
    sizes.push_back(reference_n);

  OrderedJson series_n = OrderedJson::array();
  OrderedJson series_rep = OrderedJson::array();
  OrderedJson series_l = OrderedJson::array();
  OrderedJson series_c = OrderedJson::array();
  int total_lanes = 0;
  int total_skips = 0;
  std::vector<std::string> skip_messages;
  bool reference_captured = false;

  std::uint64_t run_index = 0;
  for (std::size_t n : sizes) {
    for (int rep = 0; rep < cfg.runs_per_size; ++rep, ++run_index) {
      auto outcome = rewire_run(cfg, policy, n,
                                master.stream("rewire-lanes", run_index),
                                master.stream("present", run_index),
                                policy_master.stream("run", run_index));
      const SmallWorldMetrics metrics = small_world_metrics(outcome.graph);
      series_n.push_back(n);
      series_rep.push_back(rep);
      series_l.push_back(metrics.path_length);
      series_c.push_back(metrics.clustering);
      total_lanes += outcome.lanes_selected;
      total_skips += outcome.skips;
      for (auto& m : outcome.skip_messages)
        skip_messages.push_back(std::move(m));
      if (!reference_captured && n == reference_n && rep == 0) {
        reference_captured = true;
        artifact.initial = std::move(outcome.initial);
        artifact.final_graph = std::move(outcome.graph);
        artifact.log = std::move(outcome.log);
      }
    }
  }
  artifact.report["series"] = {{"n", std::move(series_n)},
                               {"rep", std::move(series_rep)},
                               {"L", std::move(series_l)},
                               {"C", std::move(series_c)}};
  artifact.report["rewire_lanes"] = total_lanes;
  artifact.report["rewire_skips"] = total_skips;
  if (!skip_messages.empty())
    artifact.report["rewire_skip_messages"] = skip_messages;
  return artifact;
}

/// Discrete-choice harness over a fixed network: sample distinct choosers
/// with at least one tie, drop one random friend each (all removals before
/// any decision), then query each chooser with a candidate set built by the
/// configured strategy.  Candidate features are logged at decision time.
inline RunArtifact run_realworld_seeded(const ExperimentConfig& cfg,
                                        Policy& policy, const Graph& seed,
                                        const AttributeTable& attrs) {
  experiments_detail::Driver d(cfg, policy);
  if (attrs.node_count() != seed.node_count())
    throw DataError("realworld: attribute rows do not cover the graph");
  Graph g = seed;
  const std::size_t n = g.node_count();
  const auto chooser_count = static_cast<std::size_t>(cfg.steps);

  std::vector<NodeId> eligible;
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
    if (g.degree(v) > 0) eligible.push_back(v);
  if (eligible.size() < chooser_count)
    throw DataError("realworld: only " + std::to_string(eligible.size()) +
                    " nodes have ties; cannot sample " +
                    std::to_string(chooser_count) + " choosers");
  Rng chooser_rng(Rng::derive_seed(cfg.seed, "choosers"));
  std::vector<NodeId> choosers;
  for (std::size_t idx :
       chooser_rng.sample_without_replacement(eligible.size(), chooser_count))
    choosers.push_back(eligible[idx]);

  // Phase 1: every removal precedes every decision; the post-removal graph
  // is the run's initial state.
  Rng removal_rng(Rng::derive_seed(cfg.seed, "removal"));
  std::vector<NodeId> removed_friend(choosers.size(), -1);
  int stranded = 0;
  for (std::size_t i = 0; i < choosers.size(); ++i) {
    const NodeId c = choosers[i];
    const auto& nbrs = g.neighbors(c);
    if (nbrs.empty()) {
      ++stranded;  // an earlier removal took this chooser's last tie
      continue;
    }
    const NodeId f = nbrs[removal_rng.uniform_below(nbrs.size())];
    g.remove_edge(c, f);
    removed_friend[i] = f;
  }
  d.artifact.initial = g;
  d.artifact.attributes = attrs;

  RecsysModel model;
  if (cfg.strategy == SamplingStrategy::recsys) {
    Rng recsys_rng(Rng::derive_seed(cfg.seed, "recsys"));
    model = train_recsys(g, &attrs, cfg.recsys_sample_per_class, recsys_rng);
    d.artifact.report["recsys_train_auc"] = model.train_auc;
  }

  // Phase 2: sequential decisions; the graph evolves as edges commit.
  const int a_count = cfg.alternatives;
  int friend_reconnected = 0;
  for (std::size_t i = 0; i < choosers.size() && !d.aborted; ++i) {
    const NodeId c = choosers[i];
    std::vector<NodeId> pool = g.non_neighbors(c);
    std::vector<NodeId> candidates;
    if (cfg.strategy == SamplingStrategy::uniform) {
      NodeId f = removed_friend[i];
      if (f >= 0 && g.has_edge(c, f)) {
        ++friend_reconnected;  // the dropped friend already linked back
        f = -1;
      }
      std::vector<NodeId> others;
      for (NodeId v : pool)
        if (v != f) others.push_back(v);
      const int need = a_count - (f >= 0 ? 1 : 0);
      if (static_cast<int>(others.size()) < need)
        throw DataError("realworld: candidate pool for node " +
                        std::to_string(c) + " is smaller than A=" +
                        std::to_string(a_count));
      if (f >= 0) candidates.push_back(f);
      for (std::size_t idx : d.present_rng.sample_without_replacement(
               others.size(), static_cast<std::size_t>(need)))
        candidates.push_back(others[idx]);
      d.present_rng.shuffle(candidates);  // hide the removed friend's slot
    } else {
      if (static_cast<int>(pool.size()) < a_count)
        throw DataError("realworld: candidate pool for node " +
                        std::to_string(c) + " is smaller than A=" +
                        std::to_string(a_count));
      candidates = recsys_rank(model, g, &attrs, c, pool, a_count);
    }
    DecisionRecord rec;
    if (!d.step(g, &attrs, PromptLayout::realworld, static_cast<int>(i), c,
                std::move(candidates), rec))
      break;
    rec.removed_friend = removed_friend[i];
    for (NodeId v : rec.committed) g.add_edge(c, v);
    d.artifact.log.push_back(std::move(rec));
  }
  d.artifact.final_graph = g;
  if (stranded > 0) d.artifact.report["stranded_choosers"] = stranded;
  if (friend_reconnected > 0)
    d.artifact.report["friend_reconnected"] = friend_reconnected;
  return std::move(d.artifact);
}

/// One generated survey instance: three candidates with degree ~ U{0..1000},
/// common friends ~ U{0..degree}, and similarity ~ U{0..10} (social) or a
/// co-worker/manager role bit (company).
struct SurveyInstance {
  SurveyBundle bundle;
  std::vector<FeatureVector> raw;  // (degree, similarity, common) per candidate
};

inline SurveyInstance make_survey_instance(SurveyContext context, Rng& rng) {
  SurveyInstance instance;
  instance.bundle.context = context;
  for (int j = 0; j < 3; ++j) {
    const long long degree = rng.uniform_int(0, 1000);
    const long long common = rng.uniform_int(0, degree);
    CandidateProfile profile;
    profile.display_name = std::to_string(j + 1);
    profile.features["degree"] = degree;
    profile.features["common_friends"] = common;
    double similarity = 0.0;
    if (context == SurveyContext::social) {
      const long long s = rng.uniform_int(0, 10);
      profile.features["similarity"] = s;
      similarity = static_cast<double>(s);
    } else {
      const long long role = rng.uniform_int(0, 1);
      profile.features["role"] = role == 0 ? "co-worker" : "manager";
      similarity = role == 0 ? 1.0 : 0.0;  // co-workers share the respondent's role
    }
    instance.raw.push_back({static_cast<double>(degree), similarity,
                            static_cast<double>(common)});
    instance.bundle.candidates.push_back(std::move(profile));
  }
  return instance;
}

namespace experiments_detail {

/// Importance ranking implied by a coefficient vector: larger |theta| means
/// more important; ties resolve in (degree, similarity, common) order.
inline CriterionRanking ranking_from_theta(const ThetaVector& theta) {
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::fabs(theta[static_cast<std::size_t>(a)]) >
           std::fabs(theta[static_cast<std::size_t>(b)]);
  });
  std::array<int, 3> rank_of{};
  for (int r = 0; r < 3; ++r) rank_of[static_cast<std::size_t>(order[r])] = r + 1;
  CriterionRanking ranking;
  ranking.degree = rank_of[0];
  ranking.similarity = rank_of[1];
  ranking.common = rank_of[2];
  return ranking;
}

}  // namespace experiments_detail

/// Survey harness: per context, each respondent receives one generated
/// instance and answers with a pick plus a criterion ranking.  Scripted
/// policies answer deterministically from their coefficients; the external
/// policy answers through the survey prompt, and a respondent whose
/// responses never validate is dropped and counted.
inline RunArtifact run_survey(const ExperimentConfig& cfg, PolicyHandle& handle) {
  RunArtifact artifact;
  artifact.config = cfg;
  artifact.fingerprint = config_fingerprint(cfg);
  Rng instance_rng(Rng::derive_seed(cfg.seed, "survey-instances"));
  Rng policy_rng(experiments_detail::policy_stream_seed(cfg));
  int dropped = 0;
  for (SurveyContext context : {SurveyContext::social, SurveyContext::company}) {
    for (int r = 0; r < cfg.respondents; ++r) {
      SurveyInstance instance = make_survey_instance(context, instance_rng);
      SurveyRecord rec;
      rec.context = survey_context_name(context);
      rec.respondent = r;
      for (const auto& c : instance.bundle.candidates)
        rec.candidates.push_back(prompt_detail::profile_json(c));
      if (cfg.policy == PolicyKind::random) {
        const auto pick = policy_rng.uniform_below(3);
        rec.choice = instance.bundle.candidates[pick].display_name;
        std::vector<int> ranks{1, 2, 3};
        policy_rng.shuffle(ranks);
        rec.ranking = CriterionRanking{ranks[0], ranks[1], ranks[2]};
        rec.policy = handle.policy->name();
      } else if (cfg.policy == PolicyKind::mnl) {
        const auto x = transform_feature_set(instance.raw);
        const auto picks = decide_mnl(cfg.theta, x, 1, policy_rng);
        rec.choice =
            instance.bundle.candidates[static_cast<std::size_t>(picks.front())]
                .display_name;
        rec.ranking = experiments_detail::ranking_from_theta(cfg.theta);
        rec.policy = handle.policy->name();
      } else {
        try {
          SurveyResponse response = handle.client->decide_survey(instance.bundle);
          rec.choice = response.name;
          rec.ranking = response.ranking;
          rec.reason = response.reason;
          rec.raw = response.raw_response;
          rec.policy = handle.policy->name();
        } catch (const PolicyError& e) {
          rec.dropped = true;
          rec.reason = e.what();
          rec.policy = handle.policy->name();
          ++dropped;
        }
      }
      artifact.survey_log.push_back(std::move(rec));
    }
  }
  artifact.report["dropped_respondents"] = dropped;
  return artifact;
}

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

namespace experiments_detail {

inline OrderedJson evolution_series(const RunArtifact& artifact) {
  OrderedJson ts = OrderedJson::array();
  OrderedJson edges = OrderedJson::array();
  Graph g = artifact.initial;
  for (const auto& rec : artifact.log) {
    if (rec.has_rewired) g.remove_edge(rec.rewired.first, rec.rewired.second);
    for (NodeId v : rec.committed) g.add_edge(rec.chooser, v);
    ts.push_back(rec.t);
    edges.push_back(g.edge_count());
  }
  return {{"t", std::move(ts)}, {"edges", std::move(edges)}};
}

inline bool replay_matches(const RunArtifact& artifact) {
  try {
    return graphs_equal(replay_log(artifact.initial, artifact.log),
                        artifact.final_graph);
  } catch (const DataError&) {
    return false;
  }
}

inline OrderedJson fit_to_json(const MnlFit& fit) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t f = 0; f < kChoiceFeatureCount; ++f) {
    rows.push_back({{"feature", kChoiceFeatureNames[f]},
                    {"theta", fit.theta[f]},
                    {"std_err", fit.std_err[f]},
                    {"p", fit.p_value[f]},
                    {"stars", significance_stars(fit.p_value[f])}});
  }
  return {{"coefficients", std::move(rows)},
          {"log_likelihood", fit.log_likelihood},
          {"aic", fit.aic},
          {"aic_k4", fit.aic_k4},
          {"n_obs", fit.n_obs}};
}

/// Fraction of logged decisions whose first pick has the maximum fitted
/// utility (ties credited fractionally), plus the matching chance rate.
inline std::pair<double, double> hit_rate(const ChoiceDataset& data,
                                          const ThetaVector& theta) {
  if (data.empty()) throw DataError("hit_rate: empty dataset");
  double hits = 0.0;
  double chance = 0.0;
  for (const auto& obs : data) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& alt : obs.alternatives)
      best = std::max(best, mnl_utility(theta, alt.x));
    std::size_t at_best = 0;
    bool chosen_at_best = false;
    for (std::size_t i = 0; i < obs.alternatives.size(); ++i) {
      if (mnl_utility(theta, obs.alternatives[i].x) >= best - 1e-12) {
        ++at_best;
        if (static_cast<int>(i) == obs.chosen) chosen_at_best = true;
      }
    }
    if (chosen_at_best) hits += 1.0 / static_cast<double>(at_best);
    chance += 1.0 / static_cast<double>(obs.alternatives.size());
  }
  const auto n = static_cast<double>(data.size());
  return {hits / n, chance / n};
}

}  // namespace experiments_detail

inline RunArtifact run_experiment(const ExperimentConfig& cfg);

/// Random-policy reruns of the same experiment shape on derived seeds; the
/// null reference for D, p-hat, and assortativity comparisons.
inline std::vector<RunArtifact> null_references(const ExperimentConfig& cfg,
                                                int replicas) {
  std::vector<RunArtifact> out;
  const std::uint64_t base = Rng::derive_seed(cfg.seed, "null-replica");
  for (int i = 0; i < replicas; ++i) {
    ExperimentConfig null_cfg = cfg;
    null_cfg.policy = PolicyKind::random;
    null_cfg.theta = ThetaVector{};
    null_cfg.llm = LlmEndpointConfig{};
    null_cfg.null_replicas = 0;
    null_cfg.policy_seed = 0;
    null_cfg.seed = Rng::derive_seed(base, std::to_string(i));
    out.push_back(run_experiment(null_cfg));
  }
  return out;
}

namespace experiments_detail {

inline OrderedJson analyze_p1(const RunArtifact& artifact) {
  OrderedJson a = OrderedJson::object();
  a["kind"] = "p1";
  a["decisions"] = artifact.log.size();

  std::vector<ScoredDecision> scored;
  for (const auto& rec : artifact.log) {
    if (rec.selected.empty()) continue;
    ScoredDecision sd;
    sd.chosen = -1;
    for (std::size_t i = 0; i < rec.presented.size(); ++i) {
      sd.scores.push_back(rec.features[i][0]);  // degree at decision time
      if (rec.presented[i] == rec.selected.front())
        sd.chosen = static_cast<int>(i);
    }
    scored.push_back(std::move(sd));
  }
  if (!scored.empty()) {
    const TopKCurve curve = topk_curve(scored);
    a["topk"] = {{"percent", curve.percent},
                 {"empirical", curve.empirical},
                 {"null", curve.null_line}};
  }
  std::vector<double> degrees;
  for (std::size_t v = 0; v < artifact.final_graph.node_count(); ++v)
    degrees.push_back(
        static_cast<double>(artifact.final_graph.degree(static_cast<NodeId>(v))));
  try {
    const PowerLawFit fit = power_law_fit(degrees, 1.0);
    a["power_law"] = {{"gamma", fit.gamma},
                      {"std_err", fit.std_err},
                      {"x_min", fit.x_min},
                      {"n_tail", fit.n_tail}};
  } catch (const std::invalid_argument&) {
    a["power_law"] = nullptr;  // degenerate degree sequence
  }
  return a;
}

inline OrderedJson analyze_p2(const RunArtifact& artifact) {
  const ExperimentConfig& cfg = artifact.config;
  Rng analysis_rng(Rng::derive_seed(cfg.seed, "analysis"));
  OrderedJson a = OrderedJson::object();
  a["kind"] = "p2";

  const double trans_initial = transitivity(artifact.initial);
  const double trans_final = transitivity(artifact.final_graph);
  a["transitivity_initial"] = trans_initial;
  a["transitivity_final"] = trans_final;
  a["D"] = trans_final - trans_initial;

  std::vector<int> labels = artifact.block_labels;
  a["labels_from"] = labels.empty() ? "louvain" : "blocks";
  if (labels.empty()) {
    const auto runs = louvain_runs(artifact.initial, unit_weights(), 1.0, 5,
                                   analysis_rng.stream("louvain-initial"));
    const auto best =
        std::max_element(runs.begin(), runs.end(),
                         [](const auto& x, const auto& y) { return x.q < y.q; });
    labels = best->community;
  }
  const GraphDiff diff = edge_diff(artifact.initial, artifact.final_graph);
  a["new_edges"] = diff.added.size();
  a["p_within"] = diff.added.empty()
                      ? OrderedJson(nullptr)
                      : OrderedJson(within_group_fraction(diff.added, labels));
  a["q_final"] =
      weighted_modularity(artifact.final_graph, unit_weights(), labels, 1.0);

  if (cfg.null_replicas > 0) {
    OrderedJson null_d = OrderedJson::array();
    OrderedJson null_p = OrderedJson::array();
    std::vector<double> null_d_values;
    const auto null_runs = null_references(cfg, cfg.null_replicas);
    for (std::size_t i = 0; i < null_runs.size(); ++i) {
      const RunArtifact& null_artifact = null_runs[i];
      const double nd = transitivity(null_artifact.final_graph) -
                        transitivity(null_artifact.initial);
      null_d.push_back(nd);
      null_d_values.push_back(nd);
      std::vector<int> null_labels = null_artifact.block_labels;
      if (null_labels.empty()) {
        const auto runs = louvain_runs(
            null_artifact.initial, unit_weights(), 1.0, 5,
            analysis_rng.stream("louvain-null", static_cast<std::uint64_t>(i)));
        const auto best = std::max_element(
            runs.begin(), runs.end(),
            [](const auto& x, const auto& y) { return x.q < y.q; });
        null_labels = best->community;
      }
      const GraphDiff null_diff =
          edge_diff(null_artifact.initial, null_artifact.final_graph);
      null_p.push_back(null_diff.added.empty()
                           ? OrderedJson(nullptr)
                           : OrderedJson(within_group_fraction(null_diff.added,
                                                               null_labels)));
    }
    a["null_D"] = std::move(null_d);
    a["null_p_within"] = std::move(null_p);
    if (null_d_values.size() >= 2) {
      const TTestResult test =
          t_test_one_sample(null_d_values, trans_final - trans_initial);
      a["null_D_mean"] = test.mean_a;
      a["null_D_t"] = test.t;
      a["null_D_p"] = test.p;
    }
  }
  return a;
}

inline OrderedJson analyze_p3(const RunArtifact& artifact) {
  const ExperimentConfig& cfg = artifact.config;
  Rng analysis_rng(Rng::derive_seed(cfg.seed, "analysis"));
  OrderedJson a = OrderedJson::object();
  a["kind"] = "p3";
  const AttributeTable& attrs = artifact.attributes;
  if (attrs.empty()) throw DataError("analyze: p3 artifact has no attributes");

  const auto feature_count = attrs.feature_names.size();
  const auto column = [&](std::size_t f) {
    std::vector<std::string> values;
    values.reserve(attrs.rows.size());
    for (const auto& row : attrs.rows) values.push_back(row[f]);
    return values;
  };
  std::vector<double> r_values(feature_count);
  OrderedJson r_json = OrderedJson::object();
  for (std::size_t f = 0; f < feature_count; ++f) {
    r_values[f] = attribute_assortativity(artifact.final_graph, column(f));
    r_json[attrs.feature_names[f]] = r_values[f];
  }
  a["R"] = std::move(r_json);

  // Shared-attribute edge weights drive the community structure readout.
  const EdgeWeightFn weight = [&attrs](NodeId u, NodeId v) {
    return static_cast<double>(attrs.similarity(u, v));
  };
  const auto runs = louvain_runs(artifact.final_graph, weight, 1.0, 5,
                                 analysis_rng.stream("louvain-attr"));
  const auto best =
      std::max_element(runs.begin(), runs.end(),
                       [](const auto& x, const auto& y) { return x.q < y.q; });
  a["q_attr"] = best->q;
  a["attr_communities"] =
      *std::max_element(best->community.begin(), best->community.end()) + 1;

  if (cfg.null_replicas > 0) {
    // Null distribution of each R under the random policy; the observed
    // value is tested against it, Bonferroni-corrected across features.
    std::vector<std::vector<double>> null_r(feature_count);
    for (const auto& null_artifact : null_references(cfg, cfg.null_replicas)) {
      const AttributeTable& null_attrs = null_artifact.attributes;
      for (std::size_t f = 0; f < feature_count; ++f) {
        std::vector<std::string> values;
        for (const auto& row : null_attrs.rows) values.push_back(row[f]);
        const double r =
            attribute_assortativity(null_artifact.final_graph, values);
        if (std::isfinite(r)) null_r[f].push_back(r);
      }
    }
    OrderedJson tests = OrderedJson::object();
    for (std::size_t f = 0; f < feature_count; ++f) {
      OrderedJson row = OrderedJson::object();
      row["null_values"] = null_r[f];
      if (null_r[f].size() >= 2 && std::isfinite(r_values[f])) {
        const TTestResult test = t_test_one_sample(null_r[f], r_values[f]);
        row["t"] = test.t;
        row["p"] = test.p;
        row["p_bonferroni"] =
            bonferroni(test.p, static_cast<int>(feature_count));
      }
      tests[attrs.feature_names[f]] = std::move(row);
    }
    a["null_R"] = std::move(tests);
  }
  return a;
}

inline OrderedJson analyze_p5(const RunArtifact& artifact) {
  const ExperimentConfig& cfg = artifact.config;
  Rng analysis_rng(Rng::derive_seed(cfg.seed, "analysis"));
  OrderedJson a = OrderedJson::object();
  a["kind"] = "p5";
  if (!artifact.report.contains("series"))
    throw DataError("analyze: p5 artifact has no (n, L, C) series");
  const OrderedJson& series = artifact.report.at("series");
  const auto n_values = series.at("n").get<std::vector<double>>();
  const auto l_values = series.at("L").get<std::vector<double>>();
  const auto c_values = series.at("C").get<std::vector<double>>();
  if (n_values.size() != l_values.size() || n_values.size() != c_values.size())
    throw DataError("analyze: ragged p5 series");

  std::vector<double> log_n;
  std::vector<double> inv_log_n;
  for (double n : n_values) {
    log_n.push_back(std::log(n));
    inv_log_n.push_back(1.0 / std::log(n));
  }
  if (n_values.size() >= 3) {
    const LinRegResult l_fit = linreg(log_n, l_values);
    a["L_vs_log_n"] = {{"slope", l_fit.slope},
                       {"intercept", l_fit.intercept},
                       {"slope_se", l_fit.slope_se},
                       {"t", l_fit.t},
                       {"p", l_fit.p},
                       {"r2", l_fit.r2}};
    const LinRegResult c_fit = linreg(inv_log_n, c_values);
    a["C_vs_inv_log_n"] = {{"slope", c_fit.slope},
                           {"intercept", c_fit.intercept},
                           {"slope_se", c_fit.slope_se},
                           {"t", c_fit.t},
                           {"p", c_fit.p},
                           {"r2", c_fit.r2}};
  }

  // Observed metrics at the reference size.
  std::vector<double> ref_l;
  std::vector<double> ref_c;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (static_cast<int>(n_values[i]) == cfg.reference_n) {
      ref_l.push_back(l_values[i]);
      ref_c.push_back(c_values[i]);
    }
  }
  if (!ref_l.empty()) {
    const auto ref_n = static_cast<std::size_t>(cfg.reference_n);
    std::vector<double> ws_l;
    std::vector<double> ws_c;
    Rng band_rng = analysis_rng.stream("ws-band");
    for (int i = 0; i < cfg.ws_reference_runs; ++i) {
      Rng run_rng = band_rng.stream("run", static_cast<std::uint64_t>(i));
      const Graph ws = watts_strogatz(ref_n, cfg.k, cfg.beta, run_rng);
      const SmallWorldMetrics m = small_world_metrics(ws);
      ws_l.push_back(m.path_length);
      ws_c.push_back(m.clustering);
    }
    OrderedJson band = OrderedJson::object();
    band["n"] = cfg.reference_n;
    band["runs"] = cfg.ws_reference_runs;
    band["L_low"] = quantile(ws_l, 0.025);
    band["L_high"] = quantile(ws_l, 0.975);
    band["C_low"] = quantile(ws_c, 0.025);
    band["C_high"] = quantile(ws_c, 0.975);
    band["L_mean"] = mean_of(ws_l);
    band["C_mean"] = mean_of(ws_c);
    band["observed_L_mean"] = mean_of(ref_l);
    band["observed_C_mean"] = mean_of(ref_c);
    if (ref_l.size() >= 2) {
      const TTestResult lt = t_test_two_sample(ref_l, ws_l);
      const TTestResult ct = t_test_two_sample(ref_c, ws_c);
      band["L_t"] = lt.t;
      band["L_p"] = lt.p;
      band["C_t"] = ct.t;
      band["C_p"] = ct.p;
    }
    a["ws_reference"] = std::move(band);

    // Binary search for the classical rewiring probability whose mean
    // clustering matches the altered runs (C decreases monotonically in
    // beta).
    const double target_c = mean_of(ref_c);
    Rng match_rng = analysis_rng.stream("ws-match");
    const int probe_runs = 20;
    std::uint64_t probe_index = 0;
    const auto mean_c_at = [&](double beta) {
      double sum = 0.0;
      for (int i = 0; i < probe_runs; ++i) {
        Rng run_rng = match_rng.stream("probe", probe_index++);
        sum += mean_local_clustering(
            watts_strogatz(ref_n, cfg.k, beta, run_rng));
      }
      return sum / probe_runs;
    };
    double lo = 0.0;
    double hi = 1.0;
    for (int iter = 0; iter < 24; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mean_c_at(mid) > target_c)
        lo = mid;  // clustering still above target: rewire harder
      else
        hi = mid;
    }
    a["beta_hat"] = 0.5 * (lo + hi);
  }
  return a;
}

inline ChoiceDataset realworld_dataset(const RunArtifact& artifact) {
  ChoiceDataset data = choice_dataset_from_log(artifact.log);
  apply_feature_transform(data);
  return data;
}

inline OrderedJson analyze_realworld(const RunArtifact& artifact) {
  const ExperimentConfig& cfg = artifact.config;
  Rng analysis_rng(Rng::derive_seed(cfg.seed, "analysis"));
  OrderedJson a = OrderedJson::object();
  a["kind"] = "realworld";
  a["strategy"] =
      cfg.strategy == SamplingStrategy::uniform ? "uniform" : "recsys";
  const ChoiceDataset data = realworld_dataset(artifact);
  a["n_obs"] = data.size();
  if (data.empty()) return a;

  const MnlFit fit = fit_mnl(data);
  a["fit"] = fit_to_json(fit);
  const AmeResult ame = average_marginal_effects(fit, data);
  OrderedJson ame_rows = OrderedJson::array();
  for (std::size_t f = 0; f < kChoiceFeatureCount; ++f)
    ame_rows.push_back({{"feature", kChoiceFeatureNames[f]},
                        {"ame", ame.ame[f]},
                        {"std_err", ame.std_err[f]}});
  a["ame"] = std::move(ame_rows);

  const auto [accuracy, chance] = hit_rate(data, fit.theta);
  a["accuracy"] = accuracy;
  a["chance"] = chance;
  a["percent_change_vs_random"] =
      chance > 0.0 ? (accuracy - chance) / chance * 100.0 : 0.0;

  const GraphChangeReport change =
      graph_change_report(artifact.initial, artifact.final_graph);
  a["graph_change"] = {
      {"added_edges", change.added_edges},
      {"removed_edges", change.removed_edges},
      {"percent_new_edges", change.percent_new_edges},
      {"degree_ks", {{"stat", change.degree_ks.statistic}, {"p", change.degree_ks.p}}},
      {"component_ks",
       {{"stat", change.component_ks.statistic}, {"p", change.component_ks.p}}},
      {"spectrum_ks",
       {{"stat", change.spectrum_ks.statistic}, {"p", change.spectrum_ks.p}}},
      {"clustering_ks",
       {{"stat", change.clustering_ks.statistic}, {"p", change.clustering_ks.p}}}};

  std::vector<double> q_initial;
  std::vector<double> q_final;
  for (const auto& run : louvain_runs(artifact.initial, unit_weights(), 1.0, 10,
                                      analysis_rng.stream("louvain-initial")))
    q_initial.push_back(run.q);
  for (const auto& run :
       louvain_runs(artifact.final_graph, unit_weights(), 1.0, 10,
                    analysis_rng.stream("louvain-final")))
    q_final.push_back(run.q);
  const TTestResult q_test = t_test_two_sample(q_initial, q_final);
  a["modularity"] = {{"q_initial_mean", q_test.mean_a},
                     {"q_final_mean", q_test.mean_b},
                     {"t", q_test.t},
                     {"p", q_test.p}};
  return a;
}

inline OrderedJson analyze_survey(const RunArtifact& artifact) {
  const ExperimentConfig& cfg = artifact.config;
  Rng analysis_rng(Rng::derive_seed(cfg.seed, "analysis"));
  OrderedJson a = OrderedJson::object();
  a["kind"] = "survey";

  struct ContextData {
    std::vector<CriterionRanking> rankings;
    ChoiceDataset data;
    int dropped = 0;
  };
  std::map<std::string, ContextData> groups;
  for (const auto& rec : artifact.survey_log) {
    ContextData& group = groups[rec.context];
    if (rec.dropped) {
      ++group.dropped;
      continue;
    }
    group.rankings.push_back(rec.ranking);
    ChoiceObservation obs;
    obs.chooser = rec.respondent;
    obs.chosen = -1;
    for (std::size_t j = 0; j < rec.candidates.size(); ++j) {
      const OrderedJson& c = rec.candidates[j];
      Alternative alt;
      alt.node = c.at("name").get<int>();
      alt.raw[0] = c.at("degree").get<double>();
      alt.raw[1] = c.contains("similarity")
                       ? c.at("similarity").get<double>()
                       : (c.at("role").get<std::string>() == "co-worker" ? 1.0
                                                                         : 0.0);
      alt.raw[2] = c.at("common_friends").get<double>();
      obs.alternatives.push_back(alt);
      if (std::to_string(alt.node) == rec.choice)
        obs.chosen = static_cast<int>(j);
    }
    if (obs.chosen < 0)
      throw DataError("survey record for respondent " +
                      std::to_string(rec.respondent) +
                      " chose an unknown candidate");
    group.data.push_back(std::move(obs));
  }

  OrderedJson per_context = OrderedJson::object();
  std::map<std::string, ThetaVector> thetas;
  std::map<std::string, std::array<double, 3>> borda_means;
  ChoiceDataset combined;
  for (auto& [name, group] : groups) {
    OrderedJson g = OrderedJson::object();
    g["respondents"] = group.rankings.size();
    g["dropped"] = group.dropped;
    if (!group.rankings.empty()) {
      const BordaGroupSummary borda = borda_group(group.rankings);
      g["borda_mean"] = {{"degree", borda.mean[0]},
                         {"common", borda.mean[1]},
                         {"similarity", borda.mean[2]}};
      borda_means[name] = borda.mean;
    }
    if (group.rankings.size() >= 2) {
      // Mean pairwise Spearman alignment of individual Borda vectors.
      double total = 0.0;
      std::size_t pairs = 0;
      std::vector<std::array<double, 3>> vectors;
      for (const auto& ranking : group.rankings)
        vectors.push_back(borda_vector(ranking));
      for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
          total += spearman(vectors[i], vectors[j]);
          ++pairs;
        }
      g["within_agreement"] = total / static_cast<double>(pairs);
    }
    if (!group.data.empty()) {
      apply_feature_transform(group.data);
      const MnlFit fit = fit_mnl(group.data);
      g["fit"] = fit_to_json(fit);
      thetas[name] = fit.theta;
      for (const auto& obs : group.data) combined.push_back(obs);
    }
    per_context[name] = std::move(g);
  }
  a["contexts"] = std::move(per_context);

  if (thetas.size() == 2 && !combined.empty()) {
    const ThetaVector& theta_a = thetas.begin()->second;
    const ThetaVector& theta_b = std::next(thetas.begin())->second;
    Rng tv_rng = analysis_rng.stream("tv");
    const AltSetSampler sampler = make_dataset_sampler(combined);
    a["between"] = {
        {"tv", tv_distance(theta_a, theta_b, sampler, 2000, tv_rng)},
        {"theta_spearman",
         spearman(std::array<double, 3>{theta_a[0], theta_a[1], theta_a[2]},
                  std::array<double, 3>{theta_b[0], theta_b[1], theta_b[2]})}};
    if (borda_means.size() == 2)
      a["between"]["borda_spearman"] =
          spearman(borda_means.begin()->second,
                   std::next(borda_means.begin())->second);
  }
  return a;
}

}  // namespace experiments_detail

/// Kind-appropriate metrics report, merged into the artifact's report under
/// "analysis".  Re-running on the same artifact is bit-identical: every
/// random element draws from streams derived from the config seed.
inline OrderedJson analyze(RunArtifact& artifact) {
  using namespace experiments_detail;
  OrderedJson a;
  switch (artifact.config.kind) {
    case ExperimentKind::p1: a = analyze_p1(artifact); break;
    case ExperimentKind::p2: a = analyze_p2(artifact); break;
    case ExperimentKind::p3: a = analyze_p3(artifact); break;
    case ExperimentKind::p5: a = analyze_p5(artifact); break;
    case ExperimentKind::realworld: a = analyze_realworld(artifact); break;
    case ExperimentKind::survey: a = analyze_survey(artifact); break;
  }
  if (artifact.config.kind != ExperimentKind::survey) {
    a["replay_ok"] = replay_matches(artifact);
    a["evolution"] = evolution_series(artifact);
  }
  artifact.report["analysis"] = a;
  return a;
}

/// Run the configured experiment end to end.  Real-world and survey runs
/// include their analysis phase, matching their reporting contracts; the
/// principle drivers leave analysis to a separate call.
inline RunArtifact run_experiment(const ExperimentConfig& cfg) {
  PolicyHandle handle = make_policy(cfg);
  switch (cfg.kind) {
    case ExperimentKind::p1:
      return run_p1(cfg, *handle.policy);
    case ExperimentKind::p2:
      return run_p2(cfg, *handle.policy);
    case ExperimentKind::p3:
      return run_p3(cfg, *handle.policy);
    case ExperimentKind::p5:
      return run_p5(cfg, *handle.policy);
    case ExperimentKind::realworld: {
      Graph seed;
      AttributeTable attrs;
      if (!cfg.edges_path.empty()) {
        const Dataset dataset = load_dataset(cfg.edges_path, cfg.attributes_path);
        seed = dataset.graph;
        attrs = dataset.attributes;
      } else {
        Rng seed_rng(Rng::derive_seed(cfg.seed, "seed-graph"));
        seed = erdos_renyi(static_cast<std::size_t>(cfg.n), cfg.er_p, seed_rng);
        Rng attr_rng(Rng::derive_seed(cfg.seed, "attributes"));
        attrs = generate_attributes(static_cast<std::size_t>(cfg.n),
                                    AttributeSchema::defaults(false), attr_rng);
      }
      RunArtifact artifact =
          run_realworld_seeded(cfg, *handle.policy, seed, attrs);
      if (!artifact.report.value("aborted", false)) analyze(artifact);
      return artifact;
    }
    case ExperimentKind::survey: {
      RunArtifact artifact = run_survey(cfg, handle);
      if (!artifact.report.value("aborted", false)) analyze(artifact);
      return artifact;
    }
  }
  throw ConfigError("unknown experiment kind");
}

}  // namespace netform
