#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netform/choice.hpp"
#include "netform/errors.hpp"
#include "netform/graph.hpp"
#include "netform/prompt.hpp"
#include "netform/rng.hpp"

namespace netform {

/// One decision query: the renderable prompt bundle plus the numeric side
/// the scripted policies and the estimation stack consume.  Candidate
/// order is shared across all three views.
struct DecisionQuery {
  PromptBundle bundle;
  std::vector<NodeId> candidate_nodes;      // parallel to bundle.candidates
  std::vector<FeatureVector> raw_features;  // raw (degree, similarity, common)
};

namespace policy_detail {

/// Enforce the universal decision invariants: selections name candidates,
/// never repeat, and respect the selection budget.
inline void check_decision(const PolicyDecision& decision,
                           const PromptBundle& bundle) {
  if (static_cast<int>(decision.selections.size()) > bundle.max_selections)
    throw PolicyError("policy returned more selections than allowed");
  std::set<std::string> names;
  for (const auto& c : bundle.candidates) names.insert(c.display_name);
  std::set<std::string> seen;
  for (const auto& s : decision.selections) {
    if (!names.count(s.name))
      throw PolicyError("policy selected unknown candidate '" + s.name + "'");
    if (!seen.insert(s.name).second)
      throw PolicyError("policy selected candidate '" + s.name + "' twice");
  }
}

}  // namespace policy_detail

/// Decision-policy contract: map a query to a ranked selection set.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual std::string name() const = 0;
  virtual PolicyDecision decide(const DecisionQuery& query, Rng& rng) = 0;
};

/// Uniform-random null: sample the budgeted number of candidates without
/// replacement, order of drawing = rank.
class RandomPolicy final : public Policy {
 public:
  std::string name() const override { return "random"; }

  PolicyDecision decide(const DecisionQuery& query, Rng& rng) override {
    const auto& bundle = query.bundle;
    prompt_detail::check_bundle(bundle);
    const auto picks = decide_random(bundle.candidates.size(),
                                     bundle.max_selections, rng);
    PolicyDecision decision;
    decision.policy = name();
    for (int idx : picks)
      decision.selections.push_back(
          {bundle.candidates[static_cast<std::size_t>(idx)].display_name, ""});
    policy_detail::check_decision(decision, bundle);
    return decision;
  }
};

/// Scripted multinomial-logit agent: Gumbel-perturbed linear utility over
/// the per-set transformed features, top-budget by noisy utility.
class MnlPolicy final : public Policy {
 public:
  explicit MnlPolicy(const ThetaVector& theta) : theta_(theta) {}

  std::string name() const override {
    std::ostringstream out;
    out << "mnl(" << theta_[0] << "," << theta_[1] << "," << theta_[2] << ")";
    return out.str();
  }

  PolicyDecision decide(const DecisionQuery& query, Rng& rng) override {
    const auto& bundle = query.bundle;
    prompt_detail::check_bundle(bundle);
    if (query.raw_features.size() != bundle.candidates.size())
      throw PolicyError("mnl policy: feature rows do not match candidates");
    const auto x = transform_feature_set(query.raw_features);
    const auto picks = decide_mnl(theta_, x, bundle.max_selections, rng);
    PolicyDecision decision;
    decision.policy = name();
    for (int idx : picks)
      decision.selections.push_back(
          {bundle.candidates[static_cast<std::size_t>(idx)].display_name, ""});
    policy_detail::check_decision(decision, bundle);
    return decision;
  }

  const ThetaVector& theta() const { return theta_; }

 private:
  ThetaVector theta_;
};

}  // namespace netform
