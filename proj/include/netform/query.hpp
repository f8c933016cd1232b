#pragma once

#include <string>
#include <vector>

#include "netform/graph.hpp"
#include "netform/netgen.hpp"
#include "netform/policy.hpp"
#include "netform/prompt.hpp"

namespace netform {

/// Which feature block the prompt shows for each profile.
enum class PromptLayout {
  neighbors,               // {"name", "neighbors": [...]}        (P1, P5)
  common_neighbors_list,   // {"name", "common_neighbors": [...]} (P2)
  common_neighbors_count,  // {"name", "common_neighbors": n}     (P2 variant)
  attributes,              // {"name", attribute map as strings}  (P3)
  realworld,               // {"name", attribute map, ints detected}
};

inline const char* layout_name(PromptLayout layout) {
  switch (layout) {
    case PromptLayout::neighbors: return "neighbors";
    case PromptLayout::common_neighbors_list: return "common_neighbors_list";
    case PromptLayout::common_neighbors_count: return "common_neighbors_count";
    case PromptLayout::attributes: return "attributes";
    case PromptLayout::realworld: return "realworld";
  }
  return "neighbors";
}

inline PromptLayout parse_layout(const std::string& name) {
  if (name == "neighbors") return PromptLayout::neighbors;
  if (name == "common_neighbors_list") return PromptLayout::common_neighbors_list;
  if (name == "common_neighbors_count") return PromptLayout::common_neighbors_count;
  if (name == "attributes") return PromptLayout::attributes;
  if (name == "realworld") return PromptLayout::realworld;
  throw ConfigError("unknown prompt layout '" + name + "'");
}

namespace query_detail {

inline OrderedJson neighbor_array(const Graph& g, NodeId v) {
  OrderedJson arr = OrderedJson::array();
  for (NodeId u : g.neighbors(v)) arr.push_back(u);
  return arr;
}

inline OrderedJson common_array(const Graph& g, NodeId self, NodeId v) {
  OrderedJson arr = OrderedJson::array();
  for (NodeId u : g.common_neighbors(self, v)) arr.push_back(u);
  return arr;
}

/// Attribute values render as JSON integers when they look like integers
/// and integer detection is on (real-world columns such as graduation
/// years); otherwise as strings.
inline OrderedJson attribute_value(const std::string& value, bool detect_ints) {
  if (detect_ints && !value.empty() &&
      value.find_first_not_of("0123456789") == std::string::npos &&
      !(value.size() > 1 && value[0] == '0'))
    return OrderedJson(std::stoll(value));
  return OrderedJson(value);
}

inline OrderedJson attribute_map(const AttributeTable& attrs, NodeId v,
                                 bool detect_ints) {
  OrderedJson obj = OrderedJson::object();
  const auto& row = attrs.rows.at(static_cast<std::size_t>(v));
  for (std::size_t f = 0; f < attrs.feature_names.size(); ++f)
    obj[attrs.feature_names[f]] = attribute_value(row[f], detect_ints);
  return obj;
}

}  // namespace query_detail

/// Build the profile for one node under the given layout.  `self` is the
/// query node (needed for the relative common-neighbor layouts); pass the
/// node itself to build its own profile, which then omits the relative
/// block.
inline CandidateProfile make_profile(const Graph& g, const AttributeTable* attrs,
                                     PromptLayout layout, NodeId self, NodeId v) {
  CandidateProfile p;
  p.display_name = std::to_string(v);
  switch (layout) {
    case PromptLayout::neighbors:
      p.features["neighbors"] = query_detail::neighbor_array(g, v);
      break;
    case PromptLayout::common_neighbors_list:
      if (v != self)
        p.features["common_neighbors"] = query_detail::common_array(g, self, v);
      break;
    case PromptLayout::common_neighbors_count:
      if (v != self)
        p.features["common_neighbors"] =
            static_cast<int>(g.common_neighbor_count(self, v));
      break;
    case PromptLayout::attributes:
    case PromptLayout::realworld:
      if (attrs == nullptr || attrs->empty())
        throw DataError("make_profile: attribute layout without attributes");
      p.features = query_detail::attribute_map(
          *attrs, v, layout == PromptLayout::realworld);
      break;
  }
  return p;
}

/// Assemble the full decision query for one step: prompt bundle plus the
/// candidate ids and raw (degree, similarity, common-neighbor) features in
/// presentation order.
inline DecisionQuery make_query(const Graph& g, const AttributeTable* attrs,
                                PromptLayout layout, Environment environment,
                                PromptVariant variant, NodeId chooser,
                                const std::vector<NodeId>& candidates,
                                int max_selections) {
  DecisionQuery query;
  query.bundle.environment = environment;
  query.bundle.variant = variant;
  query.bundle.max_selections = max_selections;
  query.bundle.self_profile = make_profile(g, attrs, layout, chooser, chooser);
  query.candidate_nodes = candidates;
  for (NodeId v : candidates) {
    query.bundle.candidates.push_back(make_profile(g, attrs, layout, chooser, v));
    FeatureVector raw{};
    raw[0] = static_cast<double>(g.degree(v));
    raw[1] = (attrs != nullptr && !attrs->empty())
                 ? static_cast<double>(attrs->similarity(chooser, v))
                 : 0.0;
    raw[2] = static_cast<double>(g.common_neighbor_count(chooser, v));
    query.raw_features.push_back(raw);
  }
  return query;
}

}  // namespace netform
