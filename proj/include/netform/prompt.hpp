#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netform/borda.hpp"
#include "netform/errors.hpp"

namespace netform {

using OrderedJson = nlohmann::ordered_json;

/// Contextual setting woven into the first task sentence.
enum class Environment { baseline, school, work, community };

/// Output-schema ordering: the cot variant asks for the reason before the
/// name so the model reasons before it commits to a choice.
enum class PromptVariant { standard, cot };

inline const char* environment_name(Environment e) {
  switch (e) {
    case Environment::baseline: return "baseline";
    case Environment::school: return "school";
    case Environment::work: return "work";
    case Environment::community: return "community";
  }
  return "baseline";
}

inline Environment parse_environment(const std::string& name) {
  if (name == "baseline") return Environment::baseline;
  if (name == "school") return Environment::school;
  if (name == "work") return Environment::work;
  if (name == "community") return Environment::community;
  throw ConfigError("unknown environment '" + name +
                    "' (expected baseline|school|work|community)");
}

inline const char* variant_name(PromptVariant v) {
  return v == PromptVariant::cot ? "cot" : "standard";
}

inline PromptVariant parse_variant(const std::string& name) {
  if (name == "standard") return PromptVariant::standard;
  if (name == "cot") return PromptVariant::cot;
  throw ConfigError("unknown prompt variant '" + name +
                    "' (expected standard|cot)");
}

/// One profile shown to the agent: a display name plus the experiment's
/// feature block (neighbors list, common-neighbor list or count, attribute
/// map, or degree), kept as ordered JSON so rendering is byte-stable.
struct CandidateProfile {
  std::string display_name;
  OrderedJson features = OrderedJson::object();
};

/// Everything needed to render one decision prompt.
struct PromptBundle {
  Environment environment = Environment::baseline;
  CandidateProfile self_profile;
  std::vector<CandidateProfile> candidates;
  int max_selections = 1;
  PromptVariant variant = PromptVariant::standard;
};

/// One ranked selection extracted from a model response.
struct SelectionEntry {
  std::string name;    // canonical candidate display name
  std::string reason;  // free text; may be empty
};

/// A policy's answer to one query: ranked selections plus provenance.
struct PolicyDecision {
  std::vector<SelectionEntry> selections;  // ranked, length <= max_selections
  std::string raw_response;                // verbatim model output (if any)
  std::string policy;                      // policy fingerprint for the log
  int dropped_unknown = 0;                 // entries naming no candidate
};

namespace prompt_detail {

/// Names are digits in every experiment layout; render them as JSON numbers
/// (matching the feature-representation examples) and fall back to strings.
inline OrderedJson name_value(const std::string& display_name) {
  if (!display_name.empty() &&
      display_name.find_first_not_of("0123456789") == std::string::npos &&
      !(display_name.size() > 1 && display_name[0] == '0'))
    return OrderedJson(std::stoll(display_name));
  return OrderedJson(display_name);
}

inline OrderedJson profile_json(const CandidateProfile& p) {
  OrderedJson j = OrderedJson::object();
  j["name"] = name_value(p.display_name);
  for (const auto& item : p.features.items()) j[item.key()] = item.value();
  return j;
}

inline void check_bundle(const PromptBundle& b) {
  if (b.candidates.empty())
    throw DataError("render_prompt: candidate list is empty");
  if (b.max_selections < 1)
    throw DataError("render_prompt: max_selections must be at least 1");
  std::set<std::string> names;
  for (const auto& c : b.candidates)
    if (!names.insert(c.display_name).second)
      throw DataError("render_prompt: duplicate candidate display name '" +
                      c.display_name + "'");
}

inline std::string environment_prefix(Environment e) {
  switch (e) {
    case Environment::school: return "You are located in a school. ";
    case Environment::work: return "You are located in a workplace. ";
    case Environment::community: return "You are located in a community. ";
    case Environment::baseline: return "";
  }
  return "";
}

}  // namespace prompt_detail

/// Render the decision prompt: task sentence (with environment prefix),
/// own profile and candidate profiles as indented JSON inside chevrons,
/// the output schema (reason precedes name in the cot variant), and the
/// notes with the selection budget substituted literally.
inline std::string render_prompt(const PromptBundle& b) {
  prompt_detail::check_bundle(b);
  std::string out;
  out += "# Task\n";
  out += prompt_detail::environment_prefix(b.environment);
  out += "Your task is to select a set of people to be friends with.\n\n";

  out += "# Profile\n";
  out += "Your profile is given below after chevrons:\n";
  out += "<PROFILE>\n";
  out += prompt_detail::profile_json(b.self_profile).dump(2);
  out += "\n</PROFILE>\n\n";

  out += "# Candidate Profiles\n";
  out += "The candidate profiles to be friends with are given below after chevrons:\n\n";
  OrderedJson arr = OrderedJson::array();
  for (const auto& c : b.candidates) arr.push_back(prompt_detail::profile_json(c));
  out += "<PROFILES>\n";
  out += arr.dump(2);
  out += "\n</PROFILES>\n\n";

  out += "# Output\n";
  out += "The output should be given a list of JSON objects with the following structure\n\n";
  out += "[\n    {{\n";
  if (b.variant == PromptVariant::cot) {
    out += "        \"reason\" : reason for selecting the person,\n";
    out += "        \"name\" : name of the person you selected\n";
  } else {
    out += "        \"name\" : name of the person you selected,\n";
    out += "        \"reason\" : reason for selecting the person\n";
  }
  out += "    }}, ...\n]\n\n";

  out += "# Notes\n";
  out += "- The output must be a list of JSON objects ranked in the order of preference.\n";
  out += "- You can make at most " + std::to_string(b.max_selections) +
         " selections.\n";
  return out;
}

/// Survey context: who the respondent is pretending to be.
enum class SurveyContext { social, company };

inline const char* survey_context_name(SurveyContext c) {
  return c == SurveyContext::social ? "social" : "company";
}

inline SurveyContext parse_survey_context(const std::string& name) {
  if (name == "social") return SurveyContext::social;
  if (name == "company") return SurveyContext::company;
  throw ConfigError("unknown survey context '" + name +
                    "' (expected social|company)");
}

inline const char* survey_profile_text(SurveyContext c) {
  return c == SurveyContext::social
             ? "You are an undergraduate student at a university. You are "
               "looking for friends to connect with on a social network."
             : "You are an employee at a company. You are looking for "
               "colleagues to connect with on a company network.";
}

/// One survey instance: a context plus its three generated alternatives.
struct SurveyBundle {
  SurveyContext context = SurveyContext::social;
  std::vector<CandidateProfile> candidates;
};

/// Render the survey prompt: single-selection, single JSON object output
/// with explicit importance-ranking fields and mutually exclusive ranks.
inline std::string render_survey_prompt(const SurveyBundle& b) {
  if (b.candidates.empty())
    throw DataError("render_survey_prompt: candidate list is empty");
  std::string out;
  out += "# Task\n";
  out += "Your task is to select a set of people to be friends with.\n\n";

  out += "# Profile\n";
  out += survey_profile_text(b.context);
  out += "\n\n";

  out += "# Candidate Profiles\n";
  out += "The candidate profiles to be friends with are given below after chevrons:\n\n";
  OrderedJson arr = OrderedJson::array();
  for (const auto& c : b.candidates) arr.push_back(prompt_detail::profile_json(c));
  out += "<PROFILES>\n";
  out += arr.dump(2);
  out += "\n</PROFILES>\n\n";

  out += "# Output\n";
  out += "The output should be as a JSON object with the following structure\n\n";
  out += "{{\n";
  out += "    \"name\" : name of the person you selected (integer format),\n";
  out += "    \"reason\" : reason for selecting the person,\n";
  out += "    \"ranking_degree\" : ranking of how much you based your decision on the degree of the person (1 = most important, 2 = average important, 3 = least important),\n";
  out += "    \"ranking_similarity\" : ranking of how much you based your decision on the similarity of the person (1 = most important, 2 = average important, 3 = least important),\n";
  out += "    \"ranking_common_friends\" : ranking of how much you based your decision on the number of common friends with the person (1 = most important, 2 = average important, 3 = least important)\n";
  out += "}}\n\n";

  out += "# Notes\n";
  out += "* The output must be a single JSON object ranked in the order of preference.\n";
  out += "* You can make at most 1 selection.\n";
  out += "* Your output must be contained within the json markdown cue.\n";
  out += "* Rankings must be mutually exclusive, i.e. you cannot have the same "
         "ranking for two different attributes.\n";
  return out;
}

namespace prompt_detail {

/// Locate the next balanced JSON span starting with `open` at or after
/// `from`, honoring strings and escapes.  An opener that never balances is
/// skipped and the scan resumes at the next opener, so stray brackets in
/// prose cannot hide a later well-formed span.  Writes the span's start
/// index; nullopt when no complete span follows.
inline std::optional<std::string> next_json_span(const std::string& text,
                                                 char open, char close,
                                                 std::size_t from,
                                                 std::size_t* span_begin) {
  for (std::size_t start = text.find(open, from); start != std::string::npos;
       start = text.find(open, start + 1)) {
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
      const char c = text[i];
      if (in_string) {
        if (escaped)
          escaped = false;
        else if (c == '\\')
          escaped = true;
        else if (c == '"')
          in_string = false;
        continue;
      }
      if (c == '"') {
        in_string = true;
      } else if (c == open) {
        ++depth;
      } else if (c == close) {
        --depth;
        if (depth == 0) {
          *span_begin = start;
          return text.substr(start, i - start + 1);
        }
      }
    }
  }
  return std::nullopt;
}

/// Canonicalize a response name against the candidate set: exact display
/// name, integer form, or a "Person N" alias.  Empty when unknown.
inline std::string match_candidate(const OrderedJson& value,
                                   const std::set<std::string>& names) {
  std::string token;
  if (value.is_string())
    token = value.get<std::string>();
  else if (value.is_number_integer())
    token = std::to_string(value.get<long long>());
  else
    return "";
  if (names.count(token)) return token;
  const std::string prefix = "Person ";
  if (token.rfind(prefix, 0) == 0) {
    const std::string stripped = token.substr(prefix.size());
    if (names.count(stripped)) return stripped;
  }
  return "";
}

}  // namespace prompt_detail

/// Extract ranked selections from a raw model response: the first
/// parseable JSON array (bare or inside a fenced block) wins; entries with
/// unknown names are dropped and counted; duplicates keep their first
/// position; the list is truncated to the selection budget.
/// Throws PolicyError when no array parses or no valid name remains.
inline PolicyDecision parse_response(const std::string& text,
                                     const PromptBundle& bundle) {
  std::set<std::string> names;
  for (const auto& c : bundle.candidates) names.insert(c.display_name);

  bool saw_array = false;
  std::size_t search = 0;
  while (true) {
    std::size_t begin = 0;
    const auto span = prompt_detail::next_json_span(text, '[', ']', search, &begin);
    if (!span) break;
    search = begin + 1;
    const OrderedJson parsed = OrderedJson::parse(*span, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_array()) continue;
    saw_array = true;

    PolicyDecision decision;
    decision.raw_response = text;
    std::set<std::string> taken;
    for (const auto& entry : parsed) {
      OrderedJson name_field;
      std::string reason;
      if (entry.is_object()) {
        if (!entry.contains("name")) continue;
        name_field = entry.at("name");
        if (entry.contains("reason") && entry.at("reason").is_string())
          reason = entry.at("reason").get<std::string>();
      } else {
        name_field = entry;  // tolerate bare names
      }
      const std::string canonical = prompt_detail::match_candidate(name_field, names);
      if (canonical.empty()) {
        ++decision.dropped_unknown;
        continue;
      }
      if (!taken.insert(canonical).second) continue;
      if (static_cast<int>(decision.selections.size()) < bundle.max_selections)
        decision.selections.push_back({canonical, reason});
    }
    if (!decision.selections.empty()) return decision;
  }

  throw PolicyError(saw_array
                        ? "parse_response: no selection named a candidate"
                        : "parse_response: no parseable JSON array in response");
}

/// A validated survey answer: the chosen alternative plus the respondent's
/// importance ranking of the three criteria.
struct SurveyResponse {
  std::string name;
  std::string reason;
  CriterionRanking ranking;
  std::string raw_response;
};

/// Extract the single JSON object answer of the survey prompt and validate
/// the choice and the mutual exclusivity of the rankings.
inline SurveyResponse parse_survey_response(const std::string& text,
                                            const SurveyBundle& bundle) {
  std::set<std::string> names;
  for (const auto& c : bundle.candidates) names.insert(c.display_name);

  bool saw_object = false;
  std::size_t search = 0;
  while (true) {
    std::size_t begin = 0;
    const auto span = prompt_detail::next_json_span(text, '{', '}', search, &begin);
    if (!span) break;
    search = begin + 1;
    const OrderedJson parsed = OrderedJson::parse(*span, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) continue;
    saw_object = true;
    if (!parsed.contains("name") || !parsed.contains("ranking_degree") ||
        !parsed.contains("ranking_similarity") ||
        !parsed.contains("ranking_common_friends"))
      continue;
    const std::string canonical =
        prompt_detail::match_candidate(parsed.at("name"), names);
    if (canonical.empty()) continue;
    const auto rank_of = [&](const char* key) {
      const auto& v = parsed.at(key);
      return v.is_number_integer() ? static_cast<int>(v.get<long long>()) : 0;
    };
    SurveyResponse response;
    response.name = canonical;
    response.ranking.degree = rank_of("ranking_degree");
    response.ranking.similarity = rank_of("ranking_similarity");
    response.ranking.common = rank_of("ranking_common_friends");
    if (parsed.contains("reason") && parsed.at("reason").is_string())
      response.reason = parsed.at("reason").get<std::string>();
    response.raw_response = text;
    if (!response.ranking.is_permutation())
      throw PolicyError("parse_survey_response: rankings are not a "
                        "permutation of {1,2,3}");
    return response;
  }
  throw PolicyError(saw_object
                        ? "parse_survey_response: no object answers the survey"
                        : "parse_survey_response: no parseable JSON object");
}

}  // namespace netform
