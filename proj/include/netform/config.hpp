#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "netform/choice.hpp"
#include "netform/errors.hpp"
#include "netform/hash.hpp"
#include "netform/llm_client.hpp"
#include "netform/prompt.hpp"
#include "netform/query.hpp"

namespace netform {

enum class ExperimentKind { p1, p2, p3, p5, realworld, survey };

inline const char* kind_name(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::p1: return "p1";
    case ExperimentKind::p2: return "p2";
    case ExperimentKind::p3: return "p3";
    case ExperimentKind::p5: return "p5";
    case ExperimentKind::realworld: return "realworld";
    case ExperimentKind::survey: return "survey";
  }
  return "p1";
}

inline ExperimentKind parse_kind(const std::string& name) {
  if (name == "p1") return ExperimentKind::p1;
  if (name == "p2") return ExperimentKind::p2;
  if (name == "p3") return ExperimentKind::p3;
  if (name == "p5") return ExperimentKind::p5;
  if (name == "realworld") return ExperimentKind::realworld;
  if (name == "survey") return ExperimentKind::survey;
  throw ConfigError("unknown experiment kind '" + name + "'");
}

enum class PolicyKind { random, mnl, llm };

inline const char* policy_kind_name(PolicyKind p) {
  switch (p) {
    case PolicyKind::random: return "random";
    case PolicyKind::mnl: return "mnl";
    case PolicyKind::llm: return "llm";
  }
  return "random";
}

enum class SamplingStrategy { uniform, recsys };

/// Full declarative description of one run.  Defaults mirror the paper's
/// setups (P1 n=200 delta=1; P2 n=50 T=50; P3 n=50 delta=5; P5 k=5).
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::p1;

  PolicyKind policy = PolicyKind::random;
  ThetaVector theta{};  // mnl policy coefficients (PA, H, TC)
  LlmEndpointConfig llm;

  Environment environment = Environment::baseline;
  PromptVariant variant = PromptVariant::standard;

  std::uint64_t seed = 1;
  std::uint64_t policy_seed = 0;  // 0: derive from the master seed
  bool shuffle_candidates = false;
  bool mutual_confirmation = false;
  int null_replicas = 10;

  int n = 0;       // node count (0: kind default)
  int steps = 0;   // decision steps T (0: kind default)
  int delta = 0;   // selection budget (0: kind default)

  // p2
  std::string seed_kind = "sbm";  // sbm | er
  double sbm_p_in = 0.5;
  double sbm_p_out = 0.1;
  int blocks = 2;
  double er_p = 0.1;
  bool common_as_count = false;

  // p3
  bool distractor = false;

  // p5
  int k = 5;
  double beta = 0.25;
  int grid_min = 10;
  int grid_max = 100;
  int grid_step = 10;
  int runs_per_size = 3;
  int reference_n = 50;
  int ws_reference_runs = 30;

  // realworld
  std::string edges_path;       // empty: synthetic seed
  std::string attributes_path;  // empty: generated attributes
  int alternatives = 15;        // A
  SamplingStrategy strategy = SamplingStrategy::uniform;
  int recsys_sample_per_class = 300;

  // survey
  int respondents = 100;

  /// Kind defaults applied after parsing.
  void resolve_defaults() {
    switch (kind) {
      case ExperimentKind::p1:
        if (n == 0) n = 200;
        if (delta == 0) delta = 1;
        break;
      case ExperimentKind::p2:
        if (n == 0) n = 50;
        if (steps == 0) steps = 50;
        if (delta == 0) delta = 1;
        break;
      case ExperimentKind::p3:
        if (n == 0) n = 50;
        if (delta == 0) delta = 5;
        break;
      case ExperimentKind::p5:
        if (n == 0) n = reference_n;
        if (delta == 0) delta = 1;
        break;
      case ExperimentKind::realworld:
        if (n == 0) n = 500;
        if (steps == 0) steps = 400;
        if (delta == 0) delta = 1;
        break;
      case ExperimentKind::survey:
        if (delta == 0) delta = 1;
        break;
    }
  }

  void validate() const {
    const auto positive = [](int value, const char* field) {
      if (value <= 0)
        throw ConfigError(std::string("config field '") + field +
                          "' must be positive");
    };
    const auto probability = [](double value, const char* field) {
      if (!(value >= 0.0 && value <= 1.0))
        throw ConfigError(std::string("config field '") + field +
                          "' must lie in [0, 1]");
    };
    if (kind != ExperimentKind::survey) positive(n, "n");
    positive(delta, "delta");
    if (null_replicas < 0)
      throw ConfigError("config field 'null_replicas' must be non-negative");
    probability(sbm_p_in, "sbm_p_in");
    probability(sbm_p_out, "sbm_p_out");
    probability(er_p, "er_p");
    probability(beta, "beta");
    if (seed_kind != "sbm" && seed_kind != "er")
      throw ConfigError("config field 'seed_kind' must be sbm or er");
    if (kind == ExperimentKind::p2 || kind == ExperimentKind::realworld)
      positive(steps, "T");
    if (kind == ExperimentKind::p5) {
      positive(k, "k");
      positive(grid_min, "grid_min");
      positive(grid_step, "grid_step");
      positive(runs_per_size, "runs_per_size");
      positive(reference_n, "reference_n");
      positive(ws_reference_runs, "ws_reference_runs");
      if (grid_max < grid_min)
        throw ConfigError("config field 'grid_max' must be >= grid_min");
      if (k < 2) throw ConfigError("config field 'k' must be at least 2");
    }
    if (kind == ExperimentKind::realworld) {
      positive(alternatives, "A");
      positive(recsys_sample_per_class, "recsys_sample_per_class");
      if (edges_path.empty() != attributes_path.empty())
        throw ConfigError(
            "config fields 'edges' and 'attributes' must be given together");
    }
    if (kind == ExperimentKind::survey) positive(respondents, "respondents");
    if (policy == PolicyKind::llm) {
      if (llm.base_url.empty())
        throw ConfigError("config field 'llm_base_url' is required for the "
                          "llm policy");
      if (llm.model.empty())
        throw ConfigError("config field 'llm_model' is required for the llm "
                          "policy");
      if (llm.temperature < 0.0 || llm.temperature > 2.0)
        throw ConfigError("config field 'llm_temperature' must lie in [0, 2]");
    }
  }
};

namespace config_detail {

/// Shortest round-trippable decimal form, locale-independent.
inline std::string format_double(double value) {
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

inline std::string strip(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

inline std::string unquote(const std::string& text) {
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"')
    return text.substr(1, text.size() - 2);
  return text;
}

struct FieldContext {
  int line;
  const std::string* key;
};

inline ConfigError field_error(const FieldContext& ctx, const std::string& what) {
  return ConfigError("config line " + std::to_string(ctx.line) + ", field '" +
                     *ctx.key + "': " + what);
}

inline long long to_int(const FieldContext& ctx, const std::string& value) {
  long long out = 0;
  const auto result =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (result.ec != std::errc() || result.ptr != value.data() + value.size())
    throw field_error(ctx, "expected an integer, got '" + value + "'");
  return out;
}

inline double to_double(const FieldContext& ctx, const std::string& value) {
  try {
    std::size_t used = 0;
    const double out = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return out;
  } catch (const std::exception&) {
    throw field_error(ctx, "expected a number, got '" + value + "'");
  }
}

inline bool to_bool(const FieldContext& ctx, const std::string& value) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw field_error(ctx, "expected true or false, got '" + value + "'");
}

}  // namespace config_detail

/// Parse the key = value configuration document ('#' comments, optional
/// quotes on strings).  Unknown keys and malformed values carry line and
/// field diagnostics.  Defaults are resolved and the result validated.
inline ExperimentConfig parse_config(const std::string& text) {
  using namespace config_detail;
  ExperimentConfig cfg;
  std::istringstream stream(text);
  std::string raw_line;
  int line_no = 0;
  bool saw_kind = false;
  while (std::getline(stream, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = strip(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + strip(raw_line) +
                        "'");
    const std::string key = strip(line.substr(0, eq));
    const std::string value = unquote(strip(line.substr(eq + 1)));
    if (key.empty())
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": empty key");
    const FieldContext ctx{line_no, &key};

    if (key == "kind") {
      cfg.kind = parse_kind(value);
      saw_kind = true;
    } else if (key == "policy") {
      if (value == "random") cfg.policy = PolicyKind::random;
      else if (value == "mnl") cfg.policy = PolicyKind::mnl;
      else if (value == "llm") cfg.policy = PolicyKind::llm;
      else throw field_error(ctx, "expected random|mnl|llm, got '" + value + "'");
    } else if (key == "theta_pa") {
      cfg.theta[0] = to_double(ctx, value);
    } else if (key == "theta_h") {
      cfg.theta[1] = to_double(ctx, value);
    } else if (key == "theta_tc") {
      cfg.theta[2] = to_double(ctx, value);
    } else if (key == "environment") {
      cfg.environment = parse_environment(value);
    } else if (key == "variant") {
      cfg.variant = parse_variant(value);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(to_int(ctx, value));
    } else if (key == "policy_seed") {
      cfg.policy_seed = static_cast<std::uint64_t>(to_int(ctx, value));
    } else if (key == "shuffle_candidates") {
      cfg.shuffle_candidates = to_bool(ctx, value);
    } else if (key == "mutual_confirmation") {
      cfg.mutual_confirmation = to_bool(ctx, value);
    } else if (key == "null_replicas") {
      cfg.null_replicas = static_cast<int>(to_int(ctx, value));
    } else if (key == "n") {
      cfg.n = static_cast<int>(to_int(ctx, value));
    } else if (key == "T") {
      cfg.steps = static_cast<int>(to_int(ctx, value));
    } else if (key == "delta") {
      cfg.delta = static_cast<int>(to_int(ctx, value));
    } else if (key == "seed_kind") {
      cfg.seed_kind = value;
    } else if (key == "sbm_p_in") {
      cfg.sbm_p_in = to_double(ctx, value);
    } else if (key == "sbm_p_out") {
      cfg.sbm_p_out = to_double(ctx, value);
    } else if (key == "blocks") {
      cfg.blocks = static_cast<int>(to_int(ctx, value));
    } else if (key == "er_p") {
      cfg.er_p = to_double(ctx, value);
    } else if (key == "common_as_count") {
      cfg.common_as_count = to_bool(ctx, value);
    } else if (key == "distractor") {
      cfg.distractor = to_bool(ctx, value);
    } else if (key == "k") {
      cfg.k = static_cast<int>(to_int(ctx, value));
    } else if (key == "beta") {
      cfg.beta = to_double(ctx, value);
    } else if (key == "grid_min") {
      cfg.grid_min = static_cast<int>(to_int(ctx, value));
    } else if (key == "grid_max") {
      cfg.grid_max = static_cast<int>(to_int(ctx, value));
    } else if (key == "grid_step") {
      cfg.grid_step = static_cast<int>(to_int(ctx, value));
    } else if (key == "runs_per_size") {
      cfg.runs_per_size = static_cast<int>(to_int(ctx, value));
    } else if (key == "reference_n") {
      cfg.reference_n = static_cast<int>(to_int(ctx, value));
    } else if (key == "ws_reference_runs") {
      cfg.ws_reference_runs = static_cast<int>(to_int(ctx, value));
    } else if (key == "edges") {
      cfg.edges_path = value;
    } else if (key == "attributes") {
      cfg.attributes_path = value;
    } else if (key == "A") {
      cfg.alternatives = static_cast<int>(to_int(ctx, value));
    } else if (key == "strategy") {
      if (value == "uniform") cfg.strategy = SamplingStrategy::uniform;
      else if (value == "recsys") cfg.strategy = SamplingStrategy::recsys;
      else throw field_error(ctx, "expected uniform|recsys, got '" + value + "'");
    } else if (key == "recsys_sample_per_class") {
      cfg.recsys_sample_per_class = static_cast<int>(to_int(ctx, value));
    } else if (key == "respondents") {
      cfg.respondents = static_cast<int>(to_int(ctx, value));
    } else if (key == "llm_base_url") {
      cfg.llm.base_url = value;
    } else if (key == "llm_model") {
      cfg.llm.model = value;
    } else if (key == "llm_temperature") {
      cfg.llm.temperature = to_double(ctx, value);
    } else if (key == "llm_timeout_seconds") {
      cfg.llm.timeout_seconds = static_cast<int>(to_int(ctx, value));
    } else if (key == "llm_max_retries") {
      cfg.llm.max_retries = static_cast<int>(to_int(ctx, value));
    } else if (key == "llm_cache_dir") {
      cfg.llm.cache_dir = value;
    } else if (key == "llm_max_concurrent") {
      cfg.llm.max_concurrent = static_cast<int>(to_int(ctx, value));
    } else {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    }
  }
  if (!saw_kind) throw ConfigError("config is missing the 'kind' field");
  cfg.resolve_defaults();
  cfg.validate();
  return cfg;
}

/// Canonical serialization: every effective field, sorted by key, one per
/// line.  Hashing this text yields the artifact fingerprint, so two runs
/// share a fingerprint exactly when their resolved configurations agree.
inline std::string canonical_config(const ExperimentConfig& cfg) {
  using config_detail::format_double;
  std::map<std::string, std::string> fields;
  fields["kind"] = kind_name(cfg.kind);
  fields["policy"] = policy_kind_name(cfg.policy);
  fields["theta_pa"] = format_double(cfg.theta[0]);
  fields["theta_h"] = format_double(cfg.theta[1]);
  fields["theta_tc"] = format_double(cfg.theta[2]);
  fields["environment"] = environment_name(cfg.environment);
  fields["variant"] = variant_name(cfg.variant);
  fields["seed"] = std::to_string(cfg.seed);
  fields["policy_seed"] = std::to_string(cfg.policy_seed);
  fields["shuffle_candidates"] = cfg.shuffle_candidates ? "true" : "false";
  fields["mutual_confirmation"] = cfg.mutual_confirmation ? "true" : "false";
  fields["null_replicas"] = std::to_string(cfg.null_replicas);
  fields["n"] = std::to_string(cfg.n);
  fields["T"] = std::to_string(cfg.steps);
  fields["delta"] = std::to_string(cfg.delta);
  fields["seed_kind"] = cfg.seed_kind;
  fields["sbm_p_in"] = format_double(cfg.sbm_p_in);
  fields["sbm_p_out"] = format_double(cfg.sbm_p_out);
  fields["blocks"] = std::to_string(cfg.blocks);
  fields["er_p"] = format_double(cfg.er_p);
  fields["common_as_count"] = cfg.common_as_count ? "true" : "false";
  fields["distractor"] = cfg.distractor ? "true" : "false";
  fields["k"] = std::to_string(cfg.k);
  fields["beta"] = format_double(cfg.beta);
  fields["grid_min"] = std::to_string(cfg.grid_min);
  fields["grid_max"] = std::to_string(cfg.grid_max);
  fields["grid_step"] = std::to_string(cfg.grid_step);
  fields["runs_per_size"] = std::to_string(cfg.runs_per_size);
  fields["reference_n"] = std::to_string(cfg.reference_n);
  fields["ws_reference_runs"] = std::to_string(cfg.ws_reference_runs);
  fields["edges"] = cfg.edges_path;
  fields["attributes"] = cfg.attributes_path;
  fields["A"] = std::to_string(cfg.alternatives);
  fields["strategy"] =
      cfg.strategy == SamplingStrategy::uniform ? "uniform" : "recsys";
  fields["recsys_sample_per_class"] = std::to_string(cfg.recsys_sample_per_class);
  fields["respondents"] = std::to_string(cfg.respondents);
  fields["llm_base_url"] = cfg.llm.base_url;
  fields["llm_model"] = cfg.llm.model;
  fields["llm_temperature"] = format_double(cfg.llm.temperature);
  fields["llm_timeout_seconds"] = std::to_string(cfg.llm.timeout_seconds);
  fields["llm_max_retries"] = std::to_string(cfg.llm.max_retries);
  fields["llm_cache_dir"] = cfg.llm.cache_dir;
  fields["llm_max_concurrent"] = std::to_string(cfg.llm.max_concurrent);

  std::string out;
  for (const auto& [key, value] : fields) {
    out += key;
    out += " = ";
    out += value;
    out += '\n';
  }
  return out;
}

inline std::string config_fingerprint(const ExperimentConfig& cfg) {
  return sha256_hex(canonical_config(cfg));
}

}  // namespace netform
