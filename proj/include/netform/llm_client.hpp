#pragma once

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <sstream>
#include <string>

#include <httplib.h>
#ifdef _res
#undef _res  // glibc resolv.h macro; mangles unrelated declarations
#endif
#include <json.hpp>

#include "netform/errors.hpp"
#include "netform/hash.hpp"
#include "netform/policy.hpp"
#include "netform/prompt.hpp"

namespace netform {

/// Connection settings for the chat-style HTTP endpoint.
struct LlmEndpointConfig {
  std::string base_url;    // e.g. http://127.0.0.1:8080 or .../v1
  std::string model;
  double temperature = 1.0;  // must lie in [0, 2]
  int timeout_seconds = 30;
  int max_retries = 2;       // attempts beyond the first
  std::string cache_dir;     // empty disables caching
  int max_concurrent = 1;    // in-flight request bound
};

namespace llm_detail {

/// Locale-proof fixed-point rendering of the temperature (micro-units) so
/// cache keys never depend on float formatting.
inline std::string temperature_tag(double temperature) {
  return std::to_string(static_cast<long long>(std::llround(temperature * 1e6)));
}

}  // namespace llm_detail

/// Chat-endpoint client with a content-addressed response cache.  Each
/// attempt index is its own cache entry, so a retry after a cached garbage
/// response reaches the network instead of replaying the garbage.
class LlmClient {
 public:
  explicit LlmClient(const LlmEndpointConfig& config)
      : config_(config),
        in_flight_(config.max_concurrent > 0 ? config.max_concurrent : 1) {
    if (config_.base_url.empty())
      throw ConfigError("llm client: base_url is empty");
    if (config_.temperature < 0.0 || config_.temperature > 2.0)
      throw ConfigError("llm client: temperature must lie in [0, 2]");
    if (config_.max_retries < 0)
      throw ConfigError("llm client: max_retries must be non-negative");
    split_base_url();
    if (!config_.cache_dir.empty())
      std::filesystem::create_directories(config_.cache_dir);
  }

  const LlmEndpointConfig& config() const { return config_; }

  /// Render, query (with retries over fresh attempt indices), parse.
  /// Throws PolicyError carrying the last raw response once every attempt
  /// is exhausted.
  PolicyDecision decide(const PromptBundle& bundle) {
    const std::string prompt = render_prompt(bundle);
    std::string last_raw;
    std::string last_error = "no response received";
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
      const std::optional<std::string> raw = fetch(prompt, attempt);
      if (!raw) {
        last_error = "transport failure";
        continue;
      }
      last_raw = *raw;
      try {
        PolicyDecision decision = parse_response(*raw, bundle);
        decision.raw_response = *raw;
        decision.policy = fingerprint();
        policy_detail::check_decision(decision, bundle);
        return decision;
      } catch (const PolicyError& e) {
        last_error = e.what();
      }
    }
    throw PolicyError("llm_decide: exhausted " +
                      std::to_string(config_.max_retries + 1) + " attempts (" +
                      last_error + "); last response: " + truncate(last_raw));
  }

  /// Survey variant of the same flow.
  SurveyResponse decide_survey(const SurveyBundle& bundle) {
    const std::string prompt = render_survey_prompt(bundle);
    std::string last_raw;
    std::string last_error = "no response received";
    for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
      const std::optional<std::string> raw = fetch(prompt, attempt);
      if (!raw) {
        last_error = "transport failure";
        continue;
      }
      last_raw = *raw;
      try {
        SurveyResponse response = parse_survey_response(*raw, bundle);
        response.raw_response = *raw;
        return response;
      } catch (const PolicyError& e) {
        last_error = e.what();
      }
    }
    throw PolicyError("llm survey: exhausted " +
                      std::to_string(config_.max_retries + 1) + " attempts (" +
                      last_error + "); last response: " + truncate(last_raw));
  }

  std::string fingerprint() const {
    return "llm:" + config_.model + ":t=" +
           llm_detail::temperature_tag(config_.temperature);
  }

  /// Raw completion for one (prompt, attempt): cache hit or HTTP call.
  /// nullopt on transport failure (that attempt is spent).
  std::optional<std::string> fetch(const std::string& prompt, int attempt) {
    const std::string key = cache_key(prompt, attempt);
    if (!config_.cache_dir.empty()) {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      const auto cached = read_cache(key);
      if (cached) return cached;
    }
    const std::optional<std::string> fresh = request(prompt);
    if (fresh && !config_.cache_dir.empty()) {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      write_cache(key, *fresh);
    }
    return fresh;
  }

  std::string cache_key(const std::string& prompt, int attempt) const {
    std::string material = config_.model;
    material += '\n';
    material += llm_detail::temperature_tag(config_.temperature);
    material += '\n';
    material += prompt;
    material += '\n';
    material += std::to_string(attempt);
    return sha256_hex(material);
  }

 private:
  void split_base_url() {
    std::string rest = config_.base_url;
    std::string scheme_host = rest;
    const auto scheme = rest.find("://");
    const std::size_t host_start = scheme == std::string::npos ? 0 : scheme + 3;
    const auto slash = rest.find('/', host_start);
    if (slash != std::string::npos) {
      scheme_host = rest.substr(0, slash);
      path_prefix_ = rest.substr(slash);
      while (!path_prefix_.empty() && path_prefix_.back() == '/')
        path_prefix_.pop_back();
    }
    host_ = scheme_host;
  }

  std::optional<std::string> read_cache(const std::string& key) const {
    const std::filesystem::path file =
        std::filesystem::path(config_.cache_dir) / (key + ".txt");
    if (!std::filesystem::exists(file)) return std::nullopt;
    std::ifstream in(file, std::ios::binary);
    if (!in)
      throw DataError("llm cache: cannot read " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
      throw DataError("llm cache: read failure on " + file.string());
    return buffer.str();
  }

  void write_cache(const std::string& key, const std::string& value) const {
    const std::filesystem::path file =
        std::filesystem::path(config_.cache_dir) / (key + ".txt");
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << value;
  }

  /// POST the chat request; extract choices[0].message.content, falling
  /// back to the verbatim body when the envelope is not the expected shape.
  std::optional<std::string> request(const std::string& prompt) {
    in_flight_.acquire();
    struct Release {
      std::counting_semaphore<>* sem;
      ~Release() { sem->release(); }
    } release{&in_flight_};

    httplib::Client client(host_);
    client.set_connection_timeout(config_.timeout_seconds, 0);
    client.set_read_timeout(config_.timeout_seconds, 0);
    client.set_write_timeout(config_.timeout_seconds, 0);
    if (const char* token = std::getenv("NETFORM_API_KEY"))
      client.set_bearer_token_auth(token);

    nlohmann::ordered_json body;
    body["model"] = config_.model;
    body["temperature"] = config_.temperature;
    body["messages"] = nlohmann::ordered_json::array(
        {{{"role", "user"}, {"content", prompt}}});

    const auto result = client.Post(path_prefix_ + "/chat/completions",
                                    body.dump(), "application/json");
    if (!result || result->status != 200) return std::nullopt;

    const auto parsed = nlohmann::json::parse(result->body, nullptr, false);
    if (!parsed.is_discarded() && parsed.contains("choices") &&
        parsed["choices"].is_array() && !parsed["choices"].empty()) {
      const auto& first = parsed["choices"][0];
      if (first.contains("message") && first["message"].contains("content") &&
          first["message"]["content"].is_string())
        return first["message"]["content"].get<std::string>();
    }
    return result->body;
  }

  static std::string truncate(const std::string& text) {
    constexpr std::size_t limit = 200;
    if (text.size() <= limit) return text;
    return text.substr(0, limit) + "...";
  }

  LlmEndpointConfig config_;
  std::string host_;
  std::string path_prefix_;
  std::mutex cache_mutex_;
  std::counting_semaphore<> in_flight_;
};

/// Policy adapter: every decision goes through the rendered prompt and the
/// response parser, exactly like a live model call.
class LlmPolicy final : public Policy {
 public:
  explicit LlmPolicy(const LlmEndpointConfig& config)
      : client_(std::make_shared<LlmClient>(config)) {}
  explicit LlmPolicy(std::shared_ptr<LlmClient> client)
      : client_(std::move(client)) {}

  std::string name() const override { return client_->fingerprint(); }

  PolicyDecision decide(const DecisionQuery& query, Rng&) override {
    return client_->decide(query.bundle);
  }

  LlmClient& client() { return *client_; }

 private:
  std::shared_ptr<LlmClient> client_;
};

}  // namespace netform
