#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <random>
#include <string>

#include "netform/llm_client.hpp"
#include "netform/prompt.hpp"
#include "support/mock_llm.hpp"

using netform::CandidateProfile;
using netform::LlmClient;
using netform::LlmEndpointConfig;
using netform::PromptBundle;
using netform_test::MockLlm;

namespace {

/// Self-deleting scratch directory for cache tests.
struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() /
           ("netform-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

PromptBundle test_bundle() {
  PromptBundle bundle;
  bundle.self_profile.display_name = "0";
  for (int j = 1; j <= 3; ++j) {
    CandidateProfile c;
    c.display_name = std::to_string(j);
    c.features["neighbors"] = nlohmann::ordered_json::array({0});
    bundle.candidates.push_back(c);
  }
  bundle.max_selections = 1;
  return bundle;
}

LlmEndpointConfig config_for(const MockLlm& mock, const std::string& cache_dir,
                             int max_retries) {
  LlmEndpointConfig cfg;
  cfg.base_url = mock.base_url();
  cfg.model = "mock-model";
  cfg.temperature = 0.5;
  cfg.timeout_seconds = 5;
  cfg.max_retries = max_retries;
  cfg.cache_dir = cache_dir;
  return cfg;
}

}  // namespace

TEST_CASE("a valid mock response yields a deterministic logged decision") {
  MockLlm mock([](const std::string&, int) {
    return std::string("[{\"name\": 2, \"reason\": \"mutual friend\"}]");
  });
  TempDir cache;
  LlmClient client(config_for(mock, cache.path.string(), 2));
  const auto decision = client.decide(test_bundle());
  REQUIRE(decision.selections.size() == 1);
  REQUIRE(decision.selections[0].name == "2");
  REQUIRE(decision.selections[0].reason == "mutual friend");
  REQUIRE(decision.raw_response ==
          "[{\"name\": 2, \"reason\": \"mutual friend\"}]");
  REQUIRE(decision.policy == "llm:mock-model:t=500000");
  REQUIRE(mock.request_count() == 1);
}

TEST_CASE("the prompt reaching the endpoint is the rendered prompt") {
  std::string seen;
  MockLlm mock([&seen](const std::string& prompt, int) {
    seen = prompt;
    return std::string("[{\"name\": 1}]");
  });
  TempDir cache;
  LlmClient client(config_for(mock, cache.path.string(), 0));
  const PromptBundle bundle = test_bundle();
  (void)client.decide(bundle);
  REQUIRE(seen == netform::render_prompt(bundle));
}

TEST_CASE("identical calls are served from the cache") {
  MockLlm mock([](const std::string&, int) {
    return std::string("[{\"name\": 3}]");
  });
  TempDir cache;
  LlmClient client(config_for(mock, cache.path.string(), 2));
  const PromptBundle bundle = test_bundle();
  (void)client.decide(bundle);
  REQUIRE(mock.request_count() == 1);
  const auto second = client.decide(bundle);
  REQUIRE(second.selections[0].name == "3");
  REQUIRE(mock.request_count() == 1);  // zero new network requests

  // A fresh client over the same cache directory also stays offline.
  LlmClient warm(config_for(mock, cache.path.string(), 2));
  (void)warm.decide(bundle);
  REQUIRE(mock.request_count() == 1);
}

TEST_CASE("garbage responses exhaust exactly max_retries + 1 attempts") {
  MockLlm mock([](const std::string&, int) {
    return std::string("I cannot answer that.");
  });
  TempDir cache;
  LlmClient client(config_for(mock, cache.path.string(), 2));
  try {
    (void)client.decide(test_bundle());
    FAIL("expected PolicyError");
  } catch (const netform::PolicyError& e) {
    const std::string message = e.what();
    REQUIRE(message.find("3 attempts") != std::string::npos);
    REQUIRE(message.find("I cannot answer that.") != std::string::npos);
  }
  REQUIRE(mock.request_count() == 3);
}

TEST_CASE("a cached garbage response is retried at the next attempt index") {
  TempDir cache;
  const PromptBundle bundle = test_bundle();
  {
    MockLlm garbage([](const std::string&, int) {
      return std::string("nonsense");
    });
    LlmClient client(config_for(garbage, cache.path.string(), 0));
    REQUIRE_THROWS_AS(client.decide(bundle), netform::PolicyError);
    REQUIRE(garbage.request_count() == 1);  // attempt 0 now cached as garbage
  }
  {
    MockLlm healthy([](const std::string&, int) {
      return std::string("[{\"name\": 1}]");
    });
    LlmClient client(config_for(healthy, cache.path.string(), 1));
    const auto decision = client.decide(bundle);
    REQUIRE(decision.selections[0].name == "1");
    // Attempt 0 replayed the cached garbage without touching the network;
    // attempt 1 was a cache miss and went out.
    REQUIRE(healthy.request_count() == 1);
  }
}

TEST_CASE("distinct attempts, prompts, and settings get distinct cache keys") {
  MockLlm mock([](const std::string&, int) { return std::string("x"); });
  TempDir cache;
  auto cfg = config_for(mock, cache.path.string(), 0);
  LlmClient client(cfg);
  const std::string key_a = client.cache_key("prompt A", 0);
  REQUIRE(key_a != client.cache_key("prompt A", 1));
  REQUIRE(key_a != client.cache_key("prompt B", 0));
  auto hot = cfg;
  hot.temperature = 1.5;
  LlmClient hot_client(hot);
  REQUIRE(key_a != hot_client.cache_key("prompt A", 0));
  auto other = cfg;
  other.model = "other-model";
  LlmClient other_client(other);
  REQUIRE(key_a != other_client.cache_key("prompt A", 0));
}

TEST_CASE("a base url with a path prefix routes correctly") {
  MockLlm mock([](const std::string&, int) {
    return std::string("[{\"name\": 1}]");
  });
  // The mock serves /chat/completions at the root, so the prefixed client
  // must fail while the exact one succeeds — proving the prefix is used.
  TempDir cache;
  auto cfg = config_for(mock, cache.path.string(), 0);
  cfg.base_url = mock.base_url() + "/v1/";
  LlmClient prefixed(cfg);
  REQUIRE_THROWS_AS(prefixed.decide(test_bundle()), netform::PolicyError);
  REQUIRE(mock.request_count() == 0);
}

TEST_CASE("endpoint configuration is validated") {
  LlmEndpointConfig cfg;
  cfg.base_url = "";
  REQUIRE_THROWS_AS(LlmClient(cfg), netform::ConfigError);
  cfg.base_url = "http://127.0.0.1:1";
  cfg.temperature = 2.5;
  REQUIRE_THROWS_AS(LlmClient(cfg), netform::ConfigError);
  cfg.temperature = 1.0;
  cfg.max_retries = -1;
  REQUIRE_THROWS_AS(LlmClient(cfg), netform::ConfigError);
}

TEST_CASE("transport failures consume attempts") {
  LlmEndpointConfig cfg;
  cfg.base_url = "http://127.0.0.1:9";  // discard port: nothing listens
  cfg.model = "mock-model";
  cfg.timeout_seconds = 1;
  cfg.max_retries = 1;
  LlmClient client(cfg);
  try {
    (void)client.decide(test_bundle());
    FAIL("expected PolicyError");
  } catch (const netform::PolicyError& e) {
    REQUIRE(std::string(e.what()).find("transport failure") !=
            std::string::npos);
  }
}

TEST_CASE("the survey flow works end to end against the mock") {
  MockLlm mock([](const std::string&, int) {
    return std::string(
        "```json\n{\"name\": 0, \"reason\": \"similar\", \"ranking_degree\": "
        "2, \"ranking_similarity\": 1, \"ranking_common_friends\": 3}\n```");
  });
  TempDir cache;
  LlmClient client(config_for(mock, cache.path.string(), 0));
  netform::SurveyBundle bundle;
  bundle.context = netform::SurveyContext::social;
  for (int j = 0; j < 3; ++j) {
    CandidateProfile c;
    c.display_name = std::to_string(j);
    c.features["degree"] = 10 * (j + 1);
    c.features["common_friends"] = j;
    c.features["similarity"] = j;
    bundle.candidates.push_back(c);
  }
  const auto response = client.decide_survey(bundle);
  REQUIRE(response.name == "0");
  REQUIRE(response.ranking.similarity == 1);
  REQUIRE(response.ranking.degree == 2);
  REQUIRE(response.ranking.common == 3);
  REQUIRE(mock.request_count() == 1);
}
