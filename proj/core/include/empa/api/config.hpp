#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace empa::api {

struct ServiceConfig
{
    std::string bind_host = "0.0.0.0";
    int bind_port = 8000;
    std::vector<std::string> allowed_origins;
    std::string database_url;
    std::string llm_api_url;
    std::string llm_api_key;
    std::string llm_model;
    std::chrono::seconds llm_timeout{30};
    std::string llm_response_path = "/choices/0/message/content";
    std::size_t llm_token_budget = 4096;
    std::filesystem::path persona_path;
    std::filesystem::path curriculum_path;
    std::size_t feedback_max_words = 80;
};

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

/// Reads the process environment.
[[nodiscard]] std::optional<std::string> process_env(std::string_view name);

/// Builds the configuration from environment variables:
///
///   required  ALLOWED_ORIGINS (comma-separated), DATABASE_URL, LLM_API_URL,
///             PERSONA_PATH, CURRICULUM_PATH; LLM_MODEL and LLM_API_KEY
///             unless LLM_API_URL is a mock ("mock:...")
///   optional  BIND_ADDR (host:port, default 0.0.0.0:8000),
///             LLM_TIMEOUT_SECS (30), FEEDBACK_MAX_WORDS (80),
///             LLM_RESPONSE_PATH (JSON pointer), LLM_TOKEN_BUDGET (4096)
///
/// Throws one configuration Error naming every missing or invalid variable.
[[nodiscard]] ServiceConfig config_from_env(EnvLookup const& env = process_env);

} // namespace empa::api
