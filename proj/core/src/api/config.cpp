#include "empa/api/config.hpp"

#include "empa/domain/error.hpp"

#include <charconv>
#include <cstdlib>

namespace empa::api {

namespace {

std::string trim(std::string_view text)
{
    auto const first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    auto const last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

std::optional<long long> parse_positive(std::string_view text)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) {
        return std::nullopt;
    }
    return value;
}

std::vector<std::string> split_origins(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto const comma = text.find(',', start);
        auto piece = trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                              : comma - start));
        while (!piece.empty() && piece.back() == '/') {
            piece.pop_back();
        }
        if (!piece.empty()) {
            out.push_back(std::move(piece));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

} // namespace

std::optional<std::string> process_env(std::string_view name)
{
    if (char const* value = std::getenv(std::string(name).c_str())) {
        return std::string(value);
    }
    return std::nullopt;
}

ServiceConfig config_from_env(EnvLookup const& env)
{
    ServiceConfig config;
    std::vector<std::string> problems;

    auto const get = [&](std::string_view name) -> std::optional<std::string> {
        auto value = env(name);
        if (!value || trim(*value).empty()) {
            return std::nullopt;
        }
        return trim(*value);
    };
    auto const require = [&](std::string_view name) -> std::string {
        auto value = get(name);
        if (!value) {
            problems.push_back(std::string(name) + " is not set");
            return {};
        }
        return *value;
    };

    if (auto origins = get("ALLOWED_ORIGINS")) {
        config.allowed_origins = split_origins(*origins);
    }
    if (config.allowed_origins.empty()) {
        problems.emplace_back("ALLOWED_ORIGINS must list at least one origin");
    }
    config.database_url = require("DATABASE_URL");
    config.llm_api_url = require("LLM_API_URL");
    config.persona_path = require("PERSONA_PATH");
    config.curriculum_path = require("CURRICULUM_PATH");

    bool const mock = config.llm_api_url.starts_with("mock:");
    if (mock) {
        config.llm_model = get("LLM_MODEL").value_or("mock");
        config.llm_api_key = get("LLM_API_KEY").value_or("");
    } else {
        config.llm_model = require("LLM_MODEL");
        config.llm_api_key = require("LLM_API_KEY");
    }

    if (auto bind = get("BIND_ADDR")) {
        auto const colon = bind->rfind(':');
        auto const port = colon == std::string::npos
                              ? std::nullopt
                              : parse_positive(std::string_view(*bind).substr(colon + 1));
        if (!port || *port > 65535 || colon == 0) {
            problems.push_back("BIND_ADDR must be host:port, got \"" + *bind + "\"");
        } else {
            config.bind_host = bind->substr(0, colon);
            config.bind_port = static_cast<int>(*port);
        }
    }
    if (auto timeout = get("LLM_TIMEOUT_SECS")) {
        if (auto seconds = parse_positive(*timeout)) {
            config.llm_timeout = std::chrono::seconds{*seconds};
        } else {
            problems.push_back("LLM_TIMEOUT_SECS must be a positive integer");
        }
    }
    if (auto words = get("FEEDBACK_MAX_WORDS")) {
        if (auto n = parse_positive(*words)) {
            config.feedback_max_words = static_cast<std::size_t>(*n);
        } else {
            problems.push_back("FEEDBACK_MAX_WORDS must be a positive integer");
        }
    }
    if (auto budget = get("LLM_TOKEN_BUDGET")) {
        if (auto n = parse_positive(*budget)) {
            config.llm_token_budget = static_cast<std::size_t>(*n);
        } else {
            problems.push_back("LLM_TOKEN_BUDGET must be a positive integer");
        }
    }
    if (auto path = get("LLM_RESPONSE_PATH")) {
        config.llm_response_path = *path;
    }

    if (!problems.empty()) {
        std::string message = "invalid configuration:";
        for (auto const& p : problems) {
            message += "\n  " + p;
        }
        throw configuration_error(message);
    }
    return config;
}

} // namespace empa::api
