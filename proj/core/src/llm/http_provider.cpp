#include "empa/llm/http_provider.hpp"

#include "empa/domain/error.hpp"
#include "empa/domain/json.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

namespace empa::llm {

std::string provider_request_body(ConversationContext const& context, std::string const& model)
{
    nlohmann::json messages = nlohmann::json::array();
    for (auto const& entry : context.entries) {
        messages.push_back({{"role", entry.role}, {"content", entry.content}});
    }
    return nlohmann::json{{"model", model}, {"messages", std::move(messages)}}.dump();
}

HttpProvider::HttpProvider(HttpProviderConfig config)
: config_(std::move(config))
{
    auto const scheme_end = config_.url.find("://");
    if (scheme_end == std::string::npos) {
        throw configuration_error("LLM_API_URL must be an absolute http(s) URL");
    }
    auto const scheme = config_.url.substr(0, scheme_end);
    if (scheme != "http" && scheme != "https") {
        throw configuration_error("LLM_API_URL scheme must be http or https");
    }
    auto const path_start = config_.url.find('/', scheme_end + 3);
    origin_ = config_.url.substr(0, path_start);
    path_ = path_start == std::string::npos ? "/" : config_.url.substr(path_start);
    if (origin_.size() == scheme_end + 3) {
        throw configuration_error("LLM_API_URL has no host");
    }
    try {
        (void)nlohmann::json::json_pointer(config_.response_path);
    } catch (nlohmann::json::exception const& e) {
        throw configuration_error("invalid response path: " + std::string(e.what()));
    }
}

std::string HttpProvider::complete(ConversationContext const& context)
{
    auto const trimmed = trim_to_budget(context, config_.token_budget);

    httplib::Client client(origin_);
    auto const timeout = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);

    httplib::Headers headers{{"Accept", "application/json"}};
    if (!config_.api_key.empty()) {
        headers.emplace("Authorization", "Bearer " + config_.api_key);
    }

    auto result = client.Post(path_, headers, provider_request_body(trimmed, config_.model),
                              "application/json");
    if (!result) {
        throw upstream_error("provider request failed: " + httplib::to_string(result.error()));
    }
    if (result->status < 200 || result->status >= 300) {
        throw upstream_error("provider returned HTTP " + std::to_string(result->status));
    }

    nlohmann::json body;
    try {
        body = nlohmann::json::parse(result->body);
    } catch (nlohmann::json::exception const&) {
        throw upstream_error("provider response is not JSON");
    }
    nlohmann::json::json_pointer const pointer(config_.response_path);
    try {
        auto const& reply = body.at(pointer);
        if (reply.is_string()) {
            return reply.get<std::string>();
        }
    } catch (nlohmann::json::exception const&) {
    }
    throw upstream_error("provider response has no string at " + config_.response_path);
}

} // namespace empa::llm
