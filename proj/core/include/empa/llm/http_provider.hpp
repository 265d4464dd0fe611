#pragma once

#include "empa/llm/provider.hpp"

#include <chrono>
#include <cstddef>
#include <string>

namespace empa::llm {

struct HttpProviderConfig
{
    /// Full endpoint, e.g. "https://genai.example.edu/api/chat/completions".
    std::string url;
    std::string api_key;
    std::string model;
    std::chrono::seconds timeout{30};
    /// JSON pointer to the reply text in the response body.
    std::string response_path = "/choices/0/message/content";
    std::size_t token_budget = default_token_budget;
};

/// Chat-completions style adapter: POSTs {model, messages:[{role, content}]}
/// with a bearer token and reads the reply at response_path.
class HttpProvider final : public Provider
{
public:
    /// Throws a configuration Error for an unusable URL or response path.
    explicit HttpProvider(HttpProviderConfig config);

    std::string complete(ConversationContext const& context) override;

    [[nodiscard]] HttpProviderConfig const& config() const noexcept { return config_; }

private:
    HttpProviderConfig config_;
    std::string origin_;  // scheme://host[:port]
    std::string path_;
};

/// Request body sent for a context (exposed for tests and tooling).
[[nodiscard]] std::string provider_request_body(ConversationContext const& context,
                                                std::string const& model);

} // namespace empa::llm
