#pragma once

#include "empa/llm/context.hpp"

#include <chrono>
#include <string>

namespace empa::llm {

/// A text-generation backend. Implementations are shared across request
/// handlers and must tolerate concurrent complete() calls.
class Provider
{
public:
    virtual ~Provider() = default;

    /// Returns the assistant reply for a valid context. Any failure (timeout,
    /// transport, unparsable body) is reported by throwing.
    virtual std::string complete(ConversationContext const& context) = 0;
};

struct ProviderResponse
{
    std::string content;
    std::chrono::milliseconds provider_latency{0};
};

/// Invokes the provider once, without retries. Rejects invalid contexts with
/// Error(internal); maps every provider failure, including a reply with no
/// words, to Error(upstream).
[[nodiscard]] ProviderResponse generate(ConversationContext const& context, Provider& provider);

} // namespace empa::llm
