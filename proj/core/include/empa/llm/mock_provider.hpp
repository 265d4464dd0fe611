#pragma once

#include "empa/llm/provider.hpp"

#include <atomic>
#include <string>
#include <string_view>
#include <vector>

namespace empa::llm {

/// In-tree provider for offline runs and tests.
///
///   echo   reply is a fixed function of the last user entry
///   script replies cycle through a configured list
///   fail   every call throws Error(upstream)
class MockProvider final : public Provider
{
public:
    enum class Mode { echo, script, fail };

    [[nodiscard]] static MockProvider echo();
    [[nodiscard]] static MockProvider scripted(std::vector<std::string> replies);
    [[nodiscard]] static MockProvider failing();

    /// Parses "mock:echo", "mock:fail" or "mock:script=<path to JSON array of strings>".
    [[nodiscard]] static MockProvider from_url(std::string_view url);

    MockProvider(MockProvider&& other) noexcept;

    std::string complete(ConversationContext const& context) override;

    [[nodiscard]] Mode mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t calls() const noexcept { return calls_.load(); }

private:
    MockProvider(Mode mode, std::vector<std::string> replies);

    Mode mode_;
    std::vector<std::string> replies_;
    std::atomic<std::size_t> calls_{0};
};

/// The reply echo mode produces for a given user message.
[[nodiscard]] std::string echo_reply(std::string_view user_message);

} // namespace empa::llm
