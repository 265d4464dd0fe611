#include "empa/llm/mock_provider.hpp"

#include "empa/domain/error.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace empa::llm {

std::string echo_reply(std::string_view user_message)
{
    return "Thanks for sharing. You said: \"" + std::string(user_message) +
           "\". How might someone from a different culture see this?";
}

MockProvider::MockProvider(Mode mode, std::vector<std::string> replies)
: mode_(mode)
, replies_(std::move(replies))
{ }

MockProvider::MockProvider(MockProvider&& other) noexcept
: mode_(other.mode_)
, replies_(std::move(other.replies_))
, calls_(other.calls_.load())
{ }

MockProvider MockProvider::echo()
{
    return MockProvider(Mode::echo, {});
}

MockProvider MockProvider::scripted(std::vector<std::string> replies)
{
    if (replies.empty()) {
        throw configuration_error("scripted mock provider needs at least one reply");
    }
    return MockProvider(Mode::script, std::move(replies));
}

MockProvider MockProvider::failing()
{
    return MockProvider(Mode::fail, {});
}

MockProvider MockProvider::from_url(std::string_view url)
{
    if (url == "mock:echo") {
        return echo();
    }
    if (url == "mock:fail") {
        return failing();
    }
    constexpr std::string_view script_prefix = "mock:script=";
    if (url.starts_with(script_prefix)) {
        std::string const path(url.substr(script_prefix.size()));
        std::ifstream in(path);
        if (!in) {
            throw configuration_error("cannot read mock script " + path);
        }
        try {
            auto replies = nlohmann::json::parse(in).get<std::vector<std::string>>();
            return scripted(std::move(replies));
        } catch (nlohmann::json::exception const& e) {
            throw configuration_error("mock script " + path +
                                      " must be a JSON array of strings: " + e.what());
        }
    }
    throw configuration_error("unknown mock provider: " + std::string(url));
}

std::string MockProvider::complete(ConversationContext const& context)
{
    auto const n = calls_.fetch_add(1);
    switch (mode_) {
    case Mode::echo:
        return echo_reply(context.entries.back().content);
    case Mode::script:
        return replies_[n % replies_.size()];
    case Mode::fail:
        break;
    }
    throw upstream_error("mock provider configured to fail");
}

} // namespace empa::llm
