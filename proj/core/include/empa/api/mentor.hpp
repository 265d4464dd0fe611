#pragma once

#include "empa/llm/persona.hpp"
#include "empa/llm/provider.hpp"
#include "empa/llm/window.hpp"
#include "empa/storage/store.hpp"

#include <chrono>
#include <optional>
#include <string_view>

namespace empa::api {

struct MentorReply
{
    ChatTurn turn;
    std::chrono::milliseconds provider_latency{0};
};

/// One chat turn end to end: load the learner and their full history, build
/// the persona prompt, call the provider, clamp the reply to the feedback
/// window, then persist the user message and reply as one atomic pair.
/// Nothing is persisted when any step before the append fails.
class Mentor
{
public:
    Mentor(storage::Store& store, llm::Provider& provider, llm::PersonaPrompt persona,
           llm::FeedbackWindow window);

    MentorReply take_turn(UserId const& user_id, std::string_view message,
                          std::optional<ModuleId> module = std::nullopt) const;

    [[nodiscard]] llm::FeedbackWindow window() const noexcept { return window_; }

private:
    storage::Store& store_;
    llm::Provider& provider_;
    llm::PersonaPrompt persona_;
    llm::FeedbackWindow window_;
};

} // namespace empa::api
