#include "empa/llm/context.hpp"

#include "empa/domain/error.hpp"

#include <numeric>

namespace empa::llm {

namespace {

bool is_blank(std::string_view text)
{
    return text.find_first_not_of(" \t\n\v\f\r") == std::string_view::npos;
}

} // namespace

std::string context_violation(ConversationContext const& context)
{
    auto const& entries = context.entries;
    if (entries.size() < 2) {
        return "context needs a system entry and a user entry";
    }
    if (entries.front().role != Role::system) {
        return "first entry must be the system prompt";
    }
    if (entries.back().role != Role::user) {
        return "last entry must be a user message";
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].content.empty()) {
            return "entry " + std::to_string(i) + " has empty content";
        }
        if (i == 0) {
            continue;
        }
        if (entries[i].role == Role::system) {
            return "system entry at index " + std::to_string(i);
        }
        if (i > 1 && entries[i].role == entries[i - 1].role) {
            return "roles do not alternate at index " + std::to_string(i);
        }
    }
    return {};
}

Role role_for(Sender sender) noexcept
{
    return sender == Sender::user ? Role::user : Role::assistant;
}

ConversationContext assemble_context(ContextEntry const& system,
                                     std::span<ChatMessage const> history,
                                     std::string_view new_message)
{
    if (is_blank(new_message)) {
        throw validation_error("empty_message", "message must not be empty", "message");
    }
    ConversationContext context;
    context.entries.reserve(history.size() + 2);
    context.entries.push_back(system);
    for (auto const& message : history) {
        context.entries.push_back(ContextEntry{role_for(message.sender), message.content});
    }
    context.entries.push_back(ContextEntry{Role::user, std::string(new_message)});
    return context;
}

std::size_t estimate_tokens(ContextEntry const& entry)
{
    constexpr std::size_t framing = 4;
    return (entry.content.size() + 3) / 4 + framing;
}

ConversationContext trim_to_budget(ConversationContext context, std::size_t max_tokens,
                                   TokenEstimator const& estimate)
{
    auto& entries = context.entries;
    if (entries.size() < 3) {
        return context;
    }
    std::size_t total = std::accumulate(
        entries.begin(), entries.end(), std::size_t{0},
        [&](std::size_t sum, ContextEntry const& e) { return sum + estimate(e); });

    // Index 1 is always the oldest history entry; the last entry is the new turn.
    std::size_t drop = 0;
    while (total > max_tokens && 1 + drop < entries.size() - 1) {
        total -= estimate(entries[1 + drop]);
        ++drop;
    }
    entries.erase(entries.begin() + 1, entries.begin() + 1 + static_cast<std::ptrdiff_t>(drop));
    return context;
}

} // namespace empa::llm
