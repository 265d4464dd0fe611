#pragma once

#include "empa/domain/types.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace empa::llm {

struct ContextEntry
{
    Role role{Role::user};
    std::string content;

    friend bool operator==(ContextEntry const&, ContextEntry const&) = default;
};

/// Role-tagged messages handed to a provider for one completion.
///
/// A valid context has exactly one system entry at index 0, ends with a user
/// entry, and alternates user/assistant in between (starting with either).
struct ConversationContext
{
    std::vector<ContextEntry> entries;

    friend bool operator==(ConversationContext const&, ConversationContext const&) = default;
};

/// Empty string when valid, otherwise a description of the first violation.
[[nodiscard]] std::string context_violation(ConversationContext const& context);

[[nodiscard]] inline bool is_valid_context(ConversationContext const& context)
{
    return context_violation(context).empty();
}

[[nodiscard]] Role role_for(Sender sender) noexcept;

/// [system] ++ history mapped by sender (user->user, empa->assistant) ++
/// [user: new_message]. Pure. Blank new_message raises a validation Error.
[[nodiscard]] ConversationContext assemble_context(ContextEntry const& system,
                                                   std::span<ChatMessage const> history,
                                                   std::string_view new_message);

using TokenEstimator = std::function<std::size_t(ContextEntry const&)>;

/// Rough provider-token count: four bytes per token plus per-message framing.
[[nodiscard]] std::size_t estimate_tokens(ContextEntry const& entry);

inline constexpr std::size_t default_token_budget = 4096;

/// Drops the oldest history entries until the estimate fits the budget.
/// The system entry and the final user entry are always kept, so the result
/// may still exceed the budget when those two alone do.
[[nodiscard]] ConversationContext trim_to_budget(ConversationContext context,
                                                 std::size_t max_tokens,
                                                 TokenEstimator const& estimate = estimate_tokens);

} // namespace empa::llm
