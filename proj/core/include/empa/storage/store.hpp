#pragma once

#include "empa/domain/time.hpp"
#include "empa/domain/types.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace empa::storage {

/// Called by a store at named points inside a write. A hook that throws
/// aborts the write in progress; the store must then leave no trace of it.
///
/// Points: "create_user", "append_turn.message" (once per message, before
/// commit), "mark_complete", "record_quiz_attempt".
using FaultHook = std::function<void(std::string_view point)>;

struct StoreOptions
{
    Clock clock = system_clock();
    FaultHook fault_hook;
};

/// Persistence contract shared by every backend.
///
/// Every successful write is durable before the call returns. Messages are
/// append-only; seq starts at 1 per user and has no gaps. Writes for one
/// user are serialized by the store. Unknown users raise Error(not_found),
/// backend failures raise Error(storage).
class Store
{
public:
    virtual ~Store() = default;

    /// Persists the profile together with its opening messages (seq 1..n)
    /// as one unit. Duplicate email (case-insensitive) or user_id raises
    /// Error(conflict).
    virtual UserProfile create_user(UserProfile const& profile,
                                    std::vector<MessageDraft> const& opening) = 0;

    [[nodiscard]] virtual std::optional<UserProfile> find_user(UserId const& user_id) const = 0;

    /// Appends all drafts atomically with consecutive seq values. The store
    /// assigns message ids and timestamps; timestamps never decrease along seq.
    virtual std::vector<ChatMessage> append_turn(UserId const& user_id,
                                                 std::vector<MessageDraft> const& drafts) = 0;

    [[nodiscard]] virtual std::vector<ChatMessage> get_history(UserId const& user_id) const = 0;

    /// Idempotent; a second call returns the original record.
    virtual CompletionRecord mark_complete(UserId const& user_id, ModuleId module) = 0;

    /// Always holds all six modules; missing rows read as not completed.
    [[nodiscard]] virtual ProgressMap get_progress(UserId const& user_id) const = 0;

    /// Replaces the latest score and bumps the attempt count.
    virtual QuizAttemptRecord record_quiz_attempt(UserId const& user_id, ModuleId module,
                                                  double score) = 0;

    [[nodiscard]] virtual std::optional<QuizAttemptRecord>
    latest_quiz_attempt(UserId const& user_id, ModuleId module) const = 0;
};

/// Six not-completed entries.
[[nodiscard]] ProgressMap empty_progress();

} // namespace empa::storage
