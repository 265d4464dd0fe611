#pragma once

#include "empa/storage/store.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace empa::storage {

/// Process-local store. Durable only for the lifetime of the object; used by
/// tests and by the "memory:" database URL.
class MemoryStore final : public Store
{
public:
    explicit MemoryStore(StoreOptions options = {});

    UserProfile create_user(UserProfile const& profile,
                            std::vector<MessageDraft> const& opening) override;
    std::optional<UserProfile> find_user(UserId const& user_id) const override;
    std::vector<ChatMessage> append_turn(UserId const& user_id,
                                         std::vector<MessageDraft> const& drafts) override;
    std::vector<ChatMessage> get_history(UserId const& user_id) const override;
    CompletionRecord mark_complete(UserId const& user_id, ModuleId module) override;
    ProgressMap get_progress(UserId const& user_id) const override;
    QuizAttemptRecord record_quiz_attempt(UserId const& user_id, ModuleId module,
                                          double score) override;
    std::optional<QuizAttemptRecord> latest_quiz_attempt(UserId const& user_id,
                                                         ModuleId module) const override;

private:
    struct UserRecord
    {
        UserProfile profile;
        mutable std::mutex mutex;
        std::vector<ChatMessage> log;
        ProgressMap progress;
        std::map<ModuleId, QuizAttemptRecord> quiz;
    };

    std::shared_ptr<UserRecord> lookup(UserId const& user_id) const;
    void fault(std::string_view point) const;
    std::vector<ChatMessage> stage(UserRecord const& record,
                                   std::vector<MessageDraft> const& drafts) const;

    StoreOptions options_;
    mutable std::shared_mutex index_mutex_;
    std::unordered_map<std::string, std::shared_ptr<UserRecord>> users_;
    std::unordered_map<std::string, std::string> user_by_email_;
};

/// Lowercased form used for the email uniqueness constraint.
[[nodiscard]] std::string email_key(std::string_view email);

} // namespace empa::storage
