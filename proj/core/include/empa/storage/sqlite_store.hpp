#pragma once

#include "empa/storage/store.hpp"

#include <filesystem>
#include <memory>

namespace empa::storage {

/// Relational store on a SQLite database file.
///
/// Tables: users, chat_history, module_progress, quiz_attempts. Every write
/// runs in its own transaction with synchronous=FULL, so a successful return
/// means the data survives a close and reopen. Statements are prepared per
/// call and never cached.
class SqliteStore final : public Store
{
public:
    explicit SqliteStore(std::filesystem::path const& path, StoreOptions options = {});
    ~SqliteStore() override;

    SqliteStore(SqliteStore const&) = delete;
    SqliteStore& operator=(SqliteStore const&) = delete;

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
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace empa::storage
