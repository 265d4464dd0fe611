#include "empa/storage/memory_store.hpp"

#include "empa/domain/error.hpp"
#include "empa/domain/identifiers.hpp"

#include <algorithm>
#include <cctype>

namespace empa::storage {

ProgressMap empty_progress()
{
    ProgressMap progress;
    for (auto id : all_modules) {
        progress.emplace(id, CompletionRecord{});
    }
    return progress;
}

std::string email_key(std::string_view email)
{
    std::string key(email);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return key;
}

MemoryStore::MemoryStore(StoreOptions options)
: options_(std::move(options))
{ }

void MemoryStore::fault(std::string_view point) const
{
    if (options_.fault_hook) {
        options_.fault_hook(point);
    }
}

std::shared_ptr<MemoryStore::UserRecord> MemoryStore::lookup(UserId const& user_id) const
{
    std::shared_lock lock(index_mutex_);
    auto it = users_.find(user_id.str());
    if (it == users_.end()) {
        throw not_found_error("unknown_user", "no user with id " + user_id.str());
    }
    return it->second;
}

std::vector<ChatMessage> MemoryStore::stage(UserRecord const& record,
                                            std::vector<MessageDraft> const& drafts) const
{
    std::int64_t seq = record.log.empty() ? 0 : record.log.back().seq;
    Timestamp floor = record.log.empty() ? Timestamp{} : record.log.back().timestamp;
    Timestamp const stamp = std::max(options_.clock(), floor);

    std::vector<ChatMessage> staged;
    staged.reserve(drafts.size());
    for (auto const& draft : drafts) {
        fault("append_turn.message");
        staged.push_back(ChatMessage{
            .message_id = new_message_id(),
            .user_id = record.profile.user_id,
            .sender = draft.sender,
            .content = draft.content,
            .timestamp = stamp,
            .seq = ++seq,
            .module = draft.module,
        });
    }
    return staged;
}

UserProfile MemoryStore::create_user(UserProfile const& profile,
                                     std::vector<MessageDraft> const& opening)
{
    validate_profile(profile);
    auto record = std::make_shared<UserRecord>();
    record->profile = profile;
    record->progress = empty_progress();

    std::unique_lock lock(index_mutex_);
    auto const key = email_key(profile.email);
    if (user_by_email_.contains(key)) {
        throw Error(ErrorKind::conflict, "duplicate_email",
                    "email already registered", "email");
    }
    if (users_.contains(profile.user_id.str())) {
        throw Error(ErrorKind::conflict, "duplicate_user_id", "user id already exists");
    }
    fault("create_user");
    record->log = stage(*record, opening);
    users_.emplace(profile.user_id.str(), record);
    user_by_email_.emplace(key, profile.user_id.str());
    return record->profile;
}

std::optional<UserProfile> MemoryStore::find_user(UserId const& user_id) const
{
    std::shared_lock lock(index_mutex_);
    auto it = users_.find(user_id.str());
    if (it == users_.end()) {
        return std::nullopt;
    }
    return it->second->profile;
}

std::vector<ChatMessage> MemoryStore::append_turn(UserId const& user_id,
                                                  std::vector<MessageDraft> const& drafts)
{
    if (drafts.empty()) {
        throw validation_error("empty_turn", "append_turn needs at least one message");
    }
    auto record = lookup(user_id);
    std::lock_guard lock(record->mutex);
    auto staged = stage(*record, drafts);
    record->log.insert(record->log.end(), staged.begin(), staged.end());
    return staged;
}

std::vector<ChatMessage> MemoryStore::get_history(UserId const& user_id) const
{
    auto record = lookup(user_id);
    std::lock_guard lock(record->mutex);
    return record->log;
}

CompletionRecord MemoryStore::mark_complete(UserId const& user_id, ModuleId module)
{
    auto record = lookup(user_id);
    std::lock_guard lock(record->mutex);
    auto& entry = record->progress[module];
    if (entry.completed) {
        return entry;
    }
    fault("mark_complete");
    entry = CompletionRecord{true, options_.clock()};
    return entry;
}

ProgressMap MemoryStore::get_progress(UserId const& user_id) const
{
    auto record = lookup(user_id);
    std::lock_guard lock(record->mutex);
    return record->progress;
}

QuizAttemptRecord MemoryStore::record_quiz_attempt(UserId const& user_id, ModuleId module,
                                                   double score)
{
    auto record = lookup(user_id);
    std::lock_guard lock(record->mutex);
    fault("record_quiz_attempt");
    auto& entry = record->quiz[module];
    entry.score = score;
    entry.attempt_count += 1;
    entry.updated_at = options_.clock();
    return entry;
}

std::optional<QuizAttemptRecord> MemoryStore::latest_quiz_attempt(UserId const& user_id,
                                                                  ModuleId module) const
{
    auto record = lookup(user_id);
    std::lock_guard lock(record->mutex);
    auto it = record->quiz.find(module);
    if (it == record->quiz.end()) {
        return std::nullopt;
    }
    return it->second;
}

} // namespace empa::storage
