#include "empa/storage/sqlite_store.hpp"

#include "empa/domain/error.hpp"
#include "empa/domain/identifiers.hpp"

#include <sqlite3.h>

#include <algorithm>
#include <mutex>

namespace empa::storage {

namespace {

constexpr char const* schema_sql = R"sql(
CREATE TABLE IF NOT EXISTS users (
    user_id       TEXT PRIMARY KEY,
    name          TEXT NOT NULL,
    email         TEXT NOT NULL UNIQUE COLLATE NOCASE,
    year_of_study TEXT NOT NULL,
    gender        TEXT NOT NULL,
    major         TEXT NOT NULL,
    instructor    TEXT NOT NULL,
    course        TEXT NOT NULL,
    created_at    TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS chat_history (
    message_id TEXT PRIMARY KEY,
    user_id    TEXT NOT NULL REFERENCES users(user_id),
    sender     TEXT NOT NULL CHECK (sender IN ('user', 'empa')),
    content    TEXT NOT NULL,
    timestamp  TEXT NOT NULL,
    seq        INTEGER NOT NULL,
    module_id  TEXT,
    UNIQUE (user_id, seq)
);
CREATE TABLE IF NOT EXISTS module_progress (
    user_id      TEXT NOT NULL REFERENCES users(user_id),
    module_id    TEXT NOT NULL,
    completed    INTEGER NOT NULL,
    completed_at TEXT,
    PRIMARY KEY (user_id, module_id)
);
CREATE TABLE IF NOT EXISTS quiz_attempts (
    user_id       TEXT NOT NULL REFERENCES users(user_id),
    module_id     TEXT NOT NULL,
    score         REAL NOT NULL,
    attempt_count INTEGER NOT NULL,
    updated_at    TEXT NOT NULL,
    PRIMARY KEY (user_id, module_id)
);
)sql";

[[noreturn]] void fail(sqlite3* db, std::string const& what)
{
    throw storage_error(what + ": " + (db ? sqlite3_errmsg(db) : "no connection"));
}

class Statement
{
public:
    Statement(sqlite3* db, char const* sql)
    : db_(db)
    {
        if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
            fail(db, "prepare failed");
        }
    }
    ~Statement() { sqlite3_finalize(stmt_); }

    Statement(Statement const&) = delete;
    Statement& operator=(Statement const&) = delete;

    Statement& bind(int index, std::string const& text)
    {
        check(sqlite3_bind_text(stmt_, index, text.data(), static_cast<int>(text.size()),
                                SQLITE_TRANSIENT));
        return *this;
    }
    Statement& bind(int index, std::int64_t value)
    {
        check(sqlite3_bind_int64(stmt_, index, value));
        return *this;
    }
    Statement& bind(int index, double value)
    {
        check(sqlite3_bind_double(stmt_, index, value));
        return *this;
    }
    Statement& bind_null(int index)
    {
        check(sqlite3_bind_null(stmt_, index));
        return *this;
    }

    /// True while a row is available.
    bool step()
    {
        int const rc = sqlite3_step(stmt_);
        if (rc == SQLITE_ROW) {
            return true;
        }
        if (rc == SQLITE_DONE) {
            return false;
        }
        if ((rc & 0xFF) == SQLITE_CONSTRAINT) {
            throw Error(ErrorKind::conflict, "constraint", sqlite3_errmsg(db_));
        }
        fail(db_, "step failed");
    }

    void run()
    {
        while (step()) { }
    }

    [[nodiscard]] std::string text(int col) const
    {
        auto const* p = reinterpret_cast<char const*>(sqlite3_column_text(stmt_, col));
        return p ? std::string(p, static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col)))
                 : std::string{};
    }
    [[nodiscard]] bool is_null(int col) const
    {
        return sqlite3_column_type(stmt_, col) == SQLITE_NULL;
    }
    [[nodiscard]] std::int64_t int64(int col) const { return sqlite3_column_int64(stmt_, col); }
    [[nodiscard]] double real(int col) const { return sqlite3_column_double(stmt_, col); }

private:
    void check(int rc)
    {
        if (rc != SQLITE_OK) {
            fail(db_, "bind failed");
        }
    }

    sqlite3* db_;
    sqlite3_stmt* stmt_ = nullptr;
};

void exec(sqlite3* db, char const* sql)
{
    char* err = nullptr;
    if (sqlite3_exec(db, sql, nullptr, nullptr, &err) != SQLITE_OK) {
        std::string message = err ? err : "unknown error";
        sqlite3_free(err);
        throw storage_error(std::string("exec failed: ") + message);
    }
}

/// Rolls back unless commit() was reached.
class Transaction
{
public:
    explicit Transaction(sqlite3* db)
    : db_(db)
    {
        exec(db_, "BEGIN IMMEDIATE");
    }
    ~Transaction()
    {
        if (!done_) {
            sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
        }
    }
    void commit()
    {
        exec(db_, "COMMIT");
        done_ = true;
    }

private:
    sqlite3* db_;
    bool done_ = false;
};

std::string module_key(ModuleId id) { return std::string(to_string(id)); }

} // namespace

struct SqliteStore::Impl
{
    StoreOptions options;
    sqlite3* db = nullptr;
    mutable std::mutex mutex;

    void fault(std::string_view point) const
    {
        if (options.fault_hook) {
            options.fault_hook(point);
        }
    }

    bool user_exists(UserId const& user_id) const
    {
        Statement st(db, "SELECT 1 FROM users WHERE user_id = ?1");
        st.bind(1, user_id.str());
        return st.step();
    }

    void require_user(UserId const& user_id) const
    {
        if (!user_exists(user_id)) {
            throw not_found_error("unknown_user", "no user with id " + user_id.str());
        }
    }

    std::vector<ChatMessage> insert_messages(UserId const& user_id,
                                             std::vector<MessageDraft> const& drafts)
    {
        std::int64_t seq = 0;
        Timestamp floor{};
        {
            Statement st(db, "SELECT seq, timestamp FROM chat_history WHERE user_id = ?1 "
                             "ORDER BY seq DESC LIMIT 1");
            st.bind(1, user_id.str());
            if (st.step()) {
                seq = st.int64(0);
                floor = parse_timestamp(st.text(1));
            }
        }
        Timestamp const stamp = std::max(options.clock(), floor);

        std::vector<ChatMessage> out;
        out.reserve(drafts.size());
        for (auto const& draft : drafts) {
            fault("append_turn.message");
            ChatMessage message{
                .message_id = new_message_id(),
                .user_id = user_id,
                .sender = draft.sender,
                .content = draft.content,
                .timestamp = stamp,
                .seq = ++seq,
                .module = draft.module,
            };
            Statement st(db, "INSERT INTO chat_history "
                             "(message_id, user_id, sender, content, timestamp, seq, module_id) "
                             "VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7)");
            st.bind(1, message.message_id.str())
              .bind(2, user_id.str())
              .bind(3, std::string(to_string(message.sender)))
              .bind(4, message.content)
              .bind(5, format_timestamp(message.timestamp))
              .bind(6, message.seq);
            if (message.module) {
                st.bind(7, module_key(*message.module));
            } else {
                st.bind_null(7);
            }
            st.run();
            out.push_back(std::move(message));
        }
        return out;
    }
};

SqliteStore::SqliteStore(std::filesystem::path const& path, StoreOptions options)
: impl_(std::make_unique<Impl>())
{
    impl_->options = std::move(options);
    int const flags = SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX;
    if (sqlite3_open_v2(path.string().c_str(), &impl_->db, flags, nullptr) != SQLITE_OK) {
        std::string const message = "cannot open database " + path.string();
        sqlite3_close(impl_->db);
        impl_->db = nullptr;
        throw storage_error(message);
    }
    try {
        sqlite3_busy_timeout(impl_->db, 5000);
        exec(impl_->db, "PRAGMA journal_mode = WAL");
        exec(impl_->db, "PRAGMA synchronous = FULL");
        exec(impl_->db, "PRAGMA foreign_keys = ON");
        exec(impl_->db, schema_sql);
    } catch (...) {
        sqlite3_close(impl_->db);
        impl_->db = nullptr;
        throw;
    }
}

SqliteStore::~SqliteStore()
{
    if (impl_ && impl_->db) {
        sqlite3_close(impl_->db);
    }
}

UserProfile SqliteStore::create_user(UserProfile const& profile,
                                     std::vector<MessageDraft> const& opening)
{
    validate_profile(profile);
    std::lock_guard lock(impl_->mutex);
    Transaction tx(impl_->db);
    {
        Statement st(impl_->db, "SELECT 1 FROM users WHERE email = ?1 COLLATE NOCASE");
        st.bind(1, profile.email);
        if (st.step()) {
            throw Error(ErrorKind::conflict, "duplicate_email", "email already registered",
                        "email");
        }
    }
    if (impl_->user_exists(profile.user_id)) {
        throw Error(ErrorKind::conflict, "duplicate_user_id", "user id already exists");
    }
    impl_->fault("create_user");
    {
        Statement st(impl_->db,
                     "INSERT INTO users (user_id, name, email, year_of_study, gender, major, "
                     "instructor, course, created_at) VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, ?8, ?9)");
        st.bind(1, profile.user_id.str())
          .bind(2, profile.name)
          .bind(3, profile.email)
          .bind(4, profile.year_of_study)
          .bind(5, profile.gender)
          .bind(6, profile.major)
          .bind(7, profile.instructor)
          .bind(8, profile.course)
          .bind(9, format_timestamp(profile.created_at));
        st.run();
    }
    if (!opening.empty()) {
        impl_->insert_messages(profile.user_id, opening);
    }
    tx.commit();
    return profile;
}

std::optional<UserProfile> SqliteStore::find_user(UserId const& user_id) const
{
    std::lock_guard lock(impl_->mutex);
    Statement st(impl_->db,
                 "SELECT user_id, name, email, year_of_study, gender, major, instructor, "
                 "course, created_at FROM users WHERE user_id = ?1");
    st.bind(1, user_id.str());
    if (!st.step()) {
        return std::nullopt;
    }
    return UserProfile{
        .user_id = UserId{st.text(0)},
        .name = st.text(1),
        .email = st.text(2),
        .year_of_study = st.text(3),
        .gender = st.text(4),
        .major = st.text(5),
        .instructor = st.text(6),
        .course = st.text(7),
        .created_at = parse_timestamp(st.text(8)),
    };
}

std::vector<ChatMessage> SqliteStore::append_turn(UserId const& user_id,
                                                  std::vector<MessageDraft> const& drafts)
{
    if (drafts.empty()) {
        throw validation_error("empty_turn", "append_turn needs at least one message");
    }
    std::lock_guard lock(impl_->mutex);
    Transaction tx(impl_->db);
    impl_->require_user(user_id);
    auto messages = impl_->insert_messages(user_id, drafts);
    tx.commit();
    return messages;
}

std::vector<ChatMessage> SqliteStore::get_history(UserId const& user_id) const
{
    std::lock_guard lock(impl_->mutex);
    impl_->require_user(user_id);
    Statement st(impl_->db,
                 "SELECT message_id, sender, content, timestamp, seq, module_id "
                 "FROM chat_history WHERE user_id = ?1 ORDER BY seq ASC");
    st.bind(1, user_id.str());
    std::vector<ChatMessage> out;
    while (st.step()) {
        auto sender = parse_sender(st.text(1));
        if (!sender) {
            throw storage_error("corrupt sender value in chat_history");
        }
        std::optional<ModuleId> module;
        if (!st.is_null(5)) {
            module = parse_module_id(st.text(5));
            if (!module) {
                throw storage_error("corrupt module_id value in chat_history");
            }
        }
        out.push_back(ChatMessage{
            .message_id = MessageId{st.text(0)},
            .user_id = user_id,
            .sender = *sender,
            .content = st.text(2),
            .timestamp = parse_timestamp(st.text(3)),
            .seq = st.int64(4),
            .module = module,
        });
    }
    return out;
}

CompletionRecord SqliteStore::mark_complete(UserId const& user_id, ModuleId module)
{
    std::lock_guard lock(impl_->mutex);
    Transaction tx(impl_->db);
    impl_->require_user(user_id);
    {
        Statement st(impl_->db, "SELECT completed_at FROM module_progress "
                                "WHERE user_id = ?1 AND module_id = ?2 AND completed = 1");
        st.bind(1, user_id.str()).bind(2, module_key(module));
        if (st.step()) {
            return CompletionRecord{true, parse_timestamp(st.text(0))};
        }
    }
    impl_->fault("mark_complete");
    auto const now = impl_->options.clock();
    {
        Statement st(impl_->db,
                     "INSERT INTO module_progress (user_id, module_id, completed, completed_at) "
                     "VALUES (?1, ?2, 1, ?3) ON CONFLICT (user_id, module_id) "
                     "DO UPDATE SET completed = 1, completed_at = excluded.completed_at");
        st.bind(1, user_id.str()).bind(2, module_key(module)).bind(3, format_timestamp(now));
        st.run();
    }
    tx.commit();
    return CompletionRecord{true, now};
}

ProgressMap SqliteStore::get_progress(UserId const& user_id) const
{
    std::lock_guard lock(impl_->mutex);
    impl_->require_user(user_id);
    auto progress = empty_progress();
    Statement st(impl_->db, "SELECT module_id, completed, completed_at FROM module_progress "
                            "WHERE user_id = ?1");
    st.bind(1, user_id.str());
    while (st.step()) {
        auto module = parse_module_id(st.text(0));
        if (!module) {
            throw storage_error("corrupt module_id value in module_progress");
        }
        CompletionRecord record;
        record.completed = st.int64(1) != 0;
        if (!st.is_null(2)) {
            record.completed_at = parse_timestamp(st.text(2));
        }
        progress[*module] = record;
    }
    return progress;
}

QuizAttemptRecord SqliteStore::record_quiz_attempt(UserId const& user_id, ModuleId module,
                                                   double score)
{
    std::lock_guard lock(impl_->mutex);
    Transaction tx(impl_->db);
    impl_->require_user(user_id);
    impl_->fault("record_quiz_attempt");
    auto const now = impl_->options.clock();
    {
        Statement st(impl_->db,
                     "INSERT INTO quiz_attempts (user_id, module_id, score, attempt_count, "
                     "updated_at) VALUES (?1, ?2, ?3, 1, ?4) "
                     "ON CONFLICT (user_id, module_id) DO UPDATE SET "
                     "score = excluded.score, attempt_count = attempt_count + 1, "
                     "updated_at = excluded.updated_at");
        st.bind(1, user_id.str())
          .bind(2, module_key(module))
          .bind(3, score)
          .bind(4, format_timestamp(now));
        st.run();
    }
    QuizAttemptRecord record;
    {
        Statement st(impl_->db, "SELECT score, attempt_count, updated_at FROM quiz_attempts "
                                "WHERE user_id = ?1 AND module_id = ?2");
        st.bind(1, user_id.str()).bind(2, module_key(module));
        if (!st.step()) {
            throw storage_error("quiz attempt vanished after upsert");
        }
        record = QuizAttemptRecord{st.real(0), st.int64(1), parse_timestamp(st.text(2))};
    }
    tx.commit();
    return record;
}

std::optional<QuizAttemptRecord> SqliteStore::latest_quiz_attempt(UserId const& user_id,
                                                                  ModuleId module) const
{
    std::lock_guard lock(impl_->mutex);
    impl_->require_user(user_id);
    Statement st(impl_->db, "SELECT score, attempt_count, updated_at FROM quiz_attempts "
                            "WHERE user_id = ?1 AND module_id = ?2");
    st.bind(1, user_id.str()).bind(2, module_key(module));
    if (!st.step()) {
        return std::nullopt;
    }
    return QuizAttemptRecord{st.real(0), st.int64(1), parse_timestamp(st.text(2))};
}

} // namespace empa::storage
