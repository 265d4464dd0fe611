// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Runs entirely on the mock provider plus in-process stores.

#include "empa/api/server.hpp"
#include "empa/curriculum/quiz.hpp"
#include "empa/curriculum/unlock.hpp"
#include "empa/domain/json.hpp"
#include "empa/llm/context.hpp"
#include "empa/llm/mock_provider.hpp"
#include "empa/llm/window.hpp"
#include "empa/storage/memory_store.hpp"
#include "empa/storage/sqlite_store.hpp"

#include "oracles.hpp"
#include "service_harness.hpp"

#include <httplib.h>

#include <barrier>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace {

using namespace empa;
using nlohmann::json;
using testing::ServiceHarness;

// Pinned limits.
constexpr auto session_deadline = std::chrono::seconds{5};
constexpr std::size_t feedback_words = 80;
constexpr int context_samples = 1000;
constexpr std::size_t max_history = 100;
constexpr int window_samples = 1000;
constexpr std::size_t max_output_words = 200;
constexpr int injected_failures = 100;
constexpr int parallel_sessions = 50;
constexpr int racing_turns = 10;

/// Collects the first few problems for the report line.
class Problems
{
public:
    void add(std::string what)
    {
        std::lock_guard lock(mutex_);
        if (count_++ < 3) {
            detail_ += (detail_.empty() ? "" : "; ") + what;
        }
    }
    [[nodiscard]] bool empty() const { return count_ == 0; }
    [[nodiscard]] std::string summary() const
    {
        return std::to_string(count_) + " problem(s): " + detail_;
    }

private:
    mutable std::mutex mutex_;
    std::size_t count_ = 0;
    std::string detail_;
};

struct Outcome
{
    bool passed;
    std::string detail;
};

Outcome verdict(Problems const& problems, std::string ok_detail)
{
    if (problems.empty()) {
        return {true, std::move(ok_detail)};
    }
    return {false, problems.summary()};
}

/// Replies with a prepared text per call, in order.
class QueueProvider final : public llm::Provider
{
public:
    explicit QueueProvider(std::vector<std::string> replies)
    : replies_(std::move(replies))
    { }
    std::string complete(llm::ConversationContext const&) override
    {
        return replies_.at(next_++ % replies_.size());
    }

private:
    std::vector<std::string> replies_;
    std::size_t next_ = 0;
};

// ---------------------------------------------------------------------------

Outcome end_to_end_session()
{
    storage::MemoryStore store;
    auto echo = llm::MockProvider::echo();
    ServiceHarness harness(store, echo);
    api::HttpServer server(harness.service());
    int const port = server.bind("127.0.0.1", 0);
    if (port <= 0) {
        return {false, "could not bind a local port"};
    }
    std::thread thread([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    Problems problems;
    auto const start = std::chrono::steady_clock::now();
    {
        httplib::Client client("127.0.0.1", port);
        auto submitted = client.Post("/api/submit", ServiceHarness::registration("Ada").dump(),
                                     "application/json");
        if (!submitted || submitted->status != 200) {
            problems.add("registration failed");
        } else {
            auto const user_id = json::parse(submitted->body)["user_id"].get<std::string>();
            for (auto const* message : {"Hi Empa!", "My teammate never speaks up.",
                                        "How do I invite input?"}) {
                auto r = client.Post("/api/chatbot",
                                     json{{"user_id", user_id}, {"message", message}}.dump(),
                                     "application/json");
                if (!r || r->status != 200) {
                    problems.add(std::string("chat turn failed: ") + message);
                }
            }
            auto h = client.Get("/api/chat-history/" + user_id);
            if (!h || h->status != 200) {
                problems.add("history read failed");
            } else {
                auto const messages = json::parse(h->body)["messages"];
                std::vector<std::string> const senders{"empa", "user", "empa", "user",
                                                       "empa", "user", "empa"};
                if (messages.size() != senders.size()) {
                    problems.add("expected 7 messages, got " + std::to_string(messages.size()));
                } else {
                    for (std::size_t i = 0; i < senders.size(); ++i) {
                        if (messages[i]["sender"] != senders[i]) {
                            problems.add("sender mismatch at " + std::to_string(i));
                        }
                        if (i > 0 && messages[i]["seq"].get<std::int64_t>() <=
                                         messages[i - 1]["seq"].get<std::int64_t>()) {
                            problems.add("seq not increasing at " + std::to_string(i));
                        }
                    }
                }
            }
        }
    }
    auto const elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    server.stop();
    thread.join();
    if (elapsed > session_deadline) {
        problems.add("took " + std::to_string(elapsed.count()) + " ms");
    }
    return verdict(problems, "7 messages in " + std::to_string(elapsed.count()) + " ms");
}

// ---------------------------------------------------------------------------

Outcome context_assembly()
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<std::size_t> length(0, max_history);
    std::uniform_int_distribution<int> text_len(1, 60);
    llm::ContextEntry const system{Role::system, "You are Empa."};
    Problems problems;

    for (int sample = 0; sample < context_samples; ++sample) {
        // Stored shape: optional greeting, then complete user/empa pairs.
        std::size_t const n = length(rng);
        std::vector<ChatMessage> history;
        for (std::size_t i = 0; i < n; ++i) {
            bool const greeting_offset = n % 2 == 1;
            bool const is_user = greeting_offset ? i % 2 == 1 : i % 2 == 0;
            history.push_back(ChatMessage{.message_id = MessageId{std::to_string(i)},
                                          .user_id = UserId{"u"},
                                          .sender = is_user ? Sender::user : Sender::empa,
                                          .content = std::string(text_len(rng), 'a' + i % 26),
                                          .timestamp = {},
                                          .seq = static_cast<std::int64_t>(i + 1),
                                          .module = std::nullopt});
        }
        auto const context = llm::assemble_context(system, history, "next question");
        auto const& e = context.entries;
        auto const tag = "sample " + std::to_string(sample) + ": ";
        if (e.size() != n + 2) {
            problems.add(tag + "length " + std::to_string(e.size()));
            continue;
        }
        if (e.front().role != Role::system) {
            problems.add(tag + "first role not system");
        }
        if (e.back().role != Role::user || e.back().content != "next question") {
            problems.add(tag + "last entry not the new user message");
        }
        for (std::size_t i = 0; i < n; ++i) {
            Role const expected = history[i].sender == Sender::empa ? Role::assistant : Role::user;
            if (e[i + 1].role != expected || e[i + 1].content != history[i].content) {
                problems.add(tag + "mapping wrong at " + std::to_string(i));
                break;
            }
        }
    }
    return verdict(problems, std::to_string(context_samples) + " histories, 0 violations");
}

// ---------------------------------------------------------------------------

std::string random_output(std::mt19937& rng)
{
    std::uniform_int_distribution<std::size_t> words(0, max_output_words);
    std::uniform_int_distribution<int> style(0, 2);
    auto const n = words(rng);
    auto text = testing::random_words(rng, n, style(rng) != 0);
    if (style(rng) == 0) {
        text = "  \n" + text + " \t";
    }
    return text;
}

Outcome feedback_window()
{
    std::mt19937 rng(2);
    std::vector<std::string> outputs;
    for (int i = 0; i < window_samples; ++i) {
        outputs.push_back(random_output(rng));
    }

    Problems problems;
    llm::FeedbackWindow const window(feedback_words);
    for (auto const& raw : outputs) {
        auto const once = llm::enforce_window(raw, window);
        if (llm::enforce_window(once, window) != once) {
            problems.add("not idempotent for a " + std::to_string(oracle::word_count(raw)) +
                         "-word output");
        }
    }

    storage::MemoryStore store;
    QueueProvider provider(outputs);
    ServiceHarness api(store, provider, feedback_words);
    constexpr int users = 10;
    std::vector<std::string> ids;
    for (int u = 0; u < users; ++u) {
        ids.push_back(api.register_user("Learner" + std::to_string(u)));
    }
    std::size_t empty_replies = 0;
    for (int i = 0; i < window_samples; ++i) {
        auto const reply = api.chat(ids[static_cast<std::size_t>(i % users)], "Question " + std::to_string(i));
        if (reply.status == 502 && oracle::word_count(outputs[static_cast<std::size_t>(i)]) == 0) {
            ++empty_replies;  // a wordless provider reply is an upstream failure
        } else if (reply.status != 200) {
            problems.add("turn " + std::to_string(i) + " returned " + std::to_string(reply.status));
        }
    }
    std::size_t checked = 0;
    for (auto const& id : ids) {
        for (auto const& message : api.history(id)) {
            if (message["sender"] != "empa" || message["seq"] == 1) {
                continue;
            }
            ++checked;
            auto const words = oracle::word_count(message["content"].get<std::string>());
            if (words > feedback_words || words == 0) {
                problems.add("persisted reply with " + std::to_string(words) + " words");
            }
        }
    }
    if (checked + empty_replies != static_cast<std::size_t>(window_samples)) {
        problems.add("checked " + std::to_string(checked) + " replies");
    }
    return verdict(problems, std::to_string(checked) + " persisted replies <= " +
                                 std::to_string(feedback_words) + " words, " +
                                 std::to_string(empty_replies) + " empty outputs rejected");
}

// ---------------------------------------------------------------------------

Outcome unlock_prefix()
{
    Problems problems;
    auto const states = 1U << module_count;
    for (unsigned mask = 0; mask < states; ++mask) {
        ProgressMap progress;
        std::map<ModuleId, bool> flags;
        for (std::size_t i = 0; i < module_count; ++i) {
            bool const done = (mask >> i) & 1U;
            progress[all_modules[i]].completed = done;
            flags[all_modules[i]] = done;
        }
        auto const unlocked = curriculum::unlocked_modules(progress);
        int expected_order = 1;
        for (auto id : unlocked) {
            if (module_order(id) != expected_order++) {
                problems.add("not a prefix for state " + std::to_string(mask));
                break;
            }
        }
        if (unlocked != oracle::unlocked_by_recount(flags)) {
            problems.add("recount differs for state " + std::to_string(mask));
        }
    }

    // Step law over states a learner can reach: completions only ever happen
    // on unlocked modules, starting from nothing completed.
    auto const progress_of = [](unsigned mask) {
        ProgressMap progress;
        for (std::size_t i = 0; i < module_count; ++i) {
            progress[all_modules[i]].completed = (mask >> i) & 1U;
        }
        return progress;
    };
    std::set<unsigned> reachable{0U};
    std::vector<unsigned> frontier{0U};
    while (!frontier.empty()) {
        auto const mask = frontier.back();
        frontier.pop_back();
        auto const before = curriculum::unlocked_modules(progress_of(mask));
        for (std::size_t k = 0; k < module_count; ++k) {
            if (((mask >> k) & 1U) || !before.contains(all_modules[k])) {
                continue;
            }
            auto const next = mask | (1U << k);
            auto const after = curriculum::unlocked_modules(progress_of(next));
            std::set<ModuleId> allowed = before;
            if (k + 1 < module_count) {
                allowed.insert(all_modules[k + 1]);
            }
            if (!std::includes(allowed.begin(), allowed.end(), after.begin(), after.end()) ||
                !std::includes(after.begin(), after.end(), before.begin(), before.end())) {
                problems.add("completing " + std::to_string(k + 1) + " from state " +
                             std::to_string(mask) + " changed more than module " +
                             std::to_string(k + 2));
            }
            if (reachable.insert(next).second) {
                frontier.push_back(next);
            }
        }
    }
    return verdict(problems, std::to_string(states) + " states prefix/recount, " +
                                 std::to_string(reachable.size()) + " reachable states step law");
}

// ---------------------------------------------------------------------------

Outcome quiz_oracle()
{
    auto const curriculum = testing::shipped_curriculum();
    auto const& quiz = *curriculum.module(ModuleId::understanding_global_competence).quiz;
    std::vector<std::string> characters;
    std::vector<std::string> expected;
    for (auto const& item : quiz.items) {
        characters.push_back(item.character_id);
    }
    // Expected categories straight from the shipped document, not the parsed key.
    std::ifstream in(testing::data_dir() / "curriculum.json");
    auto const raw_key = json::parse(in)["modules"][3]["quiz"]["answer_key"];
    for (auto const& c : characters) {
        expected.push_back(raw_key.at(c).get<std::string>());
    }
    auto const& categories = quiz.categories;
    std::size_t const k = characters.size();

    Problems problems;
    std::size_t maps = 1;
    for (std::size_t i = 0; i < k; ++i) {
        maps *= categories.size();
    }
    for (std::size_t code = 0; code < maps; ++code) {
        curriculum::QuizAttempt attempt{quiz.quiz_id, {}, now_utc()};
        std::vector<std::string> assigned;
        for (std::size_t i = 0, rest = code; i < k; ++i, rest /= categories.size()) {
            assigned.push_back(categories[rest % categories.size()]);
            attempt.assignments[characters[i]] = assigned.back();
        }
        auto const result = curriculum::score_quiz(quiz, attempt);
        auto const recount = oracle::recount_matches(expected, assigned);
        if (result.correct_count != recount || result.passed != (recount == k) ||
            result.score != static_cast<double>(recount) / static_cast<double>(k)) {
            problems.add("map " + std::to_string(code) + " scored differently");
        }
    }

    std::vector<std::size_t> perm(categories.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::string, std::size_t> per_character;
    std::size_t sum = 0;
    std::size_t permutations = 0;
    do {
        curriculum::QuizAttempt attempt{quiz.quiz_id, {}, now_utc()};
        for (std::size_t i = 0; i < k; ++i) {
            attempt.assignments[characters[i]] = categories[perm[i]];
        }
        auto const result = curriculum::score_quiz(quiz, attempt);
        sum += result.correct_count;
        for (auto const& [c, ok] : result.per_item) {
            per_character[c] += ok ? 1 : 0;
        }
        ++permutations;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t factorial_k_minus_1 = 1;
    for (std::size_t i = 2; i < k; ++i) {
        factorial_k_minus_1 *= i;
    }
    if (sum != k * factorial_k_minus_1) {
        problems.add("permutation sum " + std::to_string(sum));
    }
    for (auto const& c : characters) {
        if (per_character[c] != factorial_k_minus_1) {
            problems.add(c + " correct in " + std::to_string(per_character[c]) + " of " +
                         std::to_string(permutations));
        }
    }
    return verdict(problems, std::to_string(maps) + " maps match, permutation sum " +
                                 std::to_string(sum) + " over " + std::to_string(permutations));
}

// ---------------------------------------------------------------------------

Outcome failure_atomicity()
{
    storage::MemoryStore store;
    auto echo = llm::MockProvider::echo();
    auto failing = llm::MockProvider::failing();
    ServiceHarness healthy(store, echo);
    ServiceHarness broken(store, failing);
    auto const user_id = healthy.register_user();
    (void)healthy.chat(user_id, "A successful turn first.");

    Problems problems;
    auto const baseline = healthy.history(user_id);
    for (int i = 0; i < injected_failures; ++i) {
        auto const reply = broken.chat(user_id, "Attempt " + std::to_string(i));
        if (reply.status != 502) {
            problems.add("attempt " + std::to_string(i) + " returned " +
                         std::to_string(reply.status));
        }
        if (healthy.history(user_id) != baseline) {
            problems.add("history changed after attempt " + std::to_string(i));
        }
    }
    return verdict(problems, std::to_string(injected_failures) + " x 502, history unchanged at " +
                                 std::to_string(baseline.size()) + " messages");
}

// ---------------------------------------------------------------------------

Outcome durability()
{
    testing::TempDir dir;
    auto const path = dir.file("durable.db");
    std::vector<std::string> ids;
    json users_before;
    json messages_before;
    json progress_before;
    auto snapshot = [&](storage::Store& store, json& users, json& messages, json& progress) {
        users = json::array();
        messages = json::array();
        progress = json::array();
        for (auto const& id : ids) {
            UserId const uid{id};
            auto const profile = store.find_user(uid);
            users.push_back(profile ? json(*profile) : json(nullptr));
            messages.push_back(store.get_history(uid));
            json p = json::object();
            for (auto const& [module, record] : store.get_progress(uid)) {
                p[std::string(to_string(module))] = record;
            }
            progress.push_back(p);
        }
    };
    {
        storage::SqliteStore store(path);
        auto echo = llm::MockProvider::echo();
        ServiceHarness api(store, echo);
        for (int u = 0; u < 3; ++u) {
            ids.push_back(api.register_user("Learner" + std::to_string(u)));
            (void)api.chat(ids.back(), "Hello from learner " + std::to_string(u));
            (void)api.post("/api/reflection/1", {{"user_id", ids.back()}, {"text", "I noticed."}});
        }
        (void)api.post("/api/acknowledge/2", {{"user_id", ids[0]}});
        snapshot(store, users_before, messages_before, progress_before);
    }
    storage::SqliteStore reopened(path);
    json users_after;
    json messages_after;
    json progress_after;
    snapshot(reopened, users_after, messages_after, progress_after);

    Problems problems;
    if (users_after.dump() != users_before.dump()) {
        problems.add("users differ");
    }
    if (messages_after.dump() != messages_before.dump()) {
        problems.add("messages differ");
    }
    if (progress_after.dump() != progress_before.dump()) {
        problems.add("progress differs");
    }
    std::size_t message_count = 0;
    for (auto const& m : messages_after) {
        message_count += m.size();
    }
    return verdict(problems, std::to_string(ids.size()) + " users, " +
                                 std::to_string(message_count) + " messages identical after reopen");
}

// ---------------------------------------------------------------------------

Outcome concurrency()
{
    storage::MemoryStore store;
    auto echo = llm::MockProvider::echo();
    ServiceHarness api(store, echo);
    Problems problems;

    {
        std::barrier start(parallel_sessions);
        std::vector<std::jthread> sessions;
        for (int s = 0; s < parallel_sessions; ++s) {
            sessions.emplace_back([&, s] {
                start.arrive_and_wait();
                auto const tag = "session-" + std::to_string(s);
                std::string user_id;
                try {
                    user_id = api.register_user(tag);
                } catch (std::exception const& e) {
                    problems.add(tag + " registration: " + e.what());
                    return;
                }
                for (int turn = 0; turn < 3; ++turn) {
                    auto const r = api.chat(user_id, tag + " turn " + std::to_string(turn));
                    if (r.status != 200) {
                        problems.add(tag + " turn failed");
                    }
                }
                auto const history = api.history(user_id);
                if (history.size() != 7) {
                    problems.add(tag + " has " + std::to_string(history.size()) + " messages");
                }
                for (auto const& m : history) {
                    if (m["user_id"] != user_id) {
                        problems.add(tag + " sees another user's message");
                    }
                    if (m["sender"] == "user" &&
                        !m["content"].get<std::string>().starts_with(tag + " turn")) {
                        problems.add(tag + " sees foreign content");
                    }
                }
            });
        }
    }

    auto const shared_user = api.register_user("Racer");
    {
        std::barrier start(racing_turns);
        std::vector<std::jthread> racers;
        for (int r = 0; r < racing_turns; ++r) {
            racers.emplace_back([&, r] {
                start.arrive_and_wait();
                if (api.chat(shared_user, "race " + std::to_string(r)).status != 200) {
                    problems.add("racing turn failed");
                }
            });
        }
    }
    auto const history = api.history(shared_user);
    if (history.size() != 1 + 2 * racing_turns) {
        problems.add("racing history has " + std::to_string(history.size()) + " messages");
    } else {
        for (std::size_t i = 1; i < history.size(); i += 2) {
            auto const& question = history[i];
            auto const& answer = history[i + 1];
            if (question["sender"] != "user" || answer["sender"] != "empa") {
                problems.add("pair at seq " + std::to_string(i + 1) + " does not alternate");
            } else if (answer["content"] != llm::echo_reply(question["content"].get<std::string>())) {
                problems.add("reply at seq " + std::to_string(i + 2) + " answers another turn");
            }
        }
    }
    return verdict(problems, std::to_string(parallel_sessions) + " isolated sessions, " +
                                 std::to_string(racing_turns) + " racing turns paired");
}

} // namespace

int main()
{
    struct Criterion
    {
        char const* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> const criteria{
        {"end-to-end session contract", end_to_end_session},
        {"context assembly properties", context_assembly},
        {"feedback window", feedback_window},
        {"unlock prefix property", unlock_prefix},
        {"quiz oracle equivalence", quiz_oracle},
        {"failure atomicity", failure_atomicity},
        {"durability across reopen", durability},
        {"concurrency isolation", concurrency},
    };

    int failed = 0;
    for (auto const& criterion : criteria) {
        Outcome outcome{false, {}};
        auto const start = std::chrono::steady_clock::now();
        try {
            outcome = criterion.run();
        } catch (std::exception const& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        std::printf("%s  %-30s %s (%lld ms)\n", outcome.passed ? "PASS" : "FAIL", criterion.name,
                    outcome.detail.c_str(), static_cast<long long>(ms));
        failed += outcome.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
