#include "empa/curriculum/curriculum.hpp"
#include "empa/curriculum/quiz.hpp"
#include "empa/domain/identifiers.hpp"
#include "empa/llm/context.hpp"
#include "empa/llm/window.hpp"
#include "empa/storage/memory_store.hpp"
#include "empa/storage/sqlite_store.hpp"

#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>
#include <vector>

namespace {

using namespace empa;

std::string words(std::size_t n, std::size_t sentence_every)
{
    std::string out;
    for (std::size_t i = 1; i <= n; ++i) {
        out += (i > 1 ? " " : "") + std::string("word");
        if (sentence_every && i % sentence_every == 0) {
            out += '.';
        }
    }
    return out;
}

void BM_EnforceWindow(benchmark::State& state)
{
    auto const raw = words(static_cast<std::size_t>(state.range(0)), 13);
    llm::FeedbackWindow const window;
    for (auto _ : state) {
        benchmark::DoNotOptimize(llm::enforce_window(raw, window));
    }
}
BENCHMARK(BM_EnforceWindow)->Arg(40)->Arg(200)->Arg(2000);

std::vector<ChatMessage> history_of(std::size_t n)
{
    std::vector<ChatMessage> history;
    for (std::size_t i = 0; i < n; ++i) {
        history.push_back(ChatMessage{.message_id = new_message_id(),
                                      .user_id = UserId{"u"},
                                      .sender = i % 2 == 0 ? Sender::empa : Sender::user,
                                      .content = words(40, 10),
                                      .timestamp = now_utc(),
                                      .seq = static_cast<std::int64_t>(i + 1),
                                      .module = std::nullopt});
    }
    return history;
}

void BM_AssembleContext(benchmark::State& state)
{
    auto const history = history_of(static_cast<std::size_t>(state.range(0)));
    llm::ContextEntry const system{Role::system, words(120, 20)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(llm::assemble_context(system, history, "next"));
    }
}
BENCHMARK(BM_AssembleContext)->Arg(7)->Arg(101)->Arg(1001);

void BM_TrimToBudget(benchmark::State& state)
{
    auto const history = history_of(static_cast<std::size_t>(state.range(0)));
    auto const context = llm::assemble_context({Role::system, "s"}, history, "next");
    for (auto _ : state) {
        benchmark::DoNotOptimize(llm::trim_to_budget(context, llm::default_token_budget));
    }
}
BENCHMARK(BM_TrimToBudget)->Arg(101)->Arg(1001);

UserProfile bench_profile()
{
    UserProfile p;
    p.user_id = new_user_id();
    p.name = "Bench";
    p.email = "bench-" + p.user_id.str() + "@example.edu";
    p.year_of_study = "Senior";
    p.gender = "Other";
    p.major = "Computer Science";
    p.instructor = "Dr. Rivera";
    p.course = "CS 352";
    p.created_at = now_utc();
    return p;
}

std::vector<MessageDraft> const turn{MessageDraft{Sender::user, "question", std::nullopt},
                                     MessageDraft{Sender::empa, "answer", std::nullopt}};

void BM_MemoryAppendTurn(benchmark::State& state)
{
    storage::MemoryStore store;
    auto const profile = store.create_user(bench_profile(), {});
    for (auto _ : state) {
        benchmark::DoNotOptimize(store.append_turn(profile.user_id, turn));
    }
}
BENCHMARK(BM_MemoryAppendTurn);

void BM_SqliteAppendTurn(benchmark::State& state)
{
    auto const path = std::filesystem::temp_directory_path() / ("empa-bench-" + new_random_id() + ".db");
    {
        storage::SqliteStore store(path);
        auto const profile = store.create_user(bench_profile(), {});
        for (auto _ : state) {
            benchmark::DoNotOptimize(store.append_turn(profile.user_id, turn));
        }
    }
    for (auto const* suffix : {"", "-wal", "-shm"}) {
        std::filesystem::remove(path.string() + suffix);
    }
}
BENCHMARK(BM_SqliteAppendTurn)->Unit(benchmark::kMicrosecond);

void BM_ScoreQuiz(benchmark::State& state)
{
    curriculum::QuizDefinition quiz;
    quiz.quiz_id = "q";
    quiz.categories = {"a", "b", "c", "d"};
    for (auto const* c : {"w", "x", "y", "z"}) {
        quiz.items.push_back({c, c});
    }
    quiz.answer_key = {{"w", "a"}, {"x", "b"}, {"y", "c"}, {"z", "d"}};
    curriculum::QuizAttempt const attempt{"q", {{"w", "a"}, {"x", "c"}, {"y", "c"}, {"z", "d"}}, now_utc()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(curriculum::score_quiz(quiz, attempt));
    }
}
BENCHMARK(BM_ScoreQuiz);

} // namespace

BENCHMARK_MAIN();
