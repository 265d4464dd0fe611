#pragma once

#include "empa/curriculum/curriculum.hpp"
#include "empa/domain/error.hpp"
#include "empa/domain/identifiers.hpp"
#include "empa/domain/types.hpp"
#include "empa/llm/persona.hpp"
#include "empa/storage/store.hpp"

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>

#ifndef EMPA_DATA_DIR
#error "EMPA_DATA_DIR must point at core/data"
#endif

namespace empa::testing {

inline std::filesystem::path data_dir() { return EMPA_DATA_DIR; }

inline curriculum::Curriculum shipped_curriculum()
{
    return curriculum::load_curriculum_file(data_dir() / "curriculum.json");
}

inline llm::PersonaPrompt shipped_persona()
{
    return llm::PersonaPrompt::load(data_dir() / "persona.txt");
}

/// Directory removed on destruction.
class TempDir
{
public:
    TempDir()
    {
        path_ = std::filesystem::temp_directory_path() / ("empa-test-" + new_random_id());
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(TempDir const&) = delete;
    TempDir& operator=(TempDir const&) = delete;

    [[nodiscard]] std::filesystem::path const& path() const { return path_; }
    [[nodiscard]] std::filesystem::path file(std::string const& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline UserProfile make_profile(std::string name = "Ada", std::string email = "")
{
    UserProfile p;
    p.user_id = new_user_id();
    p.name = std::move(name);
    p.email = email.empty() ? "user-" + p.user_id.str() + "@example.edu" : std::move(email);
    p.year_of_study = "Junior";
    p.gender = "Female";
    p.major = "Computer Science";
    p.instructor = "Dr. Rivera";
    p.course = "CS 352";
    p.created_at = now_utc();
    return p;
}

/// Fault hook that throws a storage error on the nth hit of one point.
class CountdownFault
{
public:
    CountdownFault(std::string point, int nth)
    : point_(std::move(point))
    , remaining_(nth)
    { }

    void arm(int nth) { remaining_.store(nth); }
    void disarm() { remaining_.store(-1); }

    void operator()(std::string_view point)
    {
        if (point != point_) {
            return;
        }
        if (remaining_.load() > 0 && --remaining_ == 0) {
            throw storage_error("injected fault at " + point_);
        }
    }

    storage::FaultHook hook()
    {
        return [this](std::string_view point) { (*this)(point); };
    }

private:
    std::string point_;
    std::atomic<int> remaining_;
};

/// Deterministic fake clock advancing 1 ms per reading.
class StepClock
{
public:
    explicit StepClock(Timestamp start = parse_timestamp("2026-01-05T09:00:00.000Z"))
    : next_(start.time_since_epoch().count())
    { }

    Clock clock()
    {
        return [this] { return Timestamp{std::chrono::milliseconds{next_.fetch_add(1)}}; };
    }

private:
    std::atomic<std::int64_t> next_;
};

inline std::string random_words(std::mt19937& rng, std::size_t n, bool punctuate)
{
    static constexpr std::string_view vocabulary[] = {
        "team", "culture", "listen", "deadline", "trust", "review", "feedback", "respect",
        "well-being", "context", "norms", "hierarchy", "consensus", "time", "direct",
    };
    static constexpr std::string_view separators[] = {" ", " ", " ", "  ", "\n", "\t"};
    std::uniform_int_distribution<std::size_t> pick_word(0, std::size(vocabulary) - 1);
    std::uniform_int_distribution<std::size_t> pick_sep(0, std::size(separators) - 1);
    std::uniform_int_distribution<int> pick_mark(0, 11);
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            out += separators[pick_sep(rng)];
        }
        out += vocabulary[pick_word(rng)];
        if (punctuate) {
            switch (pick_mark(rng)) {
            case 0: out += '.'; break;
            case 1: out += '!'; break;
            case 2: out += '?'; break;
            case 3: out += ','; break;
            default: break;
            }
        }
    }
    return out;
}

} // namespace empa::testing
