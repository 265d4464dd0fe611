#pragma once

#include "empa/curriculum/curriculum.hpp"
#include "empa/domain/time.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <map>
#include <string>

namespace empa::curriculum {

struct QuizAttempt
{
    std::string quiz_id;
    std::map<std::string, std::string> assignments;  // character_id -> category
    Timestamp submitted_at{};
};

struct QuizResult
{
    std::size_t correct_count{0};
    std::size_t total{0};
    double score{0.0};  // correct_count / total
    bool passed{false};  // every character placed correctly
    std::map<std::string, bool> per_item;
};

/// Counts characters placed in their answer-key category. Validation errors:
/// quiz id mismatch, a character missing or not in the quiz, or a category
/// the quiz does not offer.
[[nodiscard]] QuizResult score_quiz(QuizDefinition const& definition, QuizAttempt const& attempt);

[[nodiscard]] nlohmann::json to_json(QuizResult const& result);

} // namespace empa::curriculum
