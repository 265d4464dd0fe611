#include "empa/curriculum/quiz.hpp"

#include "empa/domain/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace empa::curriculum {

QuizResult score_quiz(QuizDefinition const& definition, QuizAttempt const& attempt)
{
    if (attempt.quiz_id != definition.quiz_id) {
        throw validation_error("quiz_mismatch",
                               "attempt is for quiz \"" + attempt.quiz_id + "\", expected \"" +
                                   definition.quiz_id + "\"",
                               "quiz_id");
    }
    for (auto const& [character, category] : attempt.assignments) {
        if (!definition.answer_key.contains(character)) {
            throw validation_error("unknown_character",
                                   "character \"" + character + "\" is not in this quiz",
                                   "assignments");
        }
        if (std::find(definition.categories.begin(), definition.categories.end(), category) ==
            definition.categories.end()) {
            throw validation_error("unknown_category",
                                   "category \"" + category + "\" is not offered by this quiz",
                                   "assignments");
        }
    }

    QuizResult result;
    result.total = definition.answer_key.size();
    for (auto const& [character, expected] : definition.answer_key) {
        auto it = attempt.assignments.find(character);
        if (it == attempt.assignments.end()) {
            throw validation_error("missing_character",
                                   "character \"" + character + "\" was not placed",
                                   "assignments");
        }
        bool const correct = it->second == expected;
        result.per_item.emplace(character, correct);
        result.correct_count += correct ? 1 : 0;
    }
    result.score = result.total == 0
                       ? 0.0
                       : static_cast<double>(result.correct_count) / static_cast<double>(result.total);
    result.passed = result.total > 0 && result.correct_count == result.total;
    return result;
}

nlohmann::json to_json(QuizResult const& result)
{
    return nlohmann::json{
        {"correct_count", result.correct_count},
        {"total", result.total},
        {"score", result.score},
        {"passed", result.passed},
        {"per_item", result.per_item},
    };
}

} // namespace empa::curriculum
