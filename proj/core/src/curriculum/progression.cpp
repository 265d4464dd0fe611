#include "empa/curriculum/progression.hpp"

#include "empa/curriculum/unlock.hpp"
#include "empa/domain/error.hpp"

#include <algorithm>

namespace empa::curriculum {

namespace {

bool is_blank(std::string_view text)
{
    return text.find_first_not_of(" \t\n\v\f\r") == std::string_view::npos;
}

} // namespace

Progression::Progression(Curriculum const& curriculum, storage::Store& store)
: curriculum_(curriculum)
, store_(store)
{ }

void Progression::require_unlocked(UserId const& user_id, ModuleId module) const
{
    if (!is_unlocked(store_.get_progress(user_id), module)) {
        throw Error(ErrorKind::forbidden, "module_locked",
                    "module \"" + std::string(to_string(module)) +
                        "\" is locked until earlier modules are completed");
    }
}

ModuleActivity Progression::activity(UserId const& user_id, ModuleId module) const
{
    ModuleActivity activity;
    auto const history = store_.get_history(user_id);
    activity.reflection_submitted =
        std::any_of(history.begin(), history.end(), [&](ChatMessage const& m) {
            return m.sender == Sender::user && m.module == module;
        });
    if (auto attempt = store_.latest_quiz_attempt(user_id, module)) {
        activity.latest_quiz_passed = attempt->score == 1.0;
    }
    activity.acknowledged = store_.get_progress(user_id).at(module).completed &&
                            curriculum_.module(module).completion_rule == CompletionRule::view_only;
    return activity;
}

bool Progression::refresh_completion(UserId const& user_id, ModuleId module)
{
    if (store_.get_progress(user_id).at(module).completed) {
        return true;
    }
    if (!evaluate_completion(curriculum_.module(module), activity(user_id, module))) {
        return false;
    }
    return store_.mark_complete(user_id, module).completed;
}

ReflectionOutcome Progression::submit_reflection(UserId const& user_id, ModuleId module,
                                                 std::string_view text,
                                                 TurnRunner const& run_turn)
{
    if (is_blank(text)) {
        throw validation_error("empty_reflection", "reflection text must not be empty", "text");
    }
    require_unlocked(user_id, module);
    ReflectionOutcome outcome;
    outcome.turn = run_turn(user_id, text, module);
    outcome.module_completed = refresh_completion(user_id, module);
    return outcome;
}

QuizOutcome Progression::submit_quiz(UserId const& user_id, ModuleId module,
                                     QuizAttempt const& attempt)
{
    auto const& definition = curriculum_.module(module);
    if (!definition.quiz) {
        throw not_found_error("no_quiz", "module \"" + std::string(to_string(module)) +
                                             "\" has no quiz");
    }
    require_unlocked(user_id, module);
    QuizOutcome outcome;
    outcome.result = score_quiz(*definition.quiz, attempt);
    outcome.record = store_.record_quiz_attempt(user_id, module, outcome.result.score);
    outcome.module_completed = refresh_completion(user_id, module);
    return outcome;
}

CompletionRecord Progression::acknowledge(UserId const& user_id, ModuleId module)
{
    require_unlocked(user_id, module);
    auto const& definition = curriculum_.module(module);
    if (definition.completion_rule != CompletionRule::view_only) {
        throw validation_error("not_view_only",
                               "module \"" + std::string(to_string(module)) +
                                   "\" is completed by " +
                                   std::string(to_string(definition.completion_rule)),
                               "module_id");
    }
    ModuleActivity activity;
    activity.acknowledged = true;
    if (!evaluate_completion(definition, activity)) {
        return store_.get_progress(user_id).at(module);
    }
    return store_.mark_complete(user_id, module);
}

} // namespace empa::curriculum
