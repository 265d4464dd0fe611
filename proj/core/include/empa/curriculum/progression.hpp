#pragma once

#include "empa/curriculum/completion.hpp"
#include "empa/curriculum/curriculum.hpp"
#include "empa/curriculum/quiz.hpp"
#include "empa/storage/store.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace empa::curriculum {

/// Runs one persisted chat turn, tagging the user message with the module.
using TurnRunner =
    std::function<ChatTurn(UserId const&, std::string_view, std::optional<ModuleId>)>;

struct ReflectionOutcome
{
    ChatTurn turn;
    bool module_completed{false};
};

struct QuizOutcome
{
    QuizResult result;
    QuizAttemptRecord record;
    bool module_completed{false};
};

/// Learner-facing curriculum operations on top of a store. Holds no
/// per-learner state; everything is read back from the store per call.
class Progression
{
public:
    Progression(Curriculum const& curriculum, storage::Store& store);

    /// Error(not_found) for an unknown user, Error(forbidden) for a locked module.
    void require_unlocked(UserId const& user_id, ModuleId module) const;

    [[nodiscard]] ModuleActivity activity(UserId const& user_id, ModuleId module) const;

    /// Marks the module complete when its rule is now satisfied.
    /// Returns whether the module is complete afterwards.
    bool refresh_completion(UserId const& user_id, ModuleId module);

    /// Blank text is a validation error. The reflection is persisted as a
    /// module-tagged user message through the supplied chat turn.
    ReflectionOutcome submit_reflection(UserId const& user_id, ModuleId module,
                                        std::string_view text, TurnRunner const& run_turn);

    /// Error(not_found) when the module has no quiz.
    QuizOutcome submit_quiz(UserId const& user_id, ModuleId module, QuizAttempt const& attempt);

    /// Records the explicit "viewed" acknowledgment of a view_only module.
    CompletionRecord acknowledge(UserId const& user_id, ModuleId module);

private:
    Curriculum const& curriculum_;
    storage::Store& store_;
};

} // namespace empa::curriculum
