#include "empa/curriculum/completion.hpp"

namespace empa::curriculum {

bool evaluate_completion(ModuleDefinition const& module, ModuleActivity const& activity) noexcept
{
    bool const quiz_passed = activity.latest_quiz_passed.value_or(false);
    switch (module.completion_rule) {
    case CompletionRule::reflection_submitted: return activity.reflection_submitted;
    case CompletionRule::quiz_passed: return quiz_passed;
    case CompletionRule::both: return activity.reflection_submitted && quiz_passed;
    case CompletionRule::view_only: return activity.acknowledged;
    }
    return false;
}

} // namespace empa::curriculum
