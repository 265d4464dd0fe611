#pragma once

#include "empa/curriculum/curriculum.hpp"

#include <optional>

namespace empa::curriculum {

/// What a learner has done inside one module.
struct ModuleActivity
{
    bool reflection_submitted{false};
    std::optional<bool> latest_quiz_passed;  // empty until the first attempt
    bool acknowledged{false};                 // explicit "viewed" for view_only modules
};

[[nodiscard]] bool evaluate_completion(ModuleDefinition const& module,
                                       ModuleActivity const& activity) noexcept;

} // namespace empa::curriculum
