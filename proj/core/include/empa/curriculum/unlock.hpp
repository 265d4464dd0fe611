#pragma once

#include "empa/domain/types.hpp"

#include <set>

namespace empa::curriculum {

/// Module k is unlocked iff every module before it is completed. The result
/// is always a non-empty prefix of the module order. Modules absent from
/// progress count as not completed.
[[nodiscard]] std::set<ModuleId> unlocked_modules(ProgressMap const& progress);

[[nodiscard]] bool is_unlocked(ProgressMap const& progress, ModuleId module);

} // namespace empa::curriculum
