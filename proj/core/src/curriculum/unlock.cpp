#include "empa/curriculum/unlock.hpp"

namespace empa::curriculum {

std::set<ModuleId> unlocked_modules(ProgressMap const& progress)
{
    std::set<ModuleId> unlocked;
    for (auto id : all_modules) {
        unlocked.insert(id);
        auto it = progress.find(id);
        if (it == progress.end() || !it->second.completed) {
            break;
        }
    }
    return unlocked;
}

bool is_unlocked(ProgressMap const& progress, ModuleId module)
{
    return unlocked_modules(progress).contains(module);
}

} // namespace empa::curriculum
