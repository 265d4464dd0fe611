#pragma once

#include "empa/domain/types.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace empa::curriculum {

enum class CompletionRule { reflection_submitted, quiz_passed, both, view_only };

[[nodiscard]] std::string_view to_string(CompletionRule rule) noexcept;
[[nodiscard]] std::optional<CompletionRule> parse_completion_rule(std::string_view text) noexcept;

[[nodiscard]] constexpr bool needs_quiz(CompletionRule rule) noexcept
{
    return rule == CompletionRule::quiz_passed || rule == CompletionRule::both;
}

[[nodiscard]] constexpr bool needs_reflection(CompletionRule rule) noexcept
{
    return rule == CompletionRule::reflection_submitted || rule == CompletionRule::both;
}

struct QuizItem
{
    std::string character_id;
    std::string label;
};

/// Drag-and-drop matching task: place each character into one category.
struct QuizDefinition
{
    std::string quiz_id;
    std::vector<QuizItem> items;
    std::vector<std::string> categories;
    std::map<std::string, std::string> answer_key;  // character_id -> category
};

struct ModuleDefinition
{
    ModuleId id{ModuleId::exploring_interpersonal_collaboration};
    std::string title;
    std::vector<std::string> media;
    std::vector<std::string> prompts;
    std::optional<QuizDefinition> quiz;
    CompletionRule completion_rule{CompletionRule::reflection_submitted};
};

/// The six modules, held in delivery order.
class Curriculum
{
public:
    Curriculum(std::string version, std::array<ModuleDefinition, module_count> modules);

    [[nodiscard]] std::string const& version() const noexcept { return version_; }
    [[nodiscard]] std::array<ModuleDefinition, module_count> const& modules() const noexcept
    {
        return modules_;
    }
    [[nodiscard]] ModuleDefinition const& module(ModuleId id) const noexcept
    {
        return modules_[static_cast<std::size_t>(module_order(id) - 1)];
    }
    [[nodiscard]] std::vector<std::string> titles() const;

private:
    std::string version_;
    std::array<ModuleDefinition, module_count> modules_;
};

/// Validates and orders a curriculum document:
///   {version, modules: [{id, title, media, prompts, quiz?, completion_rule}]}
///   quiz = {quiz_id, categories, items: [{character_id, label}], answer_key}
/// Throws a configuration Error whose message starts with the JSON location.
[[nodiscard]] Curriculum load_curriculum(nlohmann::json const& document);
[[nodiscard]] Curriculum load_curriculum_file(std::filesystem::path const& path);

/// Client views. The answer key is never serialized.
[[nodiscard]] nlohmann::json to_json(QuizDefinition const& quiz);
[[nodiscard]] nlohmann::json to_json(ModuleDefinition const& module);

} // namespace empa::curriculum
