#include "empa/curriculum/curriculum.hpp"

#include "empa/domain/error.hpp"
#include "empa/domain/json.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>

namespace empa::curriculum {

using nlohmann::json;

std::string_view to_string(CompletionRule rule) noexcept
{
    switch (rule) {
    case CompletionRule::reflection_submitted: return "reflection_submitted";
    case CompletionRule::quiz_passed: return "quiz_passed";
    case CompletionRule::both: return "both";
    case CompletionRule::view_only: return "view_only";
    }
    return "";
}

std::optional<CompletionRule> parse_completion_rule(std::string_view text) noexcept
{
    for (auto rule : {CompletionRule::reflection_submitted, CompletionRule::quiz_passed,
                      CompletionRule::both, CompletionRule::view_only}) {
        if (text == to_string(rule)) {
            return rule;
        }
    }
    return std::nullopt;
}

Curriculum::Curriculum(std::string version, std::array<ModuleDefinition, module_count> modules)
: version_(std::move(version))
, modules_(std::move(modules))
{ }

std::vector<std::string> Curriculum::titles() const
{
    std::vector<std::string> out;
    for (auto const& m : modules_) {
        out.push_back(m.title);
    }
    return out;
}

namespace {

[[noreturn]] void bad(std::string const& where, std::string const& what)
{
    throw configuration_error(where + ": " + what);
}

json const& field(json const& object, char const* key, std::string const& where)
{
    if (!object.is_object()) {
        bad(where, "expected an object");
    }
    auto it = object.find(key);
    if (it == object.end()) {
        bad(where, std::string("missing \"") + key + "\"");
    }
    return *it;
}

std::string string_field(json const& object, char const* key, std::string const& where)
{
    auto const& value = field(object, key, where);
    if (!value.is_string() || value.get_ref<std::string const&>().empty()) {
        bad(where + "." + key, "expected a non-empty string");
    }
    return value.get<std::string>();
}

std::vector<std::string> string_list(json const& object, char const* key,
                                     std::string const& where)
{
    auto const& value = field(object, key, where);
    auto const here = where + "." + key;
    if (!value.is_array()) {
        bad(here, "expected an array of strings");
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (!value[i].is_string()) {
            bad(here + "[" + std::to_string(i) + "]", "expected a string");
        }
        out.push_back(value[i].get<std::string>());
    }
    return out;
}

QuizDefinition parse_quiz(json const& node, std::string const& where)
{
    QuizDefinition quiz;
    quiz.quiz_id = string_field(node, "quiz_id", where);
    quiz.categories = string_list(node, "categories", where);
    if (quiz.categories.empty()) {
        bad(where + ".categories", "at least one category is required");
    }
    std::set<std::string> const categories(quiz.categories.begin(), quiz.categories.end());
    if (categories.size() != quiz.categories.size()) {
        bad(where + ".categories", "duplicate category");
    }

    auto const& items = field(node, "items", where);
    if (!items.is_array() || items.empty()) {
        bad(where + ".items", "expected a non-empty array");
    }
    std::set<std::string> characters;
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto const here = where + ".items[" + std::to_string(i) + "]";
        QuizItem item{string_field(items[i], "character_id", here),
                      string_field(items[i], "label", here)};
        if (!characters.insert(item.character_id).second) {
            bad(here, "duplicate character \"" + item.character_id + "\"");
        }
        quiz.items.push_back(std::move(item));
    }

    auto const& key = field(node, "answer_key", where);
    if (!key.is_object()) {
        bad(where + ".answer_key", "expected an object");
    }
    for (auto const& [character, category] : key.items()) {
        auto const here = where + ".answer_key." + character;
        if (!characters.contains(character)) {
            bad(here, "unknown character \"" + character + "\"");
        }
        if (!category.is_string() || !categories.contains(category.get<std::string>())) {
            bad(here, "category must be one of the quiz categories");
        }
        quiz.answer_key.emplace(character, category.get<std::string>());
    }
    for (auto const& character : characters) {
        if (!quiz.answer_key.contains(character)) {
            bad(where + ".answer_key", "no answer for character \"" + character + "\"");
        }
    }
    return quiz;
}

ModuleDefinition parse_module(json const& node, std::string const& where)
{
    ModuleDefinition module;
    auto const id_text = string_field(node, "id", where);
    auto id = parse_module_id(id_text);
    if (!id || id_text != to_string(*id)) {
        bad(where + ".id", "unknown module id \"" + id_text + "\"");
    }
    module.id = *id;
    module.title = string_field(node, "title", where);
    module.media = string_list(node, "media", where);
    module.prompts = string_list(node, "prompts", where);

    auto const rule_text = string_field(node, "completion_rule", where);
    auto rule = parse_completion_rule(rule_text);
    if (!rule) {
        bad(where + ".completion_rule", "unknown rule \"" + rule_text + "\"");
    }
    module.completion_rule = *rule;

    if (auto it = node.find("quiz"); it != node.end() && !it->is_null()) {
        module.quiz = parse_quiz(*it, where + ".quiz");
    }
    if (needs_quiz(module.completion_rule) != module.quiz.has_value()) {
        bad(where, module.quiz ? "quiz given but completion_rule does not use it"
                               : "completion_rule requires a quiz");
    }
    if (needs_reflection(module.completion_rule) && module.prompts.empty()) {
        bad(where + ".prompts", "reflection modules need at least one prompt");
    }
    return module;
}

} // namespace

Curriculum load_curriculum(json const& document)
{
    auto const version = string_field(document, "version", "$");
    auto const& modules = field(document, "modules", "$");
    if (!modules.is_array()) {
        bad("$.modules", "expected an array");
    }

    std::array<std::optional<ModuleDefinition>, module_count> slots;
    for (std::size_t i = 0; i < modules.size(); ++i) {
        auto const where = "$.modules[" + std::to_string(i) + "]";
        auto module = parse_module(modules[i], where);
        auto& slot = slots[static_cast<std::size_t>(module_order(module.id) - 1)];
        if (slot) {
            bad(where + ".id", "duplicate module \"" + std::string(to_string(module.id)) + "\"");
        }
        slot = std::move(module);
    }

    std::array<ModuleDefinition, module_count> ordered;
    for (std::size_t i = 0; i < module_count; ++i) {
        if (!slots[i]) {
            bad("$.modules", "missing module \"" + std::string(to_string(all_modules[i])) + "\"");
        }
        ordered[i] = std::move(*slots[i]);
    }
    return Curriculum(version, std::move(ordered));
}

Curriculum load_curriculum_file(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw configuration_error("cannot read curriculum " + path.string());
    }
    json document;
    try {
        document = json::parse(in);
    } catch (json::parse_error const& e) {
        throw configuration_error(path.string() + ": " + e.what());
    }
    return load_curriculum(document);
}

json to_json(QuizDefinition const& quiz)
{
    json items = json::array();
    for (auto const& item : quiz.items) {
        items.push_back({{"character_id", item.character_id}, {"label", item.label}});
    }
    return json{{"quiz_id", quiz.quiz_id}, {"categories", quiz.categories}, {"items", items}};
}

json to_json(ModuleDefinition const& module)
{
    json out{
        {"id", module.id},
        {"order", module_order(module.id)},
        {"title", module.title},
        {"media", module.media},
        {"prompts", module.prompts},
        {"completion_rule", std::string(to_string(module.completion_rule))},
        {"quiz", nullptr},
    };
    if (module.quiz) {
        out["quiz"] = to_json(*module.quiz);
    }
    return out;
}

} // namespace empa::curriculum
