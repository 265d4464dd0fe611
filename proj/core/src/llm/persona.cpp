#include "empa/llm/persona.hpp"

#include "empa/domain/error.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace empa::llm {

namespace {

constexpr std::array<std::string_view, 3> placeholders{"name", "major", "course"};

constexpr char const* builtin_template =
    "You are Empa, a friendly, helpful, and knowledgeable mentor focused on "
    "interpersonal and intercultural collaboration in computing teams. You are "
    "coaching {{name}}, a {{major}} student in {{course}}. Address the learner by "
    "name, draw on cultural dimensions such as power distance, communication "
    "style, individualism versus collectivism and time orientation, encourage "
    "reflection and perspective-taking, and keep every reply under 80 words.";

/// Replaces each {{key}} with lookup(key) in one left-to-right pass, so
/// substituted values are never rescanned.
template <typename Lookup>
std::string substitute(std::string_view text, Lookup lookup)
{
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto const open = text.find("{{", pos);
        if (open == std::string_view::npos) {
            out.append(text.substr(pos));
            break;
        }
        auto const close = text.find("}}", open + 2);
        if (close == std::string_view::npos) {
            throw configuration_error("persona template has an unterminated placeholder");
        }
        out.append(text.substr(pos, open - pos));
        out.append(lookup(text.substr(open + 2, close - open - 2)));
        pos = close + 2;
    }
    return out;
}

} // namespace

PersonaPrompt::PersonaPrompt(std::string text)
: text_(std::move(text))
{ }

PersonaPrompt PersonaPrompt::load(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw configuration_error("cannot read persona template " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    PersonaPrompt prompt(buffer.str());
    prompt.check();
    return prompt;
}

PersonaPrompt PersonaPrompt::builtin()
{
    return PersonaPrompt(builtin_template);
}

void PersonaPrompt::check() const
{
    for (auto key : placeholders) {
        if (text_.find("{{" + std::string(key) + "}}") == std::string::npos) {
            throw configuration_error("persona template lacks the {{" + std::string(key) +
                                      "}} placeholder");
        }
    }
    if (text_.find(persona_clause) == std::string::npos) {
        throw configuration_error("persona template must contain \"" +
                                  std::string(persona_clause) + "\"");
    }
    // Rejects unknown or unterminated placeholders.
    (void)substitute(text_, [](std::string_view key) -> std::string {
        for (auto known : placeholders) {
            if (key == known) {
                return {};
            }
        }
        throw configuration_error("unknown persona placeholder {{" + std::string(key) + "}}");
    });
}

ContextEntry build_system_prompt(UserProfile const& profile, PersonaPrompt const& persona)
{
    persona.check();
    auto content = substitute(persona.text(), [&](std::string_view key) -> std::string {
        if (key == "name") {
            return profile.name;
        }
        if (key == "major") {
            return profile.major;
        }
        return profile.course;
    });
    return ContextEntry{Role::system, std::move(content)};
}

std::string render_greeting(UserProfile const& profile,
                            std::span<std::string const> module_titles)
{
    std::ostringstream out;
    out << "Hi " << profile.name << "! I'm Empa, your guide for intercultural collaboration";
    if (!profile.course.empty()) {
        out << " in " << profile.course;
    }
    out << ". ";
    if (!profile.major.empty()) {
        out << "As a " << profile.major << " student, you will work in diverse teams. ";
    }
    out << "Our journey:";
    for (std::size_t i = 0; i < module_titles.size(); ++i) {
        out << ' ' << (i + 1) << ". " << module_titles[i]
            << (i + 1 == module_titles.size() ? '.' : ';');
    }
    out << " Modules unlock one at a time. Ask me anything along the way!";
    return out.str();
}

} // namespace empa::llm
