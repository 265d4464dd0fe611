#pragma once

#include "empa/domain/types.hpp"
#include "empa/llm/context.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace empa::llm {

/// The clause every rendered persona prompt must carry verbatim.
inline constexpr std::string_view persona_clause = "friendly, helpful, and knowledgeable";

/// System prompt template with {{name}}, {{major}} and {{course}} placeholders.
class PersonaPrompt
{
public:
    explicit PersonaPrompt(std::string text);

    /// Reads a template file; a missing or unreadable file is a configuration error.
    [[nodiscard]] static PersonaPrompt load(std::filesystem::path const& path);

    /// The built-in mentor persona.
    [[nodiscard]] static PersonaPrompt builtin();

    [[nodiscard]] std::string const& text() const noexcept { return text_; }

    /// Throws a configuration Error if a placeholder or the persona clause
    /// is missing, or an unknown {{placeholder}} is present.
    void check() const;

private:
    std::string text_;
};

/// Renders the persona for one learner. Deterministic for fixed inputs.
[[nodiscard]] ContextEntry build_system_prompt(UserProfile const& profile,
                                               PersonaPrompt const& persona);

/// The templated first message a learner sees after registering: greets them
/// by name, acknowledges their course and major, and outlines the modules.
[[nodiscard]] std::string render_greeting(UserProfile const& profile,
                                          std::span<std::string const> module_titles);

} // namespace empa::llm
