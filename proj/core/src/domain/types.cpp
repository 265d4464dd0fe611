#include "empa/domain/types.hpp"

#include "empa/domain/error.hpp"
#include "empa/domain/identifiers.hpp"

#include <charconv>

namespace empa {

namespace {

bool is_blank(std::string_view text)
{
    return text.find_first_not_of(" \t\n\v\f\r") == std::string_view::npos;
}

} // namespace

void validate_profile(UserProfile const& profile)
{
    if (profile.user_id.empty()) {
        throw validation_error("missing_field", "user_id is required", "user_id");
    }
    if (is_blank(profile.name)) {
        throw validation_error("missing_field", "name must not be blank", "name");
    }
    if (!validate_email(profile.email)) {
        throw validation_error("invalid_email", "email is not a valid address", "email");
    }
}

std::string_view to_string(Sender sender) noexcept
{
    return sender == Sender::user ? "user" : "empa";
}

std::string_view to_string(Role role) noexcept
{
    switch (role) {
    case Role::system: return "system";
    case Role::user: return "user";
    case Role::assistant: return "assistant";
    }
    return "user";
}

std::optional<Sender> parse_sender(std::string_view text) noexcept
{
    if (text == "user") {
        return Sender::user;
    }
    if (text == "empa") {
        return Sender::empa;
    }
    return std::nullopt;
}

std::optional<Role> parse_role(std::string_view text) noexcept
{
    if (text == "system") {
        return Role::system;
    }
    if (text == "user") {
        return Role::user;
    }
    if (text == "assistant") {
        return Role::assistant;
    }
    return std::nullopt;
}

std::string_view to_string(ModuleId id) noexcept
{
    switch (id) {
    case ModuleId::exploring_interpersonal_collaboration:
        return "exploring_interpersonal_collaboration";
    case ModuleId::meet_your_guide_empa: return "meet_your_guide_empa";
    case ModuleId::analyzing_team_interactions: return "analyzing_team_interactions";
    case ModuleId::understanding_global_competence: return "understanding_global_competence";
    case ModuleId::empathy_as_a_strategy: return "empathy_as_a_strategy";
    case ModuleId::making_team_collaboration_work: return "making_team_collaboration_work";
    }
    return "";
}

std::optional<ModuleId> parse_module_id(std::string_view text) noexcept
{
    for (auto id : all_modules) {
        if (text == to_string(id)) {
            return id;
        }
    }
    int order = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), order);
    if (ec == std::errc{} && ptr == text.data() + text.size() && order >= 1 &&
        order <= static_cast<int>(module_count)) {
        return static_cast<ModuleId>(order);
    }
    return std::nullopt;
}

std::string_view to_string(CulturalDimension dim) noexcept
{
    switch (dim) {
    case CulturalDimension::power_distance: return "power_distance";
    case CulturalDimension::communication_style: return "communication_style";
    case CulturalDimension::individualism_vs_collectivism: return "individualism_vs_collectivism";
    case CulturalDimension::time_orientation: return "time_orientation";
    }
    return "";
}

std::optional<CulturalDimension> parse_cultural_dimension(std::string_view text) noexcept
{
    for (auto dim : all_cultural_dimensions) {
        if (text == to_string(dim)) {
            return dim;
        }
    }
    return std::nullopt;
}

} // namespace empa
