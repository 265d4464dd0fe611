#pragma once

// JSON mapping for domain values. Field names are snake_case, enumerations
// are lowercase strings and timestamps use format_timestamp().

#include "empa/domain/types.hpp"

#include <nlohmann/json.hpp>

namespace empa {

template <typename Tag>
void to_json(nlohmann::json& j, StrongId<Tag> const& id)
{
    j = id.str();
}

template <typename Tag>
void from_json(nlohmann::json const& j, StrongId<Tag>& id)
{
    id = StrongId<Tag>{j.get<std::string>()};
}

void to_json(nlohmann::json& j, Sender sender);
void from_json(nlohmann::json const& j, Sender& sender);
void to_json(nlohmann::json& j, Role role);
void from_json(nlohmann::json const& j, Role& role);
void to_json(nlohmann::json& j, ModuleId id);
void from_json(nlohmann::json const& j, ModuleId& id);
void to_json(nlohmann::json& j, CulturalDimension dim);
void from_json(nlohmann::json const& j, CulturalDimension& dim);

void to_json(nlohmann::json& j, UserProfile const& profile);
void from_json(nlohmann::json const& j, UserProfile& profile);
void to_json(nlohmann::json& j, ChatMessage const& message);
void from_json(nlohmann::json const& j, ChatMessage& message);
void to_json(nlohmann::json& j, CompletionRecord const& record);
void to_json(nlohmann::json& j, QuizAttemptRecord const& record);

} // namespace empa
