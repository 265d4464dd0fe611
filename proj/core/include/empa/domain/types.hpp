#pragma once

#include "empa/domain/time.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace empa {

/// Opaque string identifier distinguished at compile time by Tag.
template <typename Tag>
class StrongId
{
public:
    StrongId() = default;
    explicit StrongId(std::string value) : value_(std::move(value)) { }

    [[nodiscard]] std::string const& str() const noexcept { return value_; }
    [[nodiscard]] bool empty() const noexcept { return value_.empty(); }

    friend auto operator<=>(StrongId const&, StrongId const&) = default;

private:
    std::string value_;
};

using UserId = StrongId<struct UserIdTag>;
using MessageId = StrongId<struct MessageIdTag>;

struct UserProfile
{
    UserId user_id;
    std::string name;
    std::string email;
    std::string year_of_study;
    std::string gender;
    std::string major;
    std::string instructor;
    std::string course;
    Timestamp created_at{};

    friend bool operator==(UserProfile const&, UserProfile const&) = default;
};

/// Checks the profile invariants (non-blank name, valid email, id present).
/// Throws a validation Error naming the offending field.
void validate_profile(UserProfile const& profile);

enum class Sender { user, empa };

enum class Role { system, user, assistant };

[[nodiscard]] std::string_view to_string(Sender sender) noexcept;
[[nodiscard]] std::string_view to_string(Role role) noexcept;
[[nodiscard]] std::optional<Sender> parse_sender(std::string_view text) noexcept;
[[nodiscard]] std::optional<Role> parse_role(std::string_view text) noexcept;

/// The six curriculum modules in delivery order.
enum class ModuleId : int {
    exploring_interpersonal_collaboration = 1,
    meet_your_guide_empa = 2,
    analyzing_team_interactions = 3,
    understanding_global_competence = 4,
    empathy_as_a_strategy = 5,
    making_team_collaboration_work = 6,
};

inline constexpr std::size_t module_count = 6;

inline constexpr std::array<ModuleId, module_count> all_modules{
    ModuleId::exploring_interpersonal_collaboration,
    ModuleId::meet_your_guide_empa,
    ModuleId::analyzing_team_interactions,
    ModuleId::understanding_global_competence,
    ModuleId::empathy_as_a_strategy,
    ModuleId::making_team_collaboration_work,
};

/// 1-based position in the curriculum.
[[nodiscard]] constexpr int module_order(ModuleId id) noexcept { return static_cast<int>(id); }

[[nodiscard]] std::string_view to_string(ModuleId id) noexcept;

/// Accepts the snake_case name or the 1-based order ("4").
[[nodiscard]] std::optional<ModuleId> parse_module_id(std::string_view text) noexcept;

enum class CulturalDimension {
    power_distance,
    communication_style,
    individualism_vs_collectivism,
    time_orientation,
};

inline constexpr std::array<CulturalDimension, 4> all_cultural_dimensions{
    CulturalDimension::power_distance,
    CulturalDimension::communication_style,
    CulturalDimension::individualism_vs_collectivism,
    CulturalDimension::time_orientation,
};

[[nodiscard]] std::string_view to_string(CulturalDimension dim) noexcept;
[[nodiscard]] std::optional<CulturalDimension> parse_cultural_dimension(std::string_view text) noexcept;

struct ChatMessage
{
    MessageId message_id;
    UserId user_id;
    Sender sender{Sender::user};
    std::string content;
    Timestamp timestamp{};
    std::int64_t seq{0};
    /// Set on reflections submitted against a curriculum module.
    std::optional<ModuleId> module;

    friend bool operator==(ChatMessage const&, ChatMessage const&) = default;
};

/// A message as handed to the store, before id, timestamp and seq are assigned.
struct MessageDraft
{
    Sender sender{Sender::user};
    std::string content;
    std::optional<ModuleId> module;
};

struct CompletionRecord
{
    bool completed{false};
    std::optional<Timestamp> completed_at;

    friend bool operator==(CompletionRecord const&, CompletionRecord const&) = default;
};

using ProgressMap = std::map<ModuleId, CompletionRecord>;

/// Latest quiz outcome for one (user, module) pair.
struct QuizAttemptRecord
{
    double score{0.0};
    std::int64_t attempt_count{0};
    Timestamp updated_at{};

    friend bool operator==(QuizAttemptRecord const&, QuizAttemptRecord const&) = default;
};

} // namespace empa

namespace empa {

/// One persisted exchange: the learner's message and the mentor's reply.
struct ChatTurn
{
    ChatMessage user_message;
    ChatMessage reply;
};

} // namespace empa
