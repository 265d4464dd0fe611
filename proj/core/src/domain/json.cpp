#include "empa/domain/json.hpp"

#include "empa/domain/error.hpp"

namespace empa {

namespace {

template <typename T, typename Parse>
T parse_enum(nlohmann::json const& j, Parse parse, char const* what)
{
    if (!j.is_string()) {
        throw Error(ErrorKind::malformed, "bad_enum", std::string(what) + " must be a string");
    }
    auto const text = j.get<std::string>();
    if (auto value = parse(text)) {
        return *value;
    }
    throw Error(ErrorKind::malformed, "bad_enum",
                std::string("unknown ") + what + ": " + text);
}

} // namespace

void to_json(nlohmann::json& j, Sender sender) { j = std::string(to_string(sender)); }
void from_json(nlohmann::json const& j, Sender& sender)
{
    sender = parse_enum<Sender>(j, parse_sender, "sender");
}

void to_json(nlohmann::json& j, Role role) { j = std::string(to_string(role)); }
void from_json(nlohmann::json const& j, Role& role)
{
    role = parse_enum<Role>(j, parse_role, "role");
}

void to_json(nlohmann::json& j, ModuleId id) { j = std::string(to_string(id)); }
void from_json(nlohmann::json const& j, ModuleId& id)
{
    id = parse_enum<ModuleId>(j, parse_module_id, "module id");
}

void to_json(nlohmann::json& j, CulturalDimension dim) { j = std::string(to_string(dim)); }
void from_json(nlohmann::json const& j, CulturalDimension& dim)
{
    dim = parse_enum<CulturalDimension>(j, parse_cultural_dimension, "cultural dimension");
}

void to_json(nlohmann::json& j, UserProfile const& p)
{
    j = nlohmann::json{
        {"user_id", p.user_id},
        {"name", p.name},
        {"email", p.email},
        {"year_of_study", p.year_of_study},
        {"gender", p.gender},
        {"major", p.major},
        {"instructor", p.instructor},
        {"course", p.course},
        {"created_at", format_timestamp(p.created_at)},
    };
}

void from_json(nlohmann::json const& j, UserProfile& p)
{
    p.user_id = j.at("user_id").get<UserId>();
    p.name = j.at("name").get<std::string>();
    p.email = j.at("email").get<std::string>();
    p.year_of_study = j.at("year_of_study").get<std::string>();
    p.gender = j.at("gender").get<std::string>();
    p.major = j.at("major").get<std::string>();
    p.instructor = j.at("instructor").get<std::string>();
    p.course = j.at("course").get<std::string>();
    p.created_at = parse_timestamp(j.at("created_at").get<std::string>());
}

void to_json(nlohmann::json& j, ChatMessage const& m)
{
    j = nlohmann::json{
        {"message_id", m.message_id},
        {"user_id", m.user_id},
        {"sender", m.sender},
        {"content", m.content},
        {"timestamp", format_timestamp(m.timestamp)},
        {"seq", m.seq},
    };
    if (m.module) {
        j["module_id"] = *m.module;
    }
}

void from_json(nlohmann::json const& j, ChatMessage& m)
{
    m.message_id = j.at("message_id").get<MessageId>();
    m.user_id = j.at("user_id").get<UserId>();
    m.sender = j.at("sender").get<Sender>();
    m.content = j.at("content").get<std::string>();
    m.timestamp = parse_timestamp(j.at("timestamp").get<std::string>());
    m.seq = j.at("seq").get<std::int64_t>();
    if (auto it = j.find("module_id"); it != j.end() && !it->is_null()) {
        m.module = it->get<ModuleId>();
    } else {
        m.module.reset();
    }
}

void to_json(nlohmann::json& j, CompletionRecord const& r)
{
    j = nlohmann::json{{"completed", r.completed}, {"completed_at", nullptr}};
    if (r.completed_at) {
        j["completed_at"] = format_timestamp(*r.completed_at);
    }
}

void to_json(nlohmann::json& j, QuizAttemptRecord const& r)
{
    j = nlohmann::json{
        {"score", r.score},
        {"attempt_count", r.attempt_count},
        {"updated_at", format_timestamp(r.updated_at)},
    };
}

} // namespace empa
