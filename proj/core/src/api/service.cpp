#include "empa/api/service.hpp"

#include "empa/curriculum/progression.hpp"
#include "empa/curriculum/unlock.hpp"
#include "empa/domain/identifiers.hpp"
#include "empa/domain/json.hpp"

#include <chrono>
#include <iostream>
#include <mutex>
#include <optional>

namespace empa::api {

using nlohmann::json;

int status_for(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::malformed: return 400;
    case ErrorKind::validation: return 422;
    case ErrorKind::not_found: return 404;
    case ErrorKind::conflict: return 409;
    case ErrorKind::forbidden: return 403;
    case ErrorKind::upstream: return 502;
    case ErrorKind::storage:
    case ErrorKind::configuration:
    case ErrorKind::internal: return 500;
    }
    return 500;
}

json error_body(Error const& error)
{
    json body{
        {"http_status", status_for(error.kind())},
        {"code", error.code()},
        {"message", error.what()},
    };
    if (error.field()) {
        body["field"] = *error.field();
    }
    return body;
}

RequestLog stdout_log()
{
    return [](json const& record) {
        static std::mutex mutex;
        auto const line = record.dump();
        std::lock_guard lock(mutex);
        std::cout << line << '\n' << std::flush;
    };
}

RequestLog null_log()
{
    return [](json const&) { };
}

struct Service::Outcome
{
    int status{200};
    json body;
    std::optional<std::string> user_id;
    std::optional<std::chrono::milliseconds> provider_latency;
};

namespace {

std::string trim(std::string_view text)
{
    auto const first = text.find_first_not_of(" \t\n\v\f\r");
    if (first == std::string_view::npos) {
        return {};
    }
    auto const last = text.find_last_not_of(" \t\n\v\f\r");
    return std::string(text.substr(first, last - first + 1));
}

std::size_t code_points(std::string_view text)
{
    std::size_t n = 0;
    for (unsigned char c : text) {
        n += (c & 0xC0) != 0x80 ? 1 : 0;
    }
    return n;
}

std::string required_string(json const& body, char const* key)
{
    auto it = body.find(key);
    if (it == body.end() || it->is_null()) {
        throw validation_error("missing_field", std::string(key) + " is required", key);
    }
    if (!it->is_string()) {
        throw validation_error("invalid_type", std::string(key) + " must be a string", key);
    }
    return it->get<std::string>();
}

ModuleId module_from_path(std::string const& text)
{
    if (auto id = parse_module_id(text)) {
        return *id;
    }
    throw not_found_error("unknown_module", "no module \"" + text + "\"");
}

std::vector<std::string> split_path(std::string_view path)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start < path.size()) {
        auto const slash = path.find('/', start);
        auto const end = slash == std::string_view::npos ? path.size() : slash;
        if (end > start) {
            parts.emplace_back(path.substr(start, end - start));
        }
        start = end + 1;
    }
    return parts;
}

} // namespace

Service::Service(ServiceParts parts)
: store_(parts.store)
, curriculum_(std::move(parts.curriculum))
, mentor_(parts.store, parts.provider, std::move(parts.persona), parts.window)
, allowed_origins_(std::move(parts.allowed_origins))
, log_(parts.log ? std::move(parts.log) : null_log())
, limits_(parts.limits)
{
    if (allowed_origins_.empty()) {
        throw configuration_error("at least one allowed origin is required");
    }
}

HttpResponse Service::handle(HttpRequest const& request) const
{
    auto const start = std::chrono::steady_clock::now();
    HttpResponse response;
    Outcome outcome;
    std::optional<std::string> error_code;
    bool const preflight = request.method == "OPTIONS";

    if (preflight) {
        outcome.status = 204;
    } else {
        try {
            outcome = route(request);
        } catch (Error const& e) {
            outcome.status = status_for(e.kind());
            outcome.body = error_body(e);
            error_code = e.code();
        } catch (std::exception const& e) {
            Error const internal(ErrorKind::internal, "internal", e.what());
            outcome.status = 500;
            outcome.body = error_body(internal);
            error_code = internal.code();
        }
    }

    response.status = outcome.status;
    if (!preflight) {
        response.headers["Content-Type"] = "application/json";
        response.body = outcome.body.dump();
    }
    apply_cors(request, response, preflight);

    auto const latency = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start);
    json record{
        {"ts", format_timestamp(now_utc())},
        {"method", request.method},
        {"path", request.path},
        {"status", response.status},
        {"latency_ms", static_cast<double>(latency.count()) / 1000.0},
        {"user_id", outcome.user_id ? json(*outcome.user_id) : json(nullptr)},
    };
    if (outcome.provider_latency) {
        record["provider_latency_ms"] = outcome.provider_latency->count();
    }
    if (error_code) {
        record["error"] = *error_code;
    }
    log_(record);
    return response;
}

void Service::apply_cors(HttpRequest const& request, HttpResponse& response, bool preflight) const
{
    auto it = request.headers.find("Origin");
    if (it == request.headers.end()) {
        return;
    }
    std::string origin = it->second;
    while (!origin.empty() && origin.back() == '/') {
        origin.pop_back();
    }
    response.headers["Vary"] = "Origin";
    if (std::find(allowed_origins_.begin(), allowed_origins_.end(), origin) ==
        allowed_origins_.end()) {
        return;
    }
    response.headers["Access-Control-Allow-Origin"] = it->second;
    if (preflight) {
        response.headers["Access-Control-Allow-Methods"] = "GET, POST, OPTIONS";
        response.headers["Access-Control-Allow-Headers"] = "Content-Type";
        response.headers["Access-Control-Max-Age"] = "600";
    }
}

json Service::parse_body(HttpRequest const& request) const
{
    if (request.body.size() > limits_.max_body_bytes) {
        throw Error(ErrorKind::malformed, "body_too_large",
                    "request body exceeds " + std::to_string(limits_.max_body_bytes) + " bytes");
    }
    json body;
    try {
        body = json::parse(request.body);
    } catch (json::parse_error const&) {
        throw Error(ErrorKind::malformed, "malformed_json", "request body is not valid JSON");
    }
    if (!body.is_object()) {
        throw validation_error("expected_object", "request body must be a JSON object");
    }
    return body;
}

Service::Outcome Service::route(HttpRequest const& request) const
{
    auto const parts = split_path(request.path);
    bool const get = request.method == "GET";
    bool const post = request.method == "POST";

    if (parts.size() >= 2 && parts[0] == "api") {
        auto const& name = parts[1];
        if (parts.size() == 2) {
            if (post && name == "submit") {
                return submit(request);
            }
            if (post && name == "chatbot") {
                return chatbot(request);
            }
            if (get && name == "curriculum") {
                return curriculum_view();
            }
        } else if (parts.size() == 3) {
            if (get && name == "chat-history") {
                return chat_history(parts[2]);
            }
            if (get && name == "progress") {
                return progress(parts[2]);
            }
            if (post && name == "quiz") {
                return quiz(request, parts[2]);
            }
            if (post && name == "reflection") {
                return reflection(request, parts[2]);
            }
            if (post && name == "acknowledge") {
                return acknowledge(request, parts[2]);
            }
        }
    }
    throw not_found_error("no_route", request.method + " " + request.path + " is not an endpoint");
}

Service::Outcome Service::submit(HttpRequest const& request) const
{
    auto const body = parse_body(request);
    UserProfile profile;
    profile.name = trim(required_string(body, "name"));
    profile.email = trim(required_string(body, "email"));
    profile.year_of_study = trim(required_string(body, "year_of_study"));
    profile.gender = trim(required_string(body, "gender"));
    profile.major = trim(required_string(body, "major"));
    profile.instructor = trim(required_string(body, "instructor"));
    profile.course = trim(required_string(body, "course"));
    profile.user_id = new_user_id();
    profile.created_at = now_utc();
    validate_profile(profile);

    auto const titles = curriculum_.titles();
    auto const greeting = llm::render_greeting(profile, titles);
    store_.create_user(profile, {MessageDraft{Sender::empa, greeting, std::nullopt}});
    auto const history = store_.get_history(profile.user_id);

    Outcome outcome;
    outcome.user_id = profile.user_id.str();
    outcome.body = json{{"user_id", profile.user_id}, {"greeting", history.at(0)}};
    return outcome;
}

Service::Outcome Service::chatbot(HttpRequest const& request) const
{
    auto const body = parse_body(request);
    UserId const user_id{required_string(body, "user_id")};
    auto const message = required_string(body, "message");

    Outcome outcome;
    outcome.user_id = user_id.str();
    if (trim(message).empty()) {
        throw validation_error("empty_message", "message must not be empty", "message");
    }
    if (code_points(message) > limits_.max_message_chars) {
        throw validation_error("message_too_long",
                               "message exceeds " + std::to_string(limits_.max_message_chars) +
                                   " characters",
                               "message");
    }
    auto reply = mentor_.take_turn(user_id, message);
    outcome.provider_latency = reply.provider_latency;
    outcome.body = json{{"reply", reply.turn.reply}};
    return outcome;
}

Service::Outcome Service::chat_history(std::string const& user_id) const
{
    Outcome outcome;
    outcome.user_id = user_id;
    auto const messages = store_.get_history(UserId{user_id});
    outcome.body = json{{"user_id", user_id}, {"messages", messages}};
    return outcome;
}

Service::Outcome Service::progress(std::string const& user_id) const
{
    Outcome outcome;
    outcome.user_id = user_id;
    auto const progress = store_.get_progress(UserId{user_id});
    auto const unlocked = curriculum::unlocked_modules(progress);

    json modules = json::array();
    for (auto const& module : curriculum_.modules()) {
        auto const& record = progress.at(module.id);
        json entry{
            {"id", module.id},
            {"order", module_order(module.id)},
            {"title", module.title},
            {"completion_rule", std::string(curriculum::to_string(module.completion_rule))},
            {"unlocked", unlocked.contains(module.id)},
        };
        entry.update(json(record));
        modules.push_back(std::move(entry));
    }
    outcome.body = json{{"user_id", user_id}, {"modules", modules}};
    return outcome;
}

Service::Outcome Service::quiz(HttpRequest const& request, std::string const& module_text) const
{
    auto const module = module_from_path(module_text);
    auto const body = parse_body(request);
    UserId const user_id{required_string(body, "user_id")};

    curriculum::QuizAttempt attempt;
    attempt.quiz_id = required_string(body, "quiz_id");
    attempt.submitted_at = now_utc();
    auto it = body.find("assignments");
    if (it == body.end() || !it->is_object()) {
        throw validation_error("missing_field", "assignments must be an object", "assignments");
    }
    for (auto const& [character, category] : it->items()) {
        if (!category.is_string()) {
            throw validation_error("invalid_type", "assignment for \"" + character +
                                                       "\" must be a category string",
                                   "assignments");
        }
        attempt.assignments.emplace(character, category.get<std::string>());
    }

    Outcome outcome;
    outcome.user_id = user_id.str();
    if (!store_.find_user(user_id)) {
        throw not_found_error("unknown_user", "no user with id " + user_id.str());
    }
    curriculum::Progression progression(curriculum_, store_);
    auto const result = progression.submit_quiz(user_id, module, attempt);
    outcome.body = curriculum::to_json(result.result);
    outcome.body["module_id"] = module;
    outcome.body["attempt_count"] = result.record.attempt_count;
    outcome.body["module_completed"] = result.module_completed;
    return outcome;
}

Service::Outcome Service::reflection(HttpRequest const& request,
                                     std::string const& module_text) const
{
    auto const module = module_from_path(module_text);
    auto const body = parse_body(request);
    UserId const user_id{required_string(body, "user_id")};
    auto const text = required_string(body, "text");

    Outcome outcome;
    outcome.user_id = user_id.str();
    if (code_points(text) > limits_.max_message_chars) {
        throw validation_error("message_too_long",
                               "text exceeds " + std::to_string(limits_.max_message_chars) +
                                   " characters",
                               "text");
    }
    if (!store_.find_user(user_id)) {
        throw not_found_error("unknown_user", "no user with id " + user_id.str());
    }

    std::optional<std::chrono::milliseconds> latency;
    curriculum::Progression progression(curriculum_, store_);
    auto const result = progression.submit_reflection(
        user_id, module, text,
        [&](UserId const& id, std::string_view message, std::optional<ModuleId> tag) {
            auto reply = mentor_.take_turn(id, message, tag);
            latency = reply.provider_latency;
            return reply.turn;
        });
    outcome.provider_latency = latency;
    outcome.body = json{
        {"feedback", result.turn.reply},
        {"module_id", module},
        {"module_completed", result.module_completed},
    };
    return outcome;
}

Service::Outcome Service::acknowledge(HttpRequest const& request,
                                      std::string const& module_text) const
{
    auto const module = module_from_path(module_text);
    auto const body = parse_body(request);
    UserId const user_id{required_string(body, "user_id")};

    Outcome outcome;
    outcome.user_id = user_id.str();
    if (!store_.find_user(user_id)) {
        throw not_found_error("unknown_user", "no user with id " + user_id.str());
    }
    curriculum::Progression progression(curriculum_, store_);
    auto const record = progression.acknowledge(user_id, module);
    outcome.body = json{{"module_id", module}};
    outcome.body.update(json(record));
    return outcome;
}

Service::Outcome Service::curriculum_view() const
{
    json modules = json::array();
    for (auto const& module : curriculum_.modules()) {
        modules.push_back(curriculum::to_json(module));
    }
    Outcome outcome;
    outcome.body = json{{"version", curriculum_.version()}, {"modules", modules}};
    return outcome;
}

} // namespace empa::api
