#pragma once

#include "empa/api/http.hpp"
#include "empa/api/mentor.hpp"
#include "empa/curriculum/curriculum.hpp"
#include "empa/domain/error.hpp"
#include "empa/llm/persona.hpp"
#include "empa/llm/provider.hpp"
#include "empa/llm/window.hpp"
#include "empa/storage/store.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace empa::api {

/// HTTP status for an error category. 502 belongs to upstream only.
[[nodiscard]] int status_for(ErrorKind kind) noexcept;

/// JSON body of an error response: {http_status, code, message[, field]}.
[[nodiscard]] nlohmann::json error_body(Error const& error);

/// Receives one structured record per handled request.
using RequestLog = std::function<void(nlohmann::json const&)>;

/// JSON lines on standard output.
[[nodiscard]] RequestLog stdout_log();
[[nodiscard]] RequestLog null_log();

struct ServiceLimits
{
    std::size_t max_body_bytes = 32 * 1024;
    std::size_t max_message_chars = 4000;  // Unicode code points
};

struct ServiceParts
{
    storage::Store& store;
    llm::Provider& provider;
    curriculum::Curriculum curriculum;
    llm::PersonaPrompt persona;
    llm::FeedbackWindow window;
    std::vector<std::string> allowed_origins;
    RequestLog log = stdout_log();
    ServiceLimits limits = {};
};

/// The REST surface.
///
///   POST /api/submit                     register, returns user_id + greeting
///   POST /api/chatbot                    one mentor turn
///   GET  /api/chat-history/{user_id}     full seq-ordered history
///   GET  /api/progress/{user_id}         completion and unlock state
///   POST /api/quiz/{module_id}           score a drag-and-drop attempt
///   POST /api/reflection/{module_id}     reflection plus mentor feedback
///   POST /api/acknowledge/{module_id}    mark a view-only module as seen
///   GET  /api/curriculum                 module content without answer keys
///
/// Handlers keep no per-session memory; every answer is computed from the
/// request and the store, so any number of instances can share one store.
class Service
{
public:
    explicit Service(ServiceParts parts);

    [[nodiscard]] HttpResponse handle(HttpRequest const& request) const;

    [[nodiscard]] curriculum::Curriculum const& curriculum() const noexcept
    {
        return curriculum_;
    }

private:
    struct Outcome;

    Outcome route(HttpRequest const& request) const;
    Outcome submit(HttpRequest const& request) const;
    Outcome chatbot(HttpRequest const& request) const;
    Outcome chat_history(std::string const& user_id) const;
    Outcome progress(std::string const& user_id) const;
    Outcome quiz(HttpRequest const& request, std::string const& module) const;
    Outcome reflection(HttpRequest const& request, std::string const& module) const;
    Outcome acknowledge(HttpRequest const& request, std::string const& module) const;
    Outcome curriculum_view() const;

    nlohmann::json parse_body(HttpRequest const& request) const;
    void apply_cors(HttpRequest const& request, HttpResponse& response, bool preflight) const;

    storage::Store& store_;
    curriculum::Curriculum curriculum_;
    Mentor mentor_;
    std::vector<std::string> allowed_origins_;
    RequestLog log_;
    ServiceLimits limits_;
};

} // namespace empa::api
