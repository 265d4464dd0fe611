#include "empa/api/mentor.hpp"

#include "empa/domain/error.hpp"

namespace empa::api {

Mentor::Mentor(storage::Store& store, llm::Provider& provider, llm::PersonaPrompt persona,
               llm::FeedbackWindow window)
: store_(store)
, provider_(provider)
, persona_(std::move(persona))
, window_(window)
{
    persona_.check();
}

MentorReply Mentor::take_turn(UserId const& user_id, std::string_view message,
                              std::optional<ModuleId> module) const
{
    auto const profile = store_.find_user(user_id);
    if (!profile) {
        throw not_found_error("unknown_user", "no user with id " + user_id.str());
    }
    auto const history = store_.get_history(user_id);
    auto const system = llm::build_system_prompt(*profile, persona_);
    auto const context = llm::assemble_context(system, history, message);
    auto response = llm::generate(context, provider_);
    auto reply = llm::enforce_window(response.content, window_);

    auto persisted = store_.append_turn(
        user_id, {MessageDraft{Sender::user, std::string(message), module},
                  MessageDraft{Sender::empa, std::move(reply), module}});
    return MentorReply{ChatTurn{std::move(persisted.at(0)), std::move(persisted.at(1))},
                       response.provider_latency};
}

} // namespace empa::api
