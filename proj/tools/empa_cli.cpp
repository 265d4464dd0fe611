// empa: run and inspect the mentoring service.
//
//   empa serve                      start the HTTP API (configured from env)
//   empa check-config               validate env, persona and curriculum, then exit
//   empa validate-curriculum FILE   check a curriculum document
//   empa init-db URL                create the schema for a DATABASE_URL
//   empa history URL USER_ID        print a learner's chat history as JSON

#include "empa/api/application.hpp"
#include "empa/api/config.hpp"
#include "empa/api/server.hpp"
#include "empa/curriculum/curriculum.hpp"
#include "empa/domain/error.hpp"
#include "empa/domain/json.hpp"
#include "empa/llm/persona.hpp"
#include "empa/storage/open_store.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <csignal>
#include <iostream>

namespace {

std::atomic<empa::api::HttpServer*> running_server{nullptr};

extern "C" void on_signal(int)
{
    if (auto* server = running_server.load()) {
        server->stop();
    }
}

int serve()
{
    auto config = empa::api::config_from_env();
    empa::api::Application app(config);
    empa::api::HttpServer server(app.service());
    int const port = server.bind(config.bind_host, config.bind_port);
    if (port < 0) {
        std::cerr << "empa: cannot bind " << config.bind_host << ':' << config.bind_port << '\n';
        return 1;
    }
    running_server.store(&server);
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cerr << "empa: listening on " << config.bind_host << ':' << port << '\n';
    bool const ok = server.listen_after_bind();
    running_server.store(nullptr);
    return ok ? 0 : 1;
}

int check_config()
{
    auto config = empa::api::config_from_env();
    auto curriculum = empa::curriculum::load_curriculum_file(config.curriculum_path);
    auto persona = empa::llm::PersonaPrompt::load(config.persona_path);
    (void)empa::api::make_provider(config);
    std::cout << "configuration ok\n"
              << "  bind            " << config.bind_host << ':' << config.bind_port << '\n'
              << "  origins         " << config.allowed_origins.size() << '\n'
              << "  database        " << config.database_url << '\n'
              << "  provider        " << config.llm_api_url << '\n'
              << "  curriculum      " << curriculum.version() << '\n'
              << "  feedback words  " << config.feedback_max_words << '\n';
    return 0;
}

int validate_curriculum(std::string const& path)
{
    auto const curriculum = empa::curriculum::load_curriculum_file(path);
    std::cout << path << ": version " << curriculum.version() << '\n';
    for (auto const& module : curriculum.modules()) {
        std::cout << "  " << empa::module_order(module.id) << ". " << module.title << " ["
                  << empa::curriculum::to_string(module.completion_rule) << "]";
        if (module.quiz) {
            std::cout << " quiz " << module.quiz->quiz_id << " (" << module.quiz->items.size()
                      << " items)";
        }
        std::cout << '\n';
    }
    return 0;
}

int init_db(std::string const& url)
{
    (void)empa::storage::open_store(url);
    std::cout << "schema ready at " << url << '\n';
    return 0;
}

int history(std::string const& url, std::string const& user_id)
{
    auto store = empa::storage::open_store(url);
    nlohmann::json out = store->get_history(empa::UserId{user_id});
    std::cout << out.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Intercultural mentoring service"};
    app.require_subcommand(1);

    auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP API (configured from env)");
    auto* check_cmd = app.add_subcommand("check-config", "Validate the environment configuration");

    std::string curriculum_path;
    auto* curriculum_cmd = app.add_subcommand("validate-curriculum", "Check a curriculum document");
    curriculum_cmd->add_option("file", curriculum_path, "Curriculum JSON")->required();

    std::string db_url;
    auto* init_cmd = app.add_subcommand("init-db", "Create the database schema");
    init_cmd->add_option("url", db_url, "DATABASE_URL, e.g. sqlite:/var/lib/empa/empa.db")
        ->required();

    std::string user_id;
    auto* history_cmd = app.add_subcommand("history", "Print a learner's chat history");
    history_cmd->add_option("url", db_url, "DATABASE_URL")->required();
    history_cmd->add_option("user_id", user_id, "Learner id")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*serve_cmd) {
            return serve();
        }
        if (*check_cmd) {
            return check_config();
        }
        if (*curriculum_cmd) {
            return validate_curriculum(curriculum_path);
        }
        if (*init_cmd) {
            return init_db(db_url);
        }
        if (*history_cmd) {
            return history(db_url, user_id);
        }
    } catch (empa::Error const& e) {
        std::cerr << "empa: " << e.what() << '\n';
        return e.kind() == empa::ErrorKind::configuration ? 2 : 1;
    } catch (std::exception const& e) {
        std::cerr << "empa: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
