#include "empa/api/application.hpp"

#include "empa/curriculum/curriculum.hpp"
#include "empa/llm/http_provider.hpp"
#include "empa/llm/mock_provider.hpp"
#include "empa/storage/open_store.hpp"

namespace empa::api {

std::unique_ptr<llm::Provider> make_provider(ServiceConfig const& config)
{
    if (config.llm_api_url.starts_with("mock:")) {
        return std::make_unique<llm::MockProvider>(llm::MockProvider::from_url(config.llm_api_url));
    }
    return std::make_unique<llm::HttpProvider>(llm::HttpProviderConfig{
        .url = config.llm_api_url,
        .api_key = config.llm_api_key,
        .model = config.llm_model,
        .timeout = config.llm_timeout,
        .response_path = config.llm_response_path,
        .token_budget = config.llm_token_budget,
    });
}

Application::Application(ServiceConfig config, RequestLog log)
: config_(std::move(config))
{
    auto curriculum = curriculum::load_curriculum_file(config_.curriculum_path);
    auto persona = llm::PersonaPrompt::load(config_.persona_path);
    llm::FeedbackWindow const window(config_.feedback_max_words);
    provider_ = make_provider(config_);
    store_ = storage::open_store(config_.database_url);
    service_ = std::make_unique<Service>(ServiceParts{
        .store = *store_,
        .provider = *provider_,
        .curriculum = std::move(curriculum),
        .persona = std::move(persona),
        .window = window,
        .allowed_origins = config_.allowed_origins,
        .log = std::move(log),
    });
}

} // namespace empa::api
