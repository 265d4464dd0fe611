#pragma once

#include "empa/api/config.hpp"
#include "empa/api/service.hpp"
#include "empa/llm/provider.hpp"
#include "empa/storage/store.hpp"

#include <memory>

namespace empa::api {

/// Provider named by the configuration: "mock:..." URLs give a MockProvider,
/// http(s) URLs an HttpProvider.
[[nodiscard]] std::unique_ptr<llm::Provider> make_provider(ServiceConfig const& config);

/// Owns the store, provider and service built from one configuration.
/// Construction fails fast: unreadable persona or curriculum, bad database
/// URL or provider settings all throw before anything is served.
class Application
{
public:
    explicit Application(ServiceConfig config, RequestLog log = stdout_log());

    [[nodiscard]] ServiceConfig const& config() const noexcept { return config_; }
    [[nodiscard]] Service const& service() const noexcept { return *service_; }
    [[nodiscard]] storage::Store& store() noexcept { return *store_; }

private:
    ServiceConfig config_;
    std::unique_ptr<storage::Store> store_;
    std::unique_ptr<llm::Provider> provider_;
    std::unique_ptr<Service> service_;
};

} // namespace empa::api
