#pragma once

#include "empa/api/service.hpp"

#include <memory>
#include <string>

namespace empa::api {

/// Serves a Service over HTTP/1.1 (cpp-httplib, thread pool per connection).
class HttpServer
{
public:
    explicit HttpServer(Service const& service);
    ~HttpServer();

    HttpServer(HttpServer const&) = delete;
    HttpServer& operator=(HttpServer const&) = delete;

    /// Binds; port 0 picks a free port. Returns the bound port, or -1.
    int bind(std::string const& host, int port);

    /// Blocks serving requests until stop() is called.
    bool listen_after_bind();

    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace empa::api
