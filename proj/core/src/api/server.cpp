#include "empa/api/server.hpp"

#include <httplib.h>

namespace empa::api {

struct HttpServer::Impl
{
    Service const& service;
    httplib::Server server;

    explicit Impl(Service const& s)
    : service(s)
    {
        // Oversized bodies reach Service so they get the JSON error shape.
        server.set_payload_max_length(std::size_t{8} * 1024 * 1024);

        auto const forward = [this](httplib::Request const& req, httplib::Response& res) {
            HttpRequest request;
            request.method = req.method;
            request.path = req.path;
            request.body = req.body;
            for (auto const& [name, value] : req.headers) {
                request.headers[name] = value;
            }
            auto const response = service.handle(request);
            res.status = response.status;
            std::string content_type;
            for (auto const& [name, value] : response.headers) {
                if (httplib::detail::compare_case_ignore(name, "Content-Type")) {
                    content_type = value;
                } else {
                    res.set_header(name, value);
                }
            }
            if (!response.body.empty()) {
                res.set_content(response.body, content_type.empty() ? "application/json"
                                                                     : content_type);
            }
        };
        server.Get(".*", forward);
        server.Post(".*", forward);
        server.Options(".*", forward);
        server.Put(".*", forward);
        server.Delete(".*", forward);
        server.Patch(".*", forward);
    }
};

HttpServer::HttpServer(Service const& service)
: impl_(std::make_unique<Impl>(service))
{ }

HttpServer::~HttpServer()
{
    stop();
}

int HttpServer::bind(std::string const& host, int port)
{
    if (port == 0) {
        return impl_->server.bind_to_any_port(host);
    }
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen_after_bind()
{
    return impl_->server.listen_after_bind();
}

void HttpServer::stop()
{
    if (impl_) {
        impl_->server.stop();
    }
}

void HttpServer::wait_until_ready() const
{
    impl_->server.wait_until_ready();
}

} // namespace empa::api
