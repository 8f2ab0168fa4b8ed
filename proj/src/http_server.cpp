#include "vulnmap/http_server.hpp"

#include "vulnmap/errors.hpp"
#include "vulnmap/util.hpp"

#include <httplib.h>

namespace vulnmap {

struct HttpServer::Impl {
    Service& service;
    httplib::Server server;

    explicit Impl(Service& s) : service(s) {
        auto handler = [this](const httplib::Request& req, httplib::Response& res) {
            HttpRequest r;
            r.method = req.method;
            r.path = req.path;
            r.body = req.body;
            for (const auto& [k, v] : req.params) r.query.emplace(k, v);
            for (const auto& [k, v] : req.headers) r.headers.emplace(to_lower(k), v);
            const HttpResponse out = service.handle(r);
            res.status = out.status;
            for (const auto& [k, v] : out.headers)
                if (k != "Content-Type") res.set_header(k, v);
            res.set_header("Access-Control-Allow-Origin", "*");
            res.set_header("Access-Control-Expose-Headers", "X-Model-Id, X-Snapshot-Id");
            auto ct = out.headers.find("Content-Type");
            res.set_content(out.body, ct == out.headers.end() ? "application/json" : ct->second);
        };
        const std::string any = R"(/.*)";
        server.Get(any, handler);
        server.Post(any, handler);
        server.Put(any, handler);
        server.Delete(any, handler);
        server.Patch(any, handler);
        server.Options(any, [](const httplib::Request&, httplib::Response& res) {
            res.status = 204;
            res.set_header("Access-Control-Allow-Origin", "*");
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Authorization, Content-Type");
        });
    }
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}
HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    int bound = port;
    if (port == 0) bound = impl_->server.bind_to_any_port(host);
    else if (!impl_->server.bind_to_port(host, port)) bound = -1;
    if (bound < 0) throw ConfigError("cannot listen on " + host + ":" + std::to_string(port));
    return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace vulnmap
