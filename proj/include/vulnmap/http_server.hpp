#pragma once

#include "vulnmap/service.hpp"

#include <memory>
#include <string>

namespace vulnmap {

/// Serves a Service over HTTP/1.1.
class HttpServer {
public:
    explicit HttpServer(Service& service);
    ~HttpServer();

    /// Binds to host:port (port 0 picks a free port) and returns the port.
    int bind(const std::string& host, int port);
    /// Blocks until stop() is called.
    void listen();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace vulnmap
