#pragma once

#include <atomic>
#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace patchwork {

/// HTTP front end over the pipelines.  Fixtures are computed once and shared.
class ApiServer {
public:
    ApiServer();
    ~ApiServer();
    ApiServer(const ApiServer&) = delete;
    ApiServer& operator=(const ApiServer&) = delete;

    /// Binds and blocks until stop().  Returns false when the port is taken.
    bool listen(const std::string& host, int port);
    /// Binds to a free port and returns it; serve with listen_after_bind().
    int bind_any(const std::string& host);
    bool listen_after_bind();
    void stop();
    bool running() const;

private:
    std::unique_ptr<httplib::Server> server_;
};

}  // namespace patchwork
