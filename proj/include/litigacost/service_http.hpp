#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <httplib.h>

#include "litigacost/service.hpp"

namespace litigacost::service {

struct ListenAddress {
    std::string host;
    int port = 0;
};

/// "host:port"; the port must be in [0, 65535] (0 picks a free port).
inline std::optional<ListenAddress> parse_listen(std::string_view text) {
    auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0) return std::nullopt;
    std::string host(text.substr(0, colon));
    if (host.size() > 2 && host.front() == '[' && host.back() == ']') host = host.substr(1, host.size() - 2);
    auto port = parse_scaled(text.substr(colon + 1), 0, 65535);
    if (!port || *port < 0 || text.substr(colon + 1).find_first_of("+-.") != std::string_view::npos)
        return std::nullopt;
    return ListenAddress{host, static_cast<int>(*port)};
}

/// Binds an Api to an httplib server. Handlers are stateless, so the
/// server's worker pool may run them concurrently.
class HttpServer {
public:
    explicit HttpServer(Api api) : api_(std::move(api)) {
        auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
            HttpReply reply = api_.handle(req.method, req.path, req.body);
            res.status = reply.status;
            res.set_content(reply.body, reply.content_type);
            add_cors(res);
        };
        server_.Get(".*", dispatch);
        server_.Post(".*", dispatch);
        server_.Put(".*", dispatch);
        server_.Delete(".*", dispatch);
        server_.Options(".*", [this](const httplib::Request&, httplib::Response& res) {
            res.status = 204;
            add_cors(res);
        });
    }

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds without serving; returns the bound port or -1.
    int bind(const ListenAddress& addr) {
        if (addr.port == 0) return server_.bind_to_any_port(addr.host);
        return server_.bind_to_port(addr.host, addr.port) ? addr.port : -1;
    }

    /// Blocks until stop() is called.
    bool serve() { return server_.listen_after_bind(); }

    void stop() { server_.stop(); }
    void wait_until_ready() const { server_.wait_until_ready(); }

private:
    void add_cors(httplib::Response& res) const {
        const auto& origin = api_.config().allow_origin;
        if (origin.empty()) return;
        res.set_header("Access-Control-Allow-Origin", origin);
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }

    Api api_;
    httplib::Server server_;
};

}  // namespace litigacost::service
