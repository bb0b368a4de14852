#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "editforge/error.hpp"
#include "editforge/gateway.hpp"

namespace editforge {

namespace {

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path part, without trailing slash
};

ParsedUrl split_url(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) fail(ErrorCode::ConfigError, "base_url lacks a scheme: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  ParsedUrl p;
  p.origin = url.substr(0, path_start);
  if (path_start != std::string::npos) p.prefix = url.substr(path_start);
  while (!p.prefix.empty() && p.prefix.back() == '/') p.prefix.pop_back();
  return p;
}

void set_timeouts(httplib::Client& cli, double seconds) {
  const auto us = std::chrono::microseconds(static_cast<long long>(seconds * 1e6));
  const auto s = std::chrono::duration_cast<std::chrono::seconds>(us);
  const auto rest = us - s;
  cli.set_connection_timeout(s.count(), rest.count());
  cli.set_read_timeout(s.count(), rest.count());
  cli.set_write_timeout(s.count(), rest.count());
}

}  // namespace

HttpResponse HttpTransport::post(const EndpointConfig& ep, const HttpRequest& req) {
  const auto url = split_url(ep.base_url);
  httplib::Client cli(url.origin);
  set_timeouts(cli, ep.timeout);
  httplib::Headers headers;
  for (const auto& [k, v] : req.headers) headers.emplace(k, v);

  const auto start = std::chrono::steady_clock::now();
  auto res = cli.Post(url.prefix + req.path, headers, req.body, "application/json");
  if (!res) {
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto err = res.error();
    const bool timed_out = err == httplib::Error::ConnectionTimeout ||
                           (err == httplib::Error::Read && elapsed >= 0.95 * ep.timeout);
    return {0, timed_out, {}, httplib::to_string(err)};
  }
  return {res->status, false, res->body, {}};
}

struct MockServer::Impl {
  httplib::Server server;
  std::thread thread;
  std::mutex mu;
  std::condition_variable cv;
  bool stopped = false;
};

MockServer::MockServer(MockScript script, const std::string& host, int port)
    : impl_(std::make_unique<Impl>()), backend_(std::make_shared<MockBackend>(std::move(script))) {
  auto backend = backend_;
  impl_->server.Post(R"(/.*)", [backend](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r;
    r.path = req.path;
    r.body = req.body;
    for (const auto& [k, v] : req.headers) r.headers[k] = v;
    const auto out = backend->handle(r);
    if (out.status == 0) {
      res.status = 504;
      res.set_content(R"({"error":{"message":"timeout"}})", "application/json");
      return;
    }
    res.status = out.status;
    res.set_content(out.body, "application/json");
  });
  // Without SO_REUSEPORT so a port held by another server is a bind failure.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });
  if (port == 0) {
    port_ = impl_->server.bind_to_any_port(host);
    if (port_ < 0) fail(ErrorCode::BindError, "cannot bind " + host);
  } else {
    if (!impl_->server.bind_to_port(host, port))
      fail(ErrorCode::BindError, "cannot bind " + host + ":" + std::to_string(port));
    port_ = port;
  }
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

MockServer::~MockServer() { stop(); }

void MockServer::wait() {
  std::unique_lock lock(impl_->mu);
  impl_->cv.wait(lock, [&] { return impl_->stopped; });
}

void MockServer::stop() {
  std::lock_guard lock(impl_->mu);
  if (impl_->stopped) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
  impl_->stopped = true;
  impl_->cv.notify_all();
}

std::unique_ptr<MockServer> mock_serve(MockScript script, const std::string& host, int port) {
  return std::make_unique<MockServer>(std::move(script), host, port);
}

}  // namespace editforge
