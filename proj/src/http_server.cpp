#include <httplib.h>

#include "ncgr1/service.hpp"

namespace ncgr1 {

struct http_server::impl {
  httplib::Server server;
};

namespace {

void answer(service& svc, const httplib::Request& req, httplib::Response& res) {
  std::map<std::string, std::string> query;
  for (const auto& [k, v] : req.params) query[k] = v;
  const service::reply r = svc.handle(req.method, req.path, query, req.body);
  res.status = r.status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

http_server::http_server(service& svc) : impl_(std::make_unique<impl>()) {
  auto h = [&svc](const httplib::Request& req, httplib::Response& res) { answer(svc, req, res); };
  impl_->server.Post("/solve", h);
  impl_->server.Post("/session", h);
  impl_->server.Post(R"(/session/([^/]+)/env-move)", h);
  impl_->server.Get("/maze", h);
  impl_->server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

http_server::~http_server() = default;

int http_server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void http_server::listen() { impl_->server.listen_after_bind(); }

void http_server::stop() { impl_->server.stop(); }

}  // namespace ncgr1
