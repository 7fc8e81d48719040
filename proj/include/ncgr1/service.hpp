#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include <json.hpp>

#include "ncgr1/session.hpp"

namespace ncgr1 {

/// Transport-free request handling behind the HTTP server.
///   POST /solve                  {"game", "algo"?, "precheck"?}
///   POST /session                {"game" | "maze", "strategy"?}
///   POST /session/{id}/env-move  {"to"}
///   GET  /maze?cols&lines&goals&variant
class service {
public:
  struct reply {
    int status = 200;
    nlohmann::json body;
  };

  reply handle(const std::string& method, const std::string& path, const std::map<std::string, std::string>& query,
               const std::string& body);

  reply solve(const nlohmann::json& req);
  reply create_session(const nlohmann::json& req);
  reply env_move(const std::string& id, const nlohmann::json& req);
  reply maze(const std::map<std::string, std::string>& query);

private:
  struct slot {
    std::mutex mu;
    std::unique_ptr<play_session> session;
  };

  std::mutex mu_;
  std::map<std::string, std::shared_ptr<slot>> sessions_;
  std::uint64_t next_id_ = 1;
};

/// Blocking HTTP server; returns when stopped or when binding fails.
class http_server {
public:
  explicit http_server(service& svc);
  ~http_server();
  http_server(const http_server&) = delete;
  http_server& operator=(const http_server&) = delete;

  /// Port 0 picks a free port; returns the bound port or -1.
  int bind(const std::string& host, int port);
  void listen();
  void stop();

private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

}  // namespace ncgr1
