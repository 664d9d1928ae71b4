#pragma once

#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "arcade/platform/http_server.hpp"
#include "arcade/platform/service.hpp"
#include "json.hpp"

namespace httplib {
class Client;
}

namespace fixtures {

// A GameService behind a real HTTP listener on an ephemeral loopback port.
class LiveServer {
 public:
  LiveServer(arcade::platform::ServiceConfig config, arcade::platform::ContentSet content,
             arcade::platform::HttpOptions options = {});
  ~LiveServer();
  LiveServer(const LiveServer&) = delete;
  LiveServer& operator=(const LiveServer&) = delete;

  arcade::platform::GameService& service() { return *service_; }
  int port() const { return port_; }

 private:
  std::unique_ptr<arcade::platform::GameService> service_;
  std::unique_ptr<arcade::platform::HttpServer> http_;
  std::thread thread_;
  int port_ = -1;
};

struct ApiResponse {
  int status = 0;
  nlohmann::json body;
};

// Minimal JSON client that keeps every response body it received.
class ApiClient {
 public:
  explicit ApiClient(int port);
  ~ApiClient();

  ApiResponse Post(const std::string& path, const nlohmann::json& body,
                   const std::string& token = "");
  ApiResponse PostRaw(const std::string& path, const std::string& body,
                      const std::string& token = "");
  ApiResponse Get(const std::string& path, const std::string& token = "");

  const std::vector<nlohmann::json>& traffic() const { return traffic_; }

 private:
  ApiResponse Record(int status, const std::string& body);

  std::unique_ptr<httplib::Client> client_;
  std::vector<nlohmann::json> traffic_;
};

}  // namespace fixtures
