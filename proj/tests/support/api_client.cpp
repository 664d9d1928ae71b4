#include "api_client.hpp"

#include <stdexcept>

#include "httplib.h"

namespace fixtures {

using arcade::platform::ContentSet;
using arcade::platform::GameService;
using arcade::platform::HttpOptions;
using arcade::platform::HttpServer;
using arcade::platform::ServiceConfig;

LiveServer::LiveServer(ServiceConfig config, ContentSet content, HttpOptions options) {
  auto clock = config.clock;
  service_ = std::make_unique<GameService>(std::move(config), std::move(content));
  http_ = std::make_unique<HttpServer>(*service_, std::move(options), clock);
  port_ = http_->BindToAnyPort("127.0.0.1");
  if (port_ <= 0) throw std::runtime_error("could not bind a test port");
  thread_ = std::thread([this] { http_->ListenAfterBind(); });
  http_->WaitUntilReady();
}

LiveServer::~LiveServer() {
  http_->Stop();
  if (thread_.joinable()) thread_.join();
}

ApiClient::ApiClient(int port) : client_(std::make_unique<httplib::Client>("127.0.0.1", port)) {
  client_->set_read_timeout(30, 0);
}

ApiClient::~ApiClient() = default;

ApiResponse ApiClient::Record(int status, const std::string& body) {
  ApiResponse response{status, nullptr};
  if (!body.empty()) {
    response.body = nlohmann::json::parse(body, nullptr, false);
    if (response.body.is_discarded()) response.body = body;
  }
  traffic_.push_back(response.body);
  return response;
}

namespace {

httplib::Headers AuthHeaders(const std::string& token) {
  if (token.empty()) return {};
  return {{"Authorization", "Bearer " + token}};
}

}  // namespace

ApiResponse ApiClient::Post(const std::string& path, const nlohmann::json& body,
                            const std::string& token) {
  return PostRaw(path, body.dump(), token);
}

ApiResponse ApiClient::PostRaw(const std::string& path, const std::string& body,
                               const std::string& token) {
  auto result = client_->Post(path, AuthHeaders(token), body, "application/json");
  if (!result) throw std::runtime_error("POST " + path + " failed: " + httplib::to_string(result.error()));
  return Record(result->status, result->body);
}

ApiResponse ApiClient::Get(const std::string& path, const std::string& token) {
  auto result = client_->Get(path, AuthHeaders(token));
  if (!result) throw std::runtime_error("GET " + path + " failed: " + httplib::to_string(result.error()));
  return Record(result->status, result->body);
}

}  // namespace fixtures
