#pragma once

#include <memory>
#include <string>

#include "arcade/error.hpp"
#include "arcade/platform/rate_limiter.hpp"
#include "arcade/platform/service.hpp"

namespace httplib {
class Server;
}

namespace arcade::platform {

// HTTP status for a service error code.
int HttpStatus(Errc code);

struct HttpOptions {
  int login_limit_per_minute = 10;
  std::string static_dir;  // served at "/" when non-empty
};

// JSON-over-HTTP front end for GameService.
class HttpServer {
 public:
  HttpServer(GameService& service, HttpOptions options, Clock clock);
  ~HttpServer();

  // Binds to an ephemeral port and returns it, or -1.
  int BindToAnyPort(const std::string& host);
  bool Bind(const std::string& host, int port);
  // Blocks until Stop().
  bool ListenAfterBind();
  void Stop();
  void WaitUntilReady() const;

 private:
  void RegisterRoutes();

  GameService& service_;
  HttpOptions options_;
  RateLimiter login_limiter_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace arcade::platform
