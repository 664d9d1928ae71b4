#include "arcade/platform/http_server.hpp"

#include <functional>

#include "httplib.h"
#include "json.hpp"

namespace arcade::platform {
namespace {

using nlohmann::json;

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, Errc code, const std::string& message) {
  SendJson(res, HttpStatus(code), {{"error", ErrcName(code)}, {"message", message}});
}

json BodyJson(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    json body = json::parse(req.body);
    if (!body.is_object()) throw Error(Errc::kBadRequest, "request body must be a JSON object");
    return body;
  } catch (const json::parse_error& e) {
    throw Error(Errc::kMalformedSyntax, e.what());
  }
}

std::string Field(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_string()) {
    throw Error(Errc::kBadRequest, std::string("missing string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

std::string BearerToken(const httplib::Request& req) {
  const std::string header = req.get_header_value("Authorization");
  constexpr std::string_view kPrefix = "Bearer ";
  if (header.size() <= kPrefix.size() || header.compare(0, kPrefix.size(), kPrefix) != 0) {
    return "";
  }
  return header.substr(kPrefix.size());
}

using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;

httplib::Server::Handler Guarded(Handler handler) {
  return [handler = std::move(handler)](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const Error& e) {
      SendError(res, e.code(), e.what());
    } catch (const std::exception& e) {
      SendJson(res, 500, {{"error", "internal"}, {"message", e.what()}});
    }
  };
}

}  // namespace

int HttpStatus(Errc code) {
  switch (code) {
    case Errc::kInvalidCredentials:
    case Errc::kUnauthenticated:
      return 401;
    case Errc::kForbidden:
    case Errc::kNotOwner:
      return 403;
    case Errc::kNoMatch:
    case Errc::kUnknownGame:
    case Errc::kUnknownSession:
      return 404;
    case Errc::kSessionFinished:
    case Errc::kSessionNotFinished:
    case Errc::kSessionOver:
    case Errc::kSessionEnded:
    case Errc::kSessionNotEnded:
    case Errc::kDayInProgress:
    case Errc::kDayNotStarted:
    case Errc::kDayOver:
    case Errc::kDayNotOver:
    case Errc::kNoActiveAttack:
    case Errc::kInsufficientFunds:
    case Errc::kMaxLevel:
    case Errc::kUsernameTaken:
    case Errc::kCodeUsed:
    case Errc::kSessionAlreadyLive:
    case Errc::kSessionNotLive:
    case Errc::kSessionNotTerminal:
      return 409;
    case Errc::kCodeExpired:
      return 410;
    case Errc::kRateLimited:
      return 429;
    case Errc::kStorage:
      return 500;
    default:
      return 400;
  }
}

HttpServer::HttpServer(GameService& service, HttpOptions options, Clock clock)
    : service_(service),
      options_(std::move(options)),
      login_limiter_(options_.login_limit_per_minute, 60'000, std::move(clock)),
      server_(std::make_unique<httplib::Server>()) {
  RegisterRoutes();
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::BindToAnyPort(const std::string& host) { return server_->bind_to_any_port(host); }

bool HttpServer::Bind(const std::string& host, int port) { return server_->bind_to_port(host, port); }

bool HttpServer::ListenAfterBind() { return server_->listen_after_bind(); }

void HttpServer::Stop() {
  if (server_->is_running()) server_->stop();
}

void HttpServer::WaitUntilReady() const { server_->wait_until_ready(); }

void HttpServer::RegisterRoutes() {
  auto& s = *server_;
  GameService& svc = service_;

  s.Post("/auth/register", Guarded([&svc](const auto& req, auto& res) {
    const json body = BodyJson(req);
    SendJson(res, 201,
             svc.Register(Field(body, "username"), Field(body, "nickname"), Field(body, "email"),
                          Field(body, "password")));
  }));

  s.Post("/auth/login", Guarded([this, &svc](const auto& req, auto& res) {
    if (!login_limiter_.Allow(req.remote_addr)) {
      throw Error(Errc::kRateLimited, "too many login attempts; try again in a minute");
    }
    const json body = BodyJson(req);
    SendJson(res, 200, svc.Login(Field(body, "username"), Field(body, "password")));
  }));

  s.Post("/auth/recover", Guarded([&svc](const auto& req, auto& res) {
    const json body = BodyJson(req);
    svc.Recover(Field(body, "username"), Field(body, "recovery_email"));
    SendJson(res, 202, json::object());
  }));

  s.Post("/auth/redeem", Guarded([&svc](const auto& req, auto& res) {
    const json body = BodyJson(req);
    svc.Redeem(Field(body, "code"), Field(body, "new_password"));
    SendJson(res, 200, json::object());
  }));

  s.Get("/me/stats", Guarded([&svc](const auto& req, auto& res) {
    SendJson(res, 200, svc.MyStats(BearerToken(req)));
  }));

  s.Get(R"(/leaderboard/([^/]+))", Guarded([&svc](const auto& req, auto& res) {
    int limit = 10;
    if (req.has_param("limit")) {
      try {
        limit = std::stoi(req.get_param_value("limit"));
      } catch (const std::exception&) {
        throw Error(Errc::kBadRequest, "limit must be an integer");
      }
    }
    SendJson(res, 200, svc.Leaderboard(req.matches[1], limit));
  }));

  s.Post(R"(/games/([^/]+)/sessions)", Guarded([&svc](const auto& req, auto& res) {
    SendJson(res, 201, svc.StartGame(BearerToken(req), req.matches[1], BodyJson(req)));
  }));

  s.Post(R"(/sessions/([^/]+)/actions)", Guarded([&svc](const auto& req, auto& res) {
    SendJson(res, 200, svc.Action(BearerToken(req), req.matches[1], BodyJson(req)));
  }));

  s.Post(R"(/sessions/([^/]+)/finish)", Guarded([&svc](const auto& req, auto& res) {
    SendJson(res, 200, svc.Finish(BearerToken(req), req.matches[1]));
  }));

  s.Post(R"(/sessions/([^/]+)/abandon)", Guarded([&svc](const auto& req, auto& res) {
    svc.Abandon(BearerToken(req), req.matches[1]);
    SendJson(res, 200, json::object());
  }));

  s.Post(R"(/admin/packs/([^/]+))", Guarded([&svc](const auto& req, auto& res) {
    SendJson(res, 200, svc.ImportPack(BearerToken(req), req.matches[1], req.body));
  }));

  s.Get("/admin/users", Guarded([&svc](const auto& req, auto& res) {
    SendJson(res, 200, svc.ListUsers(BearerToken(req)));
  }));

  if (!options_.static_dir.empty()) s.set_mount_point("/", options_.static_dir);
}

}  // namespace arcade::platform
