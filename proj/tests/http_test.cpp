#include <gtest/gtest.h>

#include <fstream>

#include "api_client.hpp"
#include "arcade/error.hpp"
#include "fixtures.hpp"

namespace {

using namespace arcade;
using namespace arcade::platform;
using fixtures::ApiClient;
using nlohmann::json;

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ServiceConfig config;
    config.work = WorkFactor::Minimal();
    config.clock = clock_.AsClock();
    config.deterministic_seed = 3;
    server_ = std::make_unique<fixtures::LiveServer>(config, fixtures::SyntheticContent());
    client_ = std::make_unique<ApiClient>(server_->port());
  }

  std::string Player(const std::string& name) {
    EXPECT_EQ(client_->Post("/auth/register", {{"username", name},
                                               {"nickname", "Nick " + name},
                                               {"email", name + "@example.com"},
                                               {"password", "password123"}})
                  .status,
              201);
    const auto login = client_->Post("/auth/login", {{"username", name}, {"password", "password123"}});
    EXPECT_EQ(login.status, 200);
    return login.body.value("token", "");
  }

  fixtures::ManualClock clock_;
  std::unique_ptr<fixtures::LiveServer> server_;
  std::unique_ptr<ApiClient> client_;
};

TEST(HttpStatus, Mapping) {
  EXPECT_EQ(HttpStatus(Errc::kInvalidCredentials), 401);
  EXPECT_EQ(HttpStatus(Errc::kUnauthenticated), 401);
  EXPECT_EQ(HttpStatus(Errc::kForbidden), 403);
  EXPECT_EQ(HttpStatus(Errc::kNotOwner), 403);
  EXPECT_EQ(HttpStatus(Errc::kUnknownSession), 404);
  EXPECT_EQ(HttpStatus(Errc::kUnknownGame), 404);
  EXPECT_EQ(HttpStatus(Errc::kNoMatch), 404);
  EXPECT_EQ(HttpStatus(Errc::kUsernameTaken), 409);
  EXPECT_EQ(HttpStatus(Errc::kSessionAlreadyLive), 409);
  EXPECT_EQ(HttpStatus(Errc::kSessionNotTerminal), 409);
  EXPECT_EQ(HttpStatus(Errc::kCodeUsed), 409);
  EXPECT_EQ(HttpStatus(Errc::kCodeExpired), 410);
  EXPECT_EQ(HttpStatus(Errc::kRateLimited), 429);
  EXPECT_EQ(HttpStatus(Errc::kStorage), 500);
  EXPECT_EQ(HttpStatus(Errc::kInvalidChoiceIndex), 400);
  EXPECT_EQ(HttpStatus(Errc::kBadRequest), 400);
}

TEST_F(HttpTest, RegisterLoginStats) {
  const std::string token = Player("alice");
  EXPECT_EQ(token.size(), 64u);
  const auto stats = client_->Get("/me/stats", token);
  EXPECT_EQ(stats.status, 200);
  EXPECT_EQ(stats.body["trivia_rank"], 1);
  EXPECT_EQ(client_->Get("/me/stats").status, 401);
  EXPECT_EQ(client_->Get("/me/stats", "bogus").status, 401);
  const auto dup = client_->Post("/auth/register", {{"username", "alice"},
                                                    {"nickname", "x"},
                                                    {"email", "x@example.com"},
                                                    {"password", "password123"}});
  EXPECT_EQ(dup.status, 409);
  EXPECT_EQ(dup.body["error"], "username-taken");
  const auto bad = client_->Post("/auth/login", {{"username", "alice"}, {"password", "nopenope"}});
  EXPECT_EQ(bad.status, 401);
  EXPECT_EQ(bad.body["error"], "invalid-credentials");
}

TEST_F(HttpTest, MalformedBodies) {
  EXPECT_EQ(client_->PostRaw("/auth/login", "{oops").status, 400);
  EXPECT_EQ(client_->PostRaw("/auth/login", "[1,2]").status, 400);
  EXPECT_EQ(client_->Post("/auth/login", {{"username", "alice"}}).status, 400);
  EXPECT_EQ(client_->Post("/auth/login", {{"username", 5}, {"password", "x"}}).status, 400);
}

TEST_F(HttpTest, LoginRateLimit) {
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(client_->Post("/auth/login", {{"username", "ghost"}, {"password", "whatever1"}}).status, 401);
  }
  const auto limited = client_->Post("/auth/login", {{"username", "ghost"}, {"password", "whatever1"}});
  EXPECT_EQ(limited.status, 429);
  EXPECT_EQ(limited.body["error"], "rate-limited");
  clock_.Advance(60000);
  EXPECT_EQ(client_->Post("/auth/login", {{"username", "ghost"}, {"password", "whatever1"}}).status, 401);
}

TEST_F(HttpTest, SessionLifecycle) {
  const std::string token = Player("alice");
  const auto started = client_->Post("/games/phishing/sessions", {{"difficulty", "easy"}}, token);
  ASSERT_EQ(started.status, 201);
  const std::string id = started.body["session_id"];
  EXPECT_EQ(started.body["game"], "phishing");
  EXPECT_EQ(client_->Post("/games/phishing/sessions", json::object(), token).status, 409);
  EXPECT_EQ(client_->Post("/games/chess/sessions", json::object(), token).status, 404);

  const auto act = client_->Post("/sessions/" + id + "/actions",
                                 {{"action", "classify"}, {"payload", {{"verdict", "phishing"}}}}, token);
  ASSERT_EQ(act.status, 200);
  EXPECT_TRUE(act.body["result"].contains("was_correct"));
  EXPECT_TRUE(act.body["result"].contains("label"));
  EXPECT_FALSE(act.body["terminal"]);

  EXPECT_EQ(client_->Post("/sessions/" + id + "/actions", {{"action", "dance"}}, token).status, 400);
  EXPECT_EQ(client_->Post("/sessions/" + id + "/finish", json::object(), token).status, 409);
  EXPECT_EQ(client_->Post("/sessions/nope/actions", {{"action", "view"}}, token).status, 404);

  const std::string other = Player("bob");
  EXPECT_EQ(client_->Post("/sessions/" + id + "/actions", {{"action", "view"}}, other).status, 403);

  clock_.Advance(60000);
  const auto finished = client_->Post("/sessions/" + id + "/finish", "", token);
  ASSERT_EQ(finished.status, 200);
  EXPECT_TRUE(finished.body.contains("score"));
  EXPECT_EQ(client_->Post("/sessions/" + id + "/finish", json::object(), token).status, 409);

  const auto board = client_->Get("/leaderboard/phishing?limit=5");
  EXPECT_EQ(board.status, 200);
  EXPECT_TRUE(board.body.is_array());
  EXPECT_EQ(client_->Get("/leaderboard/chess").status, 404);
  EXPECT_EQ(client_->Get("/leaderboard/trivia?limit=ten").status, 400);

  for (const auto& body : client_->traffic()) {
    EXPECT_TRUE(fixtures::FindKeys(body, fixtures::kHiddenTruthKeys).empty()) << body.dump();
  }
}

TEST_F(HttpTest, Abandon) {
  const std::string token = Player("alice");
  const std::string id = client_->Post("/games/keyhunter/sessions", json::object(), token).body["session_id"];
  EXPECT_EQ(client_->Post("/sessions/" + id + "/abandon", json::object(), token).status, 200);
  EXPECT_EQ(client_->Post("/sessions/" + id + "/actions", {{"action", "view"}}, token).status, 409);
  EXPECT_EQ(client_->Post("/games/keyhunter/sessions", json::object(), token).status, 201);
}

TEST_F(HttpTest, Recovery) {
  Player("alice");
  EXPECT_EQ(client_->Post("/auth/recover", {{"username", "alice"}, {"recovery_email", "no@example.com"}}).status,
            404);
  EXPECT_EQ(client_->Post("/auth/recover", {{"username", "alice"}, {"recovery_email", "alice@example.com"}}).status,
            202);
  const std::string code = server_->service().Outbox().back().code;
  EXPECT_EQ(client_->Post("/auth/redeem", {{"code", code}, {"new_password", "brandnew123"}}).status, 200);
  EXPECT_EQ(client_->Post("/auth/redeem", {{"code", code}, {"new_password", "brandnew123"}}).status, 409);
  EXPECT_EQ(client_->Post("/auth/login", {{"username", "alice"}, {"password", "brandnew123"}}).status, 200);

  client_->Post("/auth/recover", {{"username", "alice"}, {"recovery_email", "alice@example.com"}});
  const std::string late = server_->service().Outbox().back().code;
  clock_.Advance(16 * 60 * 1000);
  EXPECT_EQ(client_->Post("/auth/redeem", {{"code", late}, {"new_password", "brandnew456"}}).status, 410);
}

TEST_F(HttpTest, AdminRoutes) {
  const std::string player = Player("alice");
  server_->service().CreateAdmin("root", "Root", "root@example.com", "adminpass1");
  const std::string admin =
      client_->Post("/auth/login", {{"username", "root"}, {"password", "adminpass1"}}).body["token"];
  const std::string pack = content::SerializePack(fixtures::EmailCorpus(30));
  EXPECT_EQ(client_->PostRaw("/admin/packs/emails", pack, player).status, 403);
  EXPECT_EQ(client_->Get("/admin/users", player).status, 403);
  const auto ok = client_->PostRaw("/admin/packs/emails", pack, admin);
  EXPECT_EQ(ok.status, 200);
  EXPECT_TRUE(ok.body["accepted"]);
  const auto rejected = client_->PostRaw("/admin/packs/emails", "{\"kind\":\"emails\"", admin);
  EXPECT_EQ(rejected.status, 200);
  EXPECT_FALSE(rejected.body["accepted"]);
  const auto users = client_->Get("/admin/users", admin);
  EXPECT_EQ(users.status, 200);
  EXPECT_EQ(users.body.size(), 2u);
}

TEST(HttpStatic, ServesWebRoot) {
  fixtures::TempDir root;
  std::ofstream(root.path() / "index.html") << "<html>arcade</html>";
  ServiceConfig config;
  config.work = WorkFactor::Minimal();
  HttpOptions options;
  options.static_dir = root.path().string();
  fixtures::LiveServer server(config, fixtures::SyntheticContent(), options);
  ApiClient client(server.port());
  const auto page = client.Get("/index.html");
  EXPECT_EQ(page.status, 200);
  EXPECT_EQ(page.body, "<html>arcade</html>");
}

}  // namespace
