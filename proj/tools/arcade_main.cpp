#include <atomic>
#include <chrono>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "arcade/content/pack.hpp"
#include "arcade/error.hpp"
#include "arcade/keyhunter/cipher.hpp"
#include "arcade/platform/http_server.hpp"
#include "arcade/platform/service.hpp"
#include "arcade/platform/store.hpp"

namespace {

namespace fs = std::filesystem;
using namespace arcade;
using namespace arcade::platform;

std::atomic<HttpServer*> g_server{nullptr};

void HandleSignal(int) {
  if (HttpServer* server = g_server.load()) server->Stop();
}

std::string ReadAll(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

datadefenders::Tuning TuningFrom(const std::string& content_dir) {
  const fs::path path = fs::path(content_dir) / "datadefenders_tuning.json";
  if (content_dir.empty() || !fs::exists(path)) return {};
  return datadefenders::TuningFromJson(nlohmann::json::parse(ReadAll(path.string())));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Security-training arcade: game server and admin tools"};
  app.require_subcommand(1);

  std::string data_dir = "data";
  std::string content_dir = "content";

  auto* serve = app.add_subcommand("serve", "Run the HTTP game service");
  std::string host = "0.0.0.0";
  int port = 8080;
  std::int64_t token_ttl = 24 * 3600;
  std::optional<std::uint64_t> deterministic_seed;
  std::string web_root;
  serve->add_option("--host", host, "Listen address")->capture_default_str();
  serve->add_option("--port", port, "Listen port")->capture_default_str();
  serve->add_option("--data-dir", data_dir, "Database, transcripts and outbox")->capture_default_str();
  serve->add_option("--content-dir", content_dir, "Content packs")->capture_default_str();
  serve->add_option("--token-ttl", token_ttl, "Bearer token lifetime in seconds")->capture_default_str();
  serve->add_option("--deterministic-seed", deterministic_seed,
                    "Derive session seeds from this value (test mode)");
  serve->add_option("--web-root", web_root, "Directory of static UI files served at /");

  auto* import = app.add_subcommand("import-pack", "Validate a content pack and install it");
  std::string kind_name;
  std::string pack_file;
  import->add_option("kind", kind_name, "questions, emails or scenarios")->required();
  import->add_option("file", pack_file, "Pack JSON file")->required()->check(CLI::ExistingFile);
  import->add_option("--content-dir", content_dir, "Install destination")->capture_default_str();
  bool dry_run = false;
  import->add_flag("--dry-run", dry_run, "Validate only");

  auto* admin = app.add_subcommand("create-admin", "Create an admin account");
  std::string username, nickname, email, password;
  admin->add_option("--data-dir", data_dir)->capture_default_str();
  admin->add_option("--content-dir", content_dir)->capture_default_str();
  admin->add_option("--username", username)->required();
  admin->add_option("--nickname", nickname);
  admin->add_option("--email", email)->required();
  admin->add_option("--password", password, "Falls back to $ARCADE_ADMIN_PASSWORD");

  auto* board = app.add_subcommand("leaderboard", "Print a game's leaderboard");
  std::string game_name;
  int limit = 10;
  board->add_option("game", game_name, "trivia, keyhunter, phishing or datadefenders")->required();
  board->add_option("--limit", limit)->capture_default_str();
  board->add_option("--data-dir", data_dir)->capture_default_str();

  auto* cipher = app.add_subcommand("cipher", "Run a Key Hunter cipher");
  cipher->require_subcommand(1);
  std::string cipher_name;
  std::optional<int> cipher_param;
  std::string text;
  for (auto* sub : {cipher->add_subcommand("encode", "Plaintext to ciphertext"),
                    cipher->add_subcommand("decode", "Ciphertext to plaintext")}) {
    sub->add_option("--cipher", cipher_name, "pigpen, caesar, transposition, atbash, zigzag, polybius")
        ->required();
    sub->add_option("--param", cipher_param, "Shift, column width or rail count");
    sub->add_option("text", text)->required();
  }

  auto* constants = app.add_subcommand("dd-constants", "Print the Data Defenders tuning JSON");
  constants->add_option("--content-dir", content_dir)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (serve->parsed()) {
      ServiceConfig config;
      config.data_dir = data_dir;
      config.content_dir = content_dir;
      config.token_ttl_s = token_ttl;
      config.deterministic_seed = deterministic_seed;
      GameService service(config, LoadContentDir(content_dir));
      HttpServer server(service, HttpOptions{10, web_root}, SystemNowMs);
      if (!server.Bind(host, port)) {
        std::cerr << "cannot bind " << host << ":" << port << "\n";
        return 1;
      }
      g_server = &server;
      std::signal(SIGINT, HandleSignal);
      std::signal(SIGTERM, HandleSignal);
      std::atomic<bool> running{true};
      std::thread sweeper([&] {
        while (running) {
          for (int i = 0; i < 600 && running; ++i) {
            std::this_thread::sleep_for(std::chrono::milliseconds(100));
          }
          service.SweepExpired();
        }
      });
      std::cout << "listening on " << host << ":" << port << std::endl;
      server.ListenAfterBind();
      running = false;
      sweeper.join();
      g_server = nullptr;
      return 0;
    }

    if (import->parsed()) {
      auto kind = content::ParsePackKind(kind_name);
      if (!kind) throw Error(Errc::kBadRequest, "unknown pack kind " + kind_name);
      content::ValidationReport report;
      std::optional<content::ContentPack> pack;
      try {
        pack = content::ParsePack(ReadAll(pack_file), *kind);
        report = content::ValidatePack(*pack);
      } catch (const Error& e) {
        report.violations.push_back(std::string(ErrcName(e.code())) + ": " + e.what());
      }
      for (const auto& v : report.violations) std::cout << "violation: " << v << "\n";
      if (!report.accepted()) {
        std::cout << "rejected\n";
        return 2;
      }
      if (!dry_run) {
        fs::create_directories(content_dir);
        std::ofstream out(fs::path(content_dir) / (kind_name + ".json"));
        out << content::SerializePack(*pack);
      }
      std::cout << "accepted\n";
      return 0;
    }

    if (admin->parsed()) {
      if (password.empty()) {
        if (const char* env = std::getenv("ARCADE_ADMIN_PASSWORD")) password = env;
      }
      ServiceConfig config;
      config.data_dir = data_dir;
      ContentSet content;
      content.tuning = TuningFrom(content_dir);
      GameService service(config, content);
      const UserRow user =
          service.CreateAdmin(username, nickname.empty() ? username : nickname, email, password);
      std::cout << ToJson(user).dump() << "\n";
      return 0;
    }

    if (board->parsed()) {
      auto game = ParseGame(game_name);
      if (!game) throw Error(Errc::kUnknownGame, "unknown game " + game_name);
      Store store((fs::path(data_dir) / "arcade.db").string());
      for (const auto& row : store.Leaderboard(*game, limit)) {
        std::cout << ToJson(row).dump() << "\n";
      }
      return 0;
    }

    if (cipher->parsed()) {
      auto id = keyhunter::ParseCipherId(cipher_name);
      if (!id) throw Error(Errc::kInvalidCipherParams, "unknown cipher " + cipher_name);
      const keyhunter::CipherSpec spec{*id, cipher_param};
      const bool encode = cipher->get_subcommand("encode")->parsed();
      std::cout << (encode ? keyhunter::Encode(spec, text) : keyhunter::Decode(spec, text)) << "\n";
      return 0;
    }

    if (constants->parsed()) {
      std::cout << datadefenders::ToJson(TuningFrom(content_dir)).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << ErrcName(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
