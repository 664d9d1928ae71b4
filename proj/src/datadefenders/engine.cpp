#include "arcade/datadefenders/engine.hpp"

#include <algorithm>
#include <cmath>

#include "arcade/error.hpp"
#include "arcade/rng.hpp"

namespace arcade::datadefenders {
namespace {

using nlohmann::json;

const std::vector<std::string> kBaseFiles = {"index.php", "style.css", "wp-config.php"};

std::string ServerIp(int server_id) { return "192.168.1." + std::to_string(server_id); }

Website MakeWebsite(int number) {
  const std::string n = std::to_string(number);
  return Website{number, "Website " + n, "www.website" + n + ".com", "/wp-content/plugins",
                 "Apache", kBaseFiles};
}

void ReplaceAll(std::string& text, std::string_view key, const std::string& value) {
  std::size_t pos = 0;
  while ((pos = text.find(key, pos)) != std::string::npos) {
    text.replace(pos, key.size(), value);
    pos += value.size();
  }
}

// Fills {site} {url} {server} {ip} {path} and any detail/metric keys.
std::string Render(std::string text, const Server& server, const Website* site,
                   const ClueEvent& event) {
  ReplaceAll(text, "{server}", "Server " + std::to_string(server.server_id));
  ReplaceAll(text, "{ip}", ServerIp(server.server_id));
  if (site) {
    ReplaceAll(text, "{site}", site->name);
    ReplaceAll(text, "{url}", site->url);
    ReplaceAll(text, "{path}", site->path);
  }
  for (const auto& [key, value] : event.details) ReplaceAll(text, "{" + key + "}", value);
  for (const auto& [key, value] : event.metrics) {
    const bool whole = std::floor(value) == value;
    ReplaceAll(text, "{" + key + "}",
               whole ? std::to_string(static_cast<long long>(value)) : std::to_string(value));
  }
  return text;
}

const std::string& Pick(const std::vector<std::string>& options, Rng& rng) {
  return options[rng.Index(options.size())];
}

std::string_view MessageKind(AttackType type) {
  switch (type) {
    case AttackType::kDoS: return "site_unreachable";
    case AttackType::kMalware: return "strange_behavior";
    case AttackType::kDNS: return "users_redirected";
    case AttackType::kSQLInjection: return "data_exposed";
    default: return "";
  }
}

// Builds the evidence an attack will surface, in emission order.
std::vector<ClueEvent> BuildClues(const HostingState& state, const AttackInstance& attack,
                                  const content::AttackTemplate& tmpl, Rng& rng) {
  const Server& server = state.servers[attack.target_server - 1];
  const Website* site = nullptr;
  if (attack.target_website) {
    for (const auto& w : server.websites) {
      if (w.number == *attack.target_website) site = &w;
    }
  }
  std::vector<ClueEvent> clues;
  auto add = [&](ClueChannel channel, std::string kind, int tick) -> ClueEvent& {
    ClueEvent event;
    event.channel = channel;
    event.kind = std::move(kind);
    event.tick = tick;
    event.server_id = server.server_id;
    event.website = attack.target_website;
    clues.push_back(std::move(event));
    return clues.back();
  };
  const std::string site_path = site ? site->path : "/wp-content/plugins";
  const std::string room = "Server room " + std::to_string(server.server_id);
  const int onset = attack.onset_tick;

  switch (attack.attack_type) {
    case AttackType::kDoS: {
      auto& e = add(ClueChannel::kServers, "request_flood", onset);
      e.metrics["request_rate_multiplier"] = static_cast<double>(rng.Uniform(10, 25));
      e.metrics["distinct_sources"] = static_cast<double>(rng.Uniform(200, 900));
      break;
    }
    case AttackType::kMalware: {
      auto& file = add(ClueChannel::kWebsites, "unexpected_file", onset);
      file.details["file"] = site_path + "/cache-" + std::to_string(rng.Uniform(1000, 9999)) + ".php";
      auto& cpu = add(ClueChannel::kServers, "cpu_climb", onset);
      cpu.metrics["cpu_percent"] = static_cast<double>(rng.Uniform(85, 99));
      break;
    }
    case AttackType::kDNS: {
      auto& e = add(ClueChannel::kWebsites, "foreign_resolution", onset);
      e.details["resolves_to"] = "203.0.113." + std::to_string(rng.Uniform(2, 254));
      e.details["expected_address"] = ServerIp(server.server_id);
      break;
    }
    case AttackType::kInsider: {
      auto& cam = add(ClueChannel::kSecCams, "person_in_room", onset);
      cam.details["room"] = room;
      auto& cfg = add(ClueChannel::kServers, "config_modified", onset);
      cfg.details["file"] = "/etc/apache2/apache2.conf";
      break;
    }
    case AttackType::kSQLInjection: {
      auto& e = add(ClueChannel::kServers, "suspicious_queries", onset);
      e.details["source_ip"] = "198.51.100." + std::to_string(rng.Uniform(2, 254));
      e.details["sample_query"] = "/products.php?id=1' OR '1'='1";
      e.metrics["queries_per_minute"] = static_cast<double>(rng.Uniform(40, 120));
      break;
    }
    case AttackType::kUSBDrop: {
      auto& cam = add(ClueChannel::kSecCams, "device_inserted", onset);
      cam.details["room"] = room;
      auto& file = add(ClueChannel::kWebsites, "new_executable", onset);
      file.details["file"] = site_path + "/update_" + std::to_string(rng.Uniform(10, 99)) + ".exe";
      break;
    }
  }

  const std::string_view message_kind = MessageKind(attack.attack_type);
  if (!message_kind.empty()) {
    add(ClueChannel::kMessages, std::string(message_kind),
        onset + state.tuning.owner_message_delay);
  }

  for (auto& event : clues) {
    std::string text;
    auto it = tmpl.clue_texts.find(event.channel);
    if (event.channel == ClueChannel::kMessages) {
      text = tmpl.owner_message;
      if (it != tmpl.clue_texts.end() && !it->second.empty()) text += " " + Pick(it->second, rng);
    } else if (it != tmpl.clue_texts.end() && !it->second.empty()) {
      text = Pick(it->second, rng);
    }
    event.text = Render(text, server, site, event);
  }
  return clues;
}

std::vector<int> DrawOnsets(const Tuning& tuning, int count, Rng& rng) {
  const int spread = (tuning.onset_min_gap - 1) * (count - 1);
  std::vector<int> candidates;
  for (int t = tuning.onset_min_tick; t <= tuning.onset_max_tick - spread; ++t) {
    candidates.push_back(t);
  }
  rng.Shuffle(std::span(candidates));
  candidates.resize(static_cast<std::size_t>(count));
  std::sort(candidates.begin(), candidates.end());
  for (int i = 0; i < count; ++i) candidates[i] += (tuning.onset_min_gap - 1) * i;
  return candidates;
}

int Clamp(int value, int lo, int hi) { return std::max(lo, std::min(hi, value)); }

int AdjustReputation(HostingState& state, int delta) {
  const int before = state.reputation;
  state.reputation = Clamp(state.reputation + delta, 0, 100);
  return state.reputation - before;
}

void Emit(HostingState& state, AttackInstance& attack, std::vector<ClueEvent>& out) {
  auto due = std::stable_partition(attack.pending.begin(), attack.pending.end(),
                                   [&](const ClueEvent& e) { return e.tick > state.tick; });
  for (auto it = due; it != attack.pending.end(); ++it) {
    attack.clue_log.push_back(*it);
    state.events.push_back(*it);
    out.push_back(*it);
  }
  attack.pending.erase(due, attack.pending.end());
}

const ClueEvent* EmittedClue(const AttackInstance* attack, int server_id, std::string_view kind) {
  if (!attack || attack->target_server != server_id) return nullptr;
  for (const auto& e : attack->clue_log) {
    if (e.kind == kind) return &e;
  }
  return nullptr;
}

json EventsOn(const HostingState& state, ClueChannel channel) {
  json list = json::array();
  for (const auto& e : state.events) {
    if (e.channel == channel) list.push_back(ToJson(e));
  }
  return list;
}

}  // namespace

json ToJson(const Tuning& t) {
  return {{"ticks_per_day", t.ticks_per_day},
          {"onset_min_tick", t.onset_min_tick},
          {"onset_max_tick", t.onset_max_tick},
          {"onset_min_gap", t.onset_min_gap},
          {"max_attacks_per_day", t.max_attacks_per_day},
          {"days_per_extra_attack", t.days_per_extra_attack},
          {"owner_message_delay", t.owner_message_delay},
          {"health_decay_per_tick", t.health_decay_per_tick},
          {"decay_factor_per_level", t.decay_factor_per_level},
          {"health_recovery_per_tick", t.health_recovery_per_tick},
          {"reputation_loss_per_down_server_tick", t.reputation_loss_per_down_server_tick},
          {"diagnosis_reward", t.diagnosis_reward},
          {"diagnosis_penalty", t.diagnosis_penalty},
          {"reward_per_correct_answer", t.reward_per_correct_answer},
          {"fast_report_bonus", t.fast_report_bonus},
          {"fast_report_window", t.fast_report_window},
          {"unresolved_penalty", t.unresolved_penalty},
          {"pay_per_website", t.pay_per_website},
          {"growth_reputation_threshold", t.growth_reputation_threshold},
          {"upgrade_cost_per_level", t.upgrade_cost_per_level},
          {"max_upgrade_level", t.max_upgrade_level},
          {"base_capacity", t.base_capacity},
          {"initial_websites_per_server", t.initial_websites_per_server},
          {"initial_reputation", t.initial_reputation},
          {"initial_money", t.initial_money}};
}

Tuning TuningFromJson(const json& doc) {
  if (!doc.is_object()) throw Error(Errc::kMalformedSyntax, "tuning must be a JSON object");
  Tuning t;
  json merged = ToJson(t);
  for (const auto& [key, value] : doc.items()) {
    if (!merged.contains(key)) {
      throw Error(Errc::kUnknownField, "unknown tuning key \"" + key + "\"");
    }
    const bool want_float = merged[key].is_number_float();
    if (!value.is_number() || (!want_float && !value.is_number_integer())) {
      throw Error(Errc::kMalformedSyntax, "tuning key \"" + key + "\" has the wrong type");
    }
    merged[key] = value;
  }
  t.ticks_per_day = merged["ticks_per_day"];
  t.onset_min_tick = merged["onset_min_tick"];
  t.onset_max_tick = merged["onset_max_tick"];
  t.onset_min_gap = merged["onset_min_gap"];
  t.max_attacks_per_day = merged["max_attacks_per_day"];
  t.days_per_extra_attack = merged["days_per_extra_attack"];
  t.owner_message_delay = merged["owner_message_delay"];
  t.health_decay_per_tick = merged["health_decay_per_tick"];
  t.decay_factor_per_level = merged["decay_factor_per_level"];
  t.health_recovery_per_tick = merged["health_recovery_per_tick"];
  t.reputation_loss_per_down_server_tick = merged["reputation_loss_per_down_server_tick"];
  t.diagnosis_reward = merged["diagnosis_reward"];
  t.diagnosis_penalty = merged["diagnosis_penalty"];
  t.reward_per_correct_answer = merged["reward_per_correct_answer"];
  t.fast_report_bonus = merged["fast_report_bonus"];
  t.fast_report_window = merged["fast_report_window"];
  t.unresolved_penalty = merged["unresolved_penalty"];
  t.pay_per_website = merged["pay_per_website"];
  t.growth_reputation_threshold = merged["growth_reputation_threshold"];
  t.upgrade_cost_per_level = merged["upgrade_cost_per_level"];
  t.max_upgrade_level = merged["max_upgrade_level"];
  t.base_capacity = merged["base_capacity"];
  t.initial_websites_per_server = merged["initial_websites_per_server"];
  t.initial_reputation = merged["initial_reputation"];
  t.initial_money = merged["initial_money"];
  return t;
}

int HostingState::WebsiteCount() const {
  int total = 0;
  for (const auto& s : servers) total += static_cast<int>(s.websites.size());
  return total;
}

const AttackInstance* HostingState::ActiveAttack() const {
  for (const auto& a : plan) {
    if (a.status == AttackStatus::kActive) return &a;
  }
  return nullptr;
}

AttackInstance* HostingState::ActiveAttack() {
  return const_cast<AttackInstance*>(std::as_const(*this).ActiveAttack());
}

HostingState NewHosting(const Tuning& tuning) {
  HostingState state;
  state.tuning = tuning;
  state.reputation = tuning.initial_reputation;
  state.money = tuning.initial_money;
  for (int i = 0; i < kServerCount; ++i) {
    Server& server = state.servers[i];
    server.server_id = i + 1;
    for (int k = 0; k < tuning.initial_websites_per_server; ++k) {
      server.websites.push_back(MakeWebsite(state.next_website_number++));
    }
  }
  return state;
}

HostingState RestoreHosting(int day, int reputation, int money,
                            const std::array<int, kServerCount>& upgrades, const Tuning& tuning) {
  HostingState state = NewHosting(tuning);
  state.day = std::max(1, day);
  state.reputation = Clamp(reputation, 0, 100);
  state.money = std::max(0, money);
  for (int i = 0; i < kServerCount; ++i) {
    state.servers[i].upgrade_level = Clamp(upgrades[i], 0, tuning.max_upgrade_level);
  }
  return state;
}

int AttacksForDay(const Tuning& tuning, int day) {
  return std::min(1 + day / tuning.days_per_extra_attack, tuning.max_attacks_per_day);
}

void StartDay(HostingState& state, const content::ContentPack& scenarios, std::uint64_t seed) {
  if (state.day_in_progress) throw Error(Errc::kDayInProgress);
  std::map<AttackType, std::vector<const content::AttackTemplate*>> by_type;
  for (const auto& t : scenarios.scenarios) by_type[t.attack_type].push_back(&t);
  for (AttackType type : content::kAllAttackTypes) {
    if (by_type[type].empty()) {
      throw Error(Errc::kInvalidConfig,
                  "scenario pack has no template for " + std::string(content::ToString(type)));
    }
  }

  Rng rng(seed);
  const int count = AttacksForDay(state.tuning, state.day);
  const std::vector<int> onsets = DrawOnsets(state.tuning, count, rng);

  state.plan.clear();
  state.events.clear();
  state.tick = 0;
  for (int i = 0; i < count; ++i) {
    Rng attack_rng(MixSeed(seed, static_cast<std::uint64_t>(i)));
    AttackInstance attack;
    attack.attack_type = content::kAllAttackTypes[attack_rng.Index(content::kAllAttackTypes.size())];
    const auto& templates = by_type[attack.attack_type];
    const content::AttackTemplate& tmpl = *templates[attack_rng.Index(templates.size())];
    attack.template_id = tmpl.id;
    attack.onset_tick = onsets[i];
    attack.target_server = static_cast<int>(attack_rng.Uniform(1, kServerCount));
    const Server& server = state.servers[attack.target_server - 1];
    if (attack.attack_type != AttackType::kInsider && !server.websites.empty()) {
      attack.target_website = server.websites[attack_rng.Index(server.websites.size())].number;
    }
    std::vector<std::size_t> picks(tmpl.report_questions.size());
    for (std::size_t k = 0; k < picks.size(); ++k) picks[k] = k;
    attack_rng.Shuffle(std::span(picks));
    for (int k = 0; k < kReportAnswers && k < static_cast<int>(picks.size()); ++k) {
      attack.report.push_back(tmpl.report_questions[picks[k]]);
    }
    attack.pending = BuildClues(state, attack, tmpl, attack_rng);
    state.plan.push_back(std::move(attack));
  }
  state.day_in_progress = true;
}

std::vector<ClueEvent> Tick(HostingState& state) {
  if (!state.day_in_progress) throw Error(Errc::kDayNotStarted);
  if (state.tick >= state.tuning.ticks_per_day) throw Error(Errc::kDayOver);
  ++state.tick;
  std::vector<ClueEvent> emitted;

  for (auto& attack : state.plan) {
    if (attack.status == AttackStatus::kScheduled && attack.onset_tick == state.tick) {
      // A new onset closes out any incident the player never resolved.
      if (AttackInstance* open = state.ActiveAttack()) {
        open->status = AttackStatus::kExpired;
        open->pending.clear();
        AdjustReputation(state, -state.tuning.unresolved_penalty);
      }
      attack.status = AttackStatus::kActive;
    }
  }
  if (AttackInstance* active = state.ActiveAttack()) Emit(state, *active, emitted);

  const AttackInstance* active = state.ActiveAttack();
  for (auto& server : state.servers) {
    if (active && active->target_server == server.server_id) {
      const long decay = std::lround(state.tuning.health_decay_per_tick *
                                     std::pow(state.tuning.decay_factor_per_level,
                                              server.upgrade_level));
      server.health = std::max(0, server.health - static_cast<int>(decay));
    } else if (server.health < 100) {
      server.health = std::min(100, server.health + state.tuning.health_recovery_per_tick);
    }
  }
  for (const auto& server : state.servers) {
    if (server.health == 0) {
      AdjustReputation(state, -state.tuning.reputation_loss_per_down_server_tick);
    }
  }
  return emitted;
}

json ViewTab(const HostingState& state, Tab tab) {
  json rows = json::array();
  const AttackInstance* active = state.ActiveAttack();
  switch (tab) {
    case Tab::kWebsites:
      for (const auto& server : state.servers) {
        for (const auto& site : server.websites) {
          rows.push_back({{"name", site.name},
                          {"url", site.url},
                          {"path", site.path},
                          {"ip", ServerIp(server.server_id)},
                          {"software", site.software},
                          {"server_id", server.server_id},
                          {"files", site.files}});
        }
      }
      break;
    case Tab::kServers:
      for (const auto& server : state.servers) {
        double rate = 1.0;
        double cpu = 18.0 + 4.0 * server.server_id;
        if (const auto* flood = EmittedClue(active, server.server_id, "request_flood")) {
          rate = flood->metrics.at("request_rate_multiplier");
        }
        if (const auto* climb = EmittedClue(active, server.server_id, "cpu_climb")) {
          cpu = climb->metrics.at("cpu_percent");
        }
        rows.push_back({{"server_id", server.server_id},
                        {"ip", ServerIp(server.server_id)},
                        {"health", server.health},
                        {"upgrade_level", server.upgrade_level},
                        {"capacity", state.Capacity(server)},
                        {"websites", server.websites.size()},
                        {"request_rate_multiplier", rate},
                        {"cpu_percent", cpu}});
      }
      break;
    case Tab::kSecCams:
      for (const auto& server : state.servers) {
        std::string feed = "Server room " + std::to_string(server.server_id) + ": no activity.";
        for (std::string_view kind : {"person_in_room", "device_inserted"}) {
          if (const auto* cam = EmittedClue(active, server.server_id, kind)) feed = cam->text;
        }
        rows.push_back({{"server_id", server.server_id}, {"feed", feed}});
      }
      break;
    case Tab::kMessages:
      break;
  }
  return {{"tab", ToString(tab)},
          {"day", state.day},
          {"tick", state.tick},
          {"rows", rows},
          {"events", EventsOn(state, ChannelOf(tab))}};
}

json ReportForm(const HostingState& state) {
  const AttackInstance* active = state.ActiveAttack();
  if (!active) throw Error(Errc::kNoActiveAttack);
  json questions = json::array();
  for (const auto& q : active->report) {
    questions.push_back({{"prompt", q.prompt}, {"choices", q.choices}});
  }
  json options = json::array();
  for (AttackType type : content::kAllAttackTypes) options.push_back(content::ToString(type));
  return {{"questions", questions}, {"diagnosis_options", options}};
}

ReportResult FileReport(HostingState& state, AttackType diagnosis,
                        const std::vector<int>& answers, int at_tick) {
  AttackInstance* active = state.day_in_progress ? state.ActiveAttack() : nullptr;
  if (!active) throw Error(Errc::kNoActiveAttack);
  if (answers.size() != kReportAnswers || active->report.size() != kReportAnswers) {
    throw Error(Errc::kWrongAnswerCount, "a report answers exactly 4 questions");
  }
  if (at_tick < active->onset_tick || at_tick > state.tick) {
    throw Error(Errc::kInvalidTick, "report tick must lie between the onset and now");
  }
  ReportResult result;
  for (std::size_t i = 0; i < answers.size(); ++i) {
    const auto& q = active->report[i];
    if (answers[i] < 0 || answers[i] >= static_cast<int>(q.choices.size())) {
      throw Error(Errc::kInvalidChoiceIndex, "answer out of range for question " +
                                                 std::to_string(i));
    }
    if (answers[i] == q.correct) ++result.correct_answers;
  }
  const Tuning& t = state.tuning;
  result.diagnosis_correct = diagnosis == active->attack_type;
  int delta = result.diagnosis_correct ? t.diagnosis_reward : -t.diagnosis_penalty;
  delta += t.reward_per_correct_answer * result.correct_answers;
  if (result.diagnosis_correct && at_tick <= active->onset_tick + t.fast_report_window) {
    delta += t.fast_report_bonus;
  }
  ++active->reports_filed;
  result.reputation_delta = AdjustReputation(state, delta);
  result.reputation = state.reputation;
  if (result.diagnosis_correct) {
    active->status = AttackStatus::kResolved;
    active->resolved_tick = state.tick;
    active->pending.clear();
    result.resolved = true;
  }
  return result;
}

DaySummary EndDay(HostingState& state) {
  if (!state.day_in_progress) throw Error(Errc::kDayNotStarted);
  if (state.tick != state.tuning.ticks_per_day) throw Error(Errc::kDayNotOver);
  const Tuning& t = state.tuning;
  DaySummary summary;
  summary.day = state.day;
  summary.attacks = static_cast<int>(state.plan.size());
  for (auto& attack : state.plan) {
    if (attack.status == AttackStatus::kResolved) ++summary.attacks_resolved;
    if (attack.status == AttackStatus::kActive) {
      attack.status = AttackStatus::kExpired;
      attack.pending.clear();
      summary.unresolved_penalty += t.unresolved_penalty;
      AdjustReputation(state, -t.unresolved_penalty);
    }
  }

  summary.money_earned = t.pay_per_website * state.WebsiteCount();
  state.money += summary.money_earned;

  if (state.reputation >= t.growth_reputation_threshold) {
    Server* target = nullptr;
    for (auto& server : state.servers) {
      if (static_cast<int>(server.websites.size()) >= state.Capacity(server)) continue;
      if (!target || server.websites.size() < target->websites.size()) target = &server;
    }
    if (target) {
      target->websites.push_back(MakeWebsite(state.next_website_number++));
      summary.website_added_to = target->server_id;
    }
  }

  for (auto& attack : state.plan) state.resolved_attacks.push_back(std::move(attack));
  state.plan.clear();
  state.day += 1;
  state.tick = 0;
  state.day_in_progress = false;
  summary.money = state.money;
  summary.reputation = state.reputation;
  return summary;
}

int UpgradeCost(const HostingState& state, int server_id) {
  if (server_id < 1 || server_id > kServerCount) throw Error(Errc::kUnknownServer);
  return state.tuning.upgrade_cost_per_level * (state.servers[server_id - 1].upgrade_level + 1);
}

void BuyUpgrade(HostingState& state, int server_id) {
  if (state.day_in_progress) throw Error(Errc::kDayInProgress);
  const int cost = UpgradeCost(state, server_id);
  Server& server = state.servers[server_id - 1];
  if (server.upgrade_level >= state.tuning.max_upgrade_level) throw Error(Errc::kMaxLevel);
  if (state.money < cost) {
    throw Error(Errc::kInsufficientFunds, "upgrade costs " + std::to_string(cost) + ", have " +
                                              std::to_string(state.money));
  }
  state.money -= cost;
  server.upgrade_level += 1;
}

std::string_view ToString(Tab tab) {
  switch (tab) {
    case Tab::kWebsites: return "websites";
    case Tab::kServers: return "servers";
    case Tab::kSecCams: return "seccams";
    case Tab::kMessages: return "messages";
  }
  return "?";
}

std::optional<Tab> ParseTab(std::string_view text) {
  for (Tab tab : {Tab::kWebsites, Tab::kServers, Tab::kSecCams, Tab::kMessages}) {
    if (ToString(tab) == text) return tab;
  }
  return std::nullopt;
}

ClueChannel ChannelOf(Tab tab) {
  switch (tab) {
    case Tab::kWebsites: return ClueChannel::kWebsites;
    case Tab::kServers: return ClueChannel::kServers;
    case Tab::kSecCams: return ClueChannel::kSecCams;
    case Tab::kMessages: return ClueChannel::kMessages;
  }
  return ClueChannel::kMessages;
}

json ToJson(const ClueEvent& e) {
  json out{{"channel", content::ToString(e.channel)},
           {"tick", e.tick},
           {"kind", e.kind},
           {"text", e.text},
           {"server_id", e.server_id},
           {"details", e.details},
           {"metrics", e.metrics}};
  if (e.website) out["website"] = *e.website;
  return out;
}

json ToJson(const ReportResult& r) {
  return {{"diagnosis_correct", r.diagnosis_correct},
          {"correct_answers", r.correct_answers},
          {"reputation_delta", r.reputation_delta},
          {"reputation", r.reputation},
          {"resolved", r.resolved}};
}

json ToJson(const DaySummary& s) {
  json out{{"day", s.day},
           {"money_earned", s.money_earned},
           {"money", s.money},
           {"reputation", s.reputation},
           {"attacks", s.attacks},
           {"attacks_resolved", s.attacks_resolved},
           {"unresolved_penalty", s.unresolved_penalty}};
  out["website_added_to"] = s.website_added_to ? json(*s.website_added_to) : json(nullptr);
  return out;
}

json View(const HostingState& state) {
  json servers = json::array();
  for (const auto& server : state.servers) {
    servers.push_back({{"server_id", server.server_id},
                       {"health", server.health},
                       {"upgrade_level", server.upgrade_level},
                       {"capacity", state.Capacity(server)},
                       {"websites", server.websites.size()}});
  }
  return {{"day", state.day},
          {"tick", state.tick},
          {"ticks_per_day", state.tuning.ticks_per_day},
          {"day_in_progress", state.day_in_progress},
          {"reputation", state.reputation},
          {"money", state.money},
          {"report_available", state.day_in_progress && state.ActiveAttack() != nullptr},
          {"servers", servers}};
}

json Snapshot(const HostingState& state) {
  auto status_name = [](AttackStatus s) {
    switch (s) {
      case AttackStatus::kScheduled: return "scheduled";
      case AttackStatus::kActive: return "active";
      case AttackStatus::kResolved: return "resolved";
      case AttackStatus::kExpired: return "expired";
    }
    return "?";
  };
  auto attack_json = [&](const AttackInstance& a) {
    json clues = json::array();
    for (const auto& e : a.clue_log) clues.push_back(ToJson(e));
    return json{{"attack_type", content::ToString(a.attack_type)},
                {"template_id", a.template_id},
                {"target_server", a.target_server},
                {"target_website", a.target_website ? json(*a.target_website) : json(nullptr)},
                {"onset_tick", a.onset_tick},
                {"status", status_name(a.status)},
                {"resolved_tick", a.resolved_tick ? json(*a.resolved_tick) : json(nullptr)},
                {"reports_filed", a.reports_filed},
                {"clue_log", clues}};
  };
  json plan = json::array();
  for (const auto& a : state.plan) plan.push_back(attack_json(a));
  json history = json::array();
  for (const auto& a : state.resolved_attacks) history.push_back(attack_json(a));
  json view = View(state);
  view["plan"] = plan;
  view["history"] = history;
  view["next_website_number"] = state.next_website_number;
  return view;
}

}  // namespace arcade::datadefenders
