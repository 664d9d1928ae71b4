#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcade/content/pack.hpp"
#include "json.hpp"

namespace arcade::datadefenders {

using content::AttackType;
using content::ClueChannel;

// Every economy and pacing constant in one place. Exported and loaded as JSON
// so balancing does not need a rebuild.
struct Tuning {
  int ticks_per_day = 120;
  int onset_min_tick = 10;
  int onset_max_tick = 100;
  int onset_min_gap = 20;
  int max_attacks_per_day = 3;
  int days_per_extra_attack = 3;
  int owner_message_delay = 10;
  double health_decay_per_tick = 1.0;
  double decay_factor_per_level = 0.75;
  int health_recovery_per_tick = 2;
  int reputation_loss_per_down_server_tick = 1;
  int diagnosis_reward = 10;
  int diagnosis_penalty = 10;
  int reward_per_correct_answer = 2;
  int fast_report_bonus = 5;
  int fast_report_window = 20;
  int unresolved_penalty = 5;
  int pay_per_website = 10;
  int growth_reputation_threshold = 60;
  int upgrade_cost_per_level = 100;
  int max_upgrade_level = 3;
  int base_capacity = 4;
  int initial_websites_per_server = 4;
  int initial_reputation = 50;
  int initial_money = 0;

  bool operator==(const Tuning&) const = default;
};

nlohmann::json ToJson(const Tuning& tuning);
// Strict: unknown keys are rejected with kUnknownField, wrong types with
// kMalformedSyntax. Missing keys keep their defaults.
Tuning TuningFromJson(const nlohmann::json& doc);

inline constexpr int kServerCount = 4;
inline constexpr int kReportAnswers = 4;

struct Website {
  int number = 0;
  std::string name;
  std::string url;
  std::string path;
  std::string software;
  std::vector<std::string> files;
};

struct Server {
  int server_id = 0;
  int health = 100;
  int upgrade_level = 0;
  std::vector<Website> websites;
};

// One piece of observable evidence. `kind` names what was observed (for
// example "request_flood"), never the attack behind it.
struct ClueEvent {
  ClueChannel channel = ClueChannel::kServers;
  int tick = 0;
  std::string kind;
  std::string text;
  int server_id = 0;
  std::optional<int> website;
  std::map<std::string, std::string> details;
  std::map<std::string, double> metrics;

  bool operator==(const ClueEvent&) const = default;
};

enum class AttackStatus { kScheduled, kActive, kResolved, kExpired };

struct AttackInstance {
  AttackType attack_type = AttackType::kDoS;
  std::string template_id;
  int target_server = 1;
  std::optional<int> target_website;
  int onset_tick = 0;
  AttackStatus status = AttackStatus::kScheduled;
  std::optional<int> resolved_tick;
  std::vector<content::ReportQuestion> report;  // the four graded questions
  std::vector<ClueEvent> pending;               // not yet emitted
  std::vector<ClueEvent> clue_log;              // emitted so far
  int reports_filed = 0;
};

struct HostingState {
  Tuning tuning;
  int day = 1;
  int tick = 0;
  bool day_in_progress = false;
  std::array<Server, kServerCount> servers;
  int reputation = 50;
  int money = 0;
  int next_website_number = 1;
  std::vector<AttackInstance> plan;  // today's attacks, hidden from views
  std::vector<ClueEvent> events;     // everything emitted today
  std::vector<AttackInstance> resolved_attacks;

  int Capacity(const Server& server) const {
    return tuning.base_capacity + server.upgrade_level;
  }
  int WebsiteCount() const;
  const AttackInstance* ActiveAttack() const;
  AttackInstance* ActiveAttack();
};

struct ReportResult {
  bool diagnosis_correct = false;
  int correct_answers = 0;
  int reputation_delta = 0;  // as applied, after clamping
  int reputation = 0;
  bool resolved = false;
};

struct DaySummary {
  int day = 0;  // the day that just ended
  int money_earned = 0;
  int money = 0;
  int reputation = 0;
  int attacks = 0;
  int attacks_resolved = 0;
  int unresolved_penalty = 0;
  std::optional<int> website_added_to;  // server id
};

enum class Tab { kWebsites, kServers, kSecCams, kMessages };

HostingState NewHosting(const Tuning& tuning = {});
// Rebuilds hosting from the persisted context (day, reputation, money and
// per-server upgrade levels); each server gets its initial website set.
HostingState RestoreHosting(int day, int reputation, int money,
                            const std::array<int, kServerCount>& upgrades,
                            const Tuning& tuning = {});

int AttacksForDay(const Tuning& tuning, int day);

void StartDay(HostingState& state, const content::ContentPack& scenarios, std::uint64_t seed);
std::vector<ClueEvent> Tick(HostingState& state);
nlohmann::json ViewTab(const HostingState& state, Tab tab);
// Prompts and choices of the report questions for the active attack.
nlohmann::json ReportForm(const HostingState& state);
ReportResult FileReport(HostingState& state, AttackType diagnosis,
                        const std::vector<int>& answers, int at_tick);
DaySummary EndDay(HostingState& state);
void BuyUpgrade(HostingState& state, int server_id);
int UpgradeCost(const HostingState& state, int server_id);

std::string_view ToString(Tab tab);
std::optional<Tab> ParseTab(std::string_view text);
ClueChannel ChannelOf(Tab tab);

nlohmann::json ToJson(const ClueEvent& event);
nlohmann::json ToJson(const ReportResult& result);
nlohmann::json ToJson(const DaySummary& summary);
// Headline numbers for the desktop screen; no hidden state.
nlohmann::json View(const HostingState& state);
// Complete state including the hidden plan; for transcripts only.
nlohmann::json Snapshot(const HostingState& state);

}  // namespace arcade::datadefenders
