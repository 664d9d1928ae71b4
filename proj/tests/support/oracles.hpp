#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcade/content/pack.hpp"
#include "arcade/datadefenders/engine.hpp"

// Reference implementations written from the textbook definitions, kept
// separate from the library so tests compare two independent derivations.
namespace oracle {

std::string CaesarByTable(const std::string& text, int shift);
std::string AtbashByReversal(const std::string& text);
std::string RailFenceByWalk(const std::string& text, int rails);
std::string ColumnarByGrid(const std::string& text, int width);
std::string PolybiusByLookup(const std::string& text);
std::string PigpenByOrdinal(const std::string& text);

int TriviaPoints(std::int64_t elapsed_ms, std::int64_t limit_ms, bool correct);
int KeyHunterRoundScore(std::int64_t elapsed_s, int wrong_presses);
int ReportDelta(bool diagnosis_correct, int correct_answers, bool fast);

// Names the attack behind a set of observations using only the evidence
// payloads (metrics, details and channel), never the engine's kind labels.
std::optional<arcade::content::AttackType> ClassifyEvidence(
    const std::vector<arcade::datadefenders::ClueEvent>& clues);

}  // namespace oracle
