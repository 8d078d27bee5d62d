#pragma once

#include <string>
#include <string_view>

#include "softgame/error.hpp"
#include "softgame/game.hpp"

namespace softgame {

inline constexpr int kFormatVersion = 1;

// Why a game document was rejected.
enum class ParseErrorKind {
  kSyntax,          // not JSON
  kSchema,          // wrong field type, missing field, bad version
  kUnknownElement,  // payoff names an element absent from the universe
  kMissingAction,   // a joint action has no entry
  kDuplicateAction, // a joint action appears twice
  kUnknownAction,   // key does not name a joint action
  kDimension,       // payoff entry count or table shape mismatch
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::string key, const std::string& message)
      : Error(message), kind_(kind), key_(std::move(key)) {}

  ParseErrorKind kind() const { return kind_; }
  // Offending key or field, empty when not applicable.
  const std::string& key() const { return key_; }

 private:
  ParseErrorKind kind_;
  std::string key_;
};

// Game document:
//
//   {
//     "format_version": 1,
//     "universe": ["u1", ...],
//     "players": [{"name": "Player 1", "strategies": ["x1", ...]}, ...],
//     "payoffs": [{"x1|y1": ["u2", "u4"], ...}, ...]
//   }
//
// Two players with one payoff entry parse as a single-matrix game, two
// entries as a bimatrix game; more players need one entry per player.
AnyGame parse_game(std::string_view text);
TwoPersonSoftGame parse_two_person_game(std::string_view text);

// Canonical form: keys in row-major joint-action order, element lists in
// universe order, two-space indentation, trailing newline.
std::string serialize_game(const TwoPersonSoftGame& g);
std::string serialize_game(const NPersonSoftGame& g);
std::string serialize_game(const AnyGame& g);

// "x3|y2" style key.
std::string action_key(const std::vector<std::vector<std::string>>& labels, const JointAction& a);

// Soft set document: {"universe": [...], "parameters": [...],
// "approx": {"x1": ["u1", ...], ...}}. Empty-valued parameters are omitted
// from "approx" on output and read back as empty.
SoftSet parse_soft_set(std::string_view text);
std::string serialize_soft_set(const SoftSet& s);

std::string read_text_file(const std::string& path);

}  // namespace softgame
