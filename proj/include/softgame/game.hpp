#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "softgame/softset.hpp"

namespace softgame {

// Per-player strategy indices, player order.
using JointAction = std::vector<std::size_t>;

// Cell of a two-person game: Player 1's strategy (row) and Player 2's
// strategy (column).
struct ActionPair {
  std::size_t row = 0;
  std::size_t col = 0;

  bool operator==(const ActionPair&) const = default;
};

// Total mapping from joint actions to subsets of one universe. Cells are
// stored row-major (last player's index varies fastest).
class PayoffTable {
 public:
  PayoffTable(UniversePtr universe, std::vector<std::size_t> dims);
  PayoffTable(UniversePtr universe, std::vector<std::size_t> dims, std::vector<Subset> cells);

  static PayoffTable filled(UniversePtr universe, std::vector<std::size_t> dims, const Subset& value);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t player_count() const { return dims_.size(); }
  std::size_t cell_count() const { return cells_.size(); }

  std::size_t flat_index(const JointAction& action) const;
  JointAction action_at(std::size_t flat) const;

  const Subset& at(const JointAction& action) const { return cells_[flat_index(action)]; }
  const Subset& at(std::size_t row, std::size_t col) const;
  const Subset& cell(std::size_t flat) const { return cells_.at(flat); }
  const std::vector<Subset>& cells() const { return cells_; }
  void set(const JointAction& action, Subset value);

  bool operator==(const PayoffTable& other) const;

 private:
  UniversePtr universe_;
  std::vector<std::size_t> dims_;
  std::vector<Subset> cells_;
};

// Cellwise table algebra. Binary forms require equal dims and universe.
PayoffTable table_union(const PayoffTable& a, const PayoffTable& b);
PayoffTable table_intersect(const PayoffTable& a, const PayoffTable& b);
PayoffTable table_difference(const PayoffTable& a, const PayoffTable& b);
PayoffTable table_complement(const PayoffTable& a);
// The all-∅ and all-U tables.
PayoffTable empty_table(UniversePtr universe, std::vector<std::size_t> dims);
PayoffTable full_table(UniversePtr universe, std::vector<std::size_t> dims);
bool is_all_empty(const PayoffTable& t);
bool is_all_full(const PayoffTable& t);

enum class Player { kOne = 1, kTwo = 2 };

// Single-matrix games carry only Player 1's table; Player 2 is the
// adversary who prefers smaller Player-1 payoffs.
enum class GameMode { kSingleMatrix, kBimatrix };

class TwoPersonSoftGame {
 public:
  TwoPersonSoftGame(UniversePtr universe, std::vector<std::string> x_labels, std::vector<std::string> y_labels,
                    PayoffTable table1, std::optional<PayoffTable> table2 = std::nullopt,
                    std::vector<std::string> player_names = {"Player 1", "Player 2"});

  const UniversePtr& universe() const { return universe_; }
  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& y_labels() const { return y_labels_; }
  const std::vector<std::string>& player_names() const { return player_names_; }
  std::size_t rows() const { return x_labels_.size(); }
  std::size_t cols() const { return y_labels_.size(); }
  GameMode mode() const { return table2_ ? GameMode::kBimatrix : GameMode::kSingleMatrix; }
  bool is_bimatrix() const { return table2_.has_value(); }

  // Throws ModeError for Player 2 in single-matrix mode.
  const PayoffTable& table(Player k) const;
  const Subset& payoff(Player k, ActionPair a) const;

  // Sub-game keeping the listed rows and columns, in the given order.
  TwoPersonSoftGame restrict(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  bool operator==(const TwoPersonSoftGame& other) const;

 private:
  UniversePtr universe_;
  std::vector<std::string> x_labels_;
  std::vector<std::string> y_labels_;
  PayoffTable table1_;
  std::optional<PayoffTable> table2_;
  std::vector<std::string> player_names_;
};

class NPersonSoftGame {
 public:
  NPersonSoftGame(UniversePtr universe, std::vector<std::vector<std::string>> strategy_labels,
                  std::vector<PayoffTable> tables, std::vector<std::string> player_names = {});

  const UniversePtr& universe() const { return universe_; }
  std::size_t player_count() const { return labels_.size(); }
  const std::vector<std::vector<std::string>>& strategy_labels() const { return labels_; }
  const std::vector<std::string>& player_names() const { return player_names_; }
  const std::vector<std::size_t>& dims() const { return tables_.front().dims(); }
  const PayoffTable& table(std::size_t player) const;
  const Subset& payoff(std::size_t player, const JointAction& a) const;

  bool operator==(const NPersonSoftGame& other) const;

 private:
  UniversePtr universe_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<PayoffTable> tables_;
  std::vector<std::string> player_names_;
};

using AnyGame = std::variant<TwoPersonSoftGame, NPersonSoftGame>;

// Bimatrix two-person game viewed as a 2-player n-person game.
NPersonSoftGame to_nperson(const TwoPersonSoftGame& g);

// Classification predicates. Disjoint/universal need both tables.
bool is_disjoint_game(const TwoPersonSoftGame& g);
bool is_universal_game(const TwoPersonSoftGame& g);
bool is_empty_game(const TwoPersonSoftGame& g, Player k);
bool is_full_game(const TwoPersonSoftGame& g, Player k);

// Every pair of player k's payoffs is comparable under inclusion.
bool is_rational(const TwoPersonSoftGame& g, Player k);

// How player k ranks action a against action b.
enum class PreferenceOutcome {
  kStrictlyPrefers,     // payoff(a) ⊋ payoff(b)
  kIndifferent,         // payoff(a) = payoff(b)
  kStrictlyDisprefers,  // payoff(a) ⊊ payoff(b)
  kIncomparable,
};

PreferenceOutcome prefers(const TwoPersonSoftGame& g, Player k, ActionPair a, ActionPair b);
// payoff(a) ⊇ payoff(b): prefers a or is indifferent.
bool weakly_prefers(const TwoPersonSoftGame& g, Player k, ActionPair a, ActionPair b);
std::string_view to_string(PreferenceOutcome p);

// Actions whose payoff contains every other payoff, row-major. Possibly empty.
std::vector<ActionPair> optimal_actions(const TwoPersonSoftGame& g, Player k);

PayoffTable complement_game(const TwoPersonSoftGame& g, Player k);
// Table of `minuend` minus the other player's table, cellwise.
PayoffTable difference_game(const TwoPersonSoftGame& g, Player minuend = Player::kOne);

}  // namespace softgame
