#include "softgame/game.hpp"

#include <numeric>
#include <utility>

#include "softgame/error.hpp"

namespace softgame {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void check_labels(const std::vector<std::string>& labels, const std::string& who) {
  if (labels.empty()) throw InvalidGame(who + " needs at least one strategy");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) throw InvalidGame(who + " has an empty strategy label");
    if (labels[i].find('|') != std::string::npos) {
      throw InvalidGame(who + " strategy label '" + labels[i] + "' contains '|'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) throw InvalidGame(who + " has duplicate strategy '" + labels[i] + "'");
    }
  }
}

void require_compatible(const PayoffTable& a, const PayoffTable& b) {
  if (!same_universe(a.universe(), b.universe())) throw IncompatibleOperands("tables over different universes");
  if (a.dims() != b.dims()) throw IncompatibleOperands("tables with different dimensions");
}

template <typename Op>
PayoffTable cellwise(const PayoffTable& a, const PayoffTable& b, Op op) {
  require_compatible(a, b);
  std::vector<Subset> out;
  out.reserve(a.cell_count());
  for (std::size_t i = 0; i < a.cell_count(); ++i) out.push_back(op(a.cell(i), b.cell(i)));
  return PayoffTable(a.universe(), a.dims(), std::move(out));
}

}  // namespace

// PayoffTable

PayoffTable::PayoffTable(UniversePtr universe, std::vector<std::size_t> dims)
    : universe_(std::move(universe)), dims_(std::move(dims)) {
  if (!universe_) throw InvalidGame("payoff table requires a universe");
  if (dims_.empty()) throw InvalidGame("payoff table needs at least one player");
  for (std::size_t d : dims_) {
    if (d == 0) throw InvalidGame("every player needs at least one strategy");
  }
  cells_.assign(product(dims_), Subset(universe_));
}

PayoffTable::PayoffTable(UniversePtr universe, std::vector<std::size_t> dims, std::vector<Subset> cells)
    : PayoffTable(std::move(universe), std::move(dims)) {
  if (cells.size() != cells_.size()) {
    throw InvalidGame("payoff table expects " + std::to_string(cells_.size()) + " cells, got " +
                      std::to_string(cells.size()));
  }
  for (const auto& c : cells) {
    if (!same_universe(c.universe(), universe_)) throw IncompatibleOperands("payoff cell over a different universe");
  }
  cells_ = std::move(cells);
}

PayoffTable PayoffTable::filled(UniversePtr universe, std::vector<std::size_t> dims, const Subset& value) {
  PayoffTable t(std::move(universe), std::move(dims));
  if (!same_universe(value.universe(), t.universe_)) throw IncompatibleOperands("fill value over a different universe");
  for (auto& c : t.cells_) c = value;
  return t;
}

std::size_t PayoffTable::flat_index(const JointAction& action) const {
  if (action.size() != dims_.size()) {
    throw OutOfRange("joint action has " + std::to_string(action.size()) + " entries, expected " +
                     std::to_string(dims_.size()));
  }
  std::size_t flat = 0;
  for (std::size_t p = 0; p < dims_.size(); ++p) {
    if (action[p] >= dims_[p]) {
      throw OutOfRange("strategy index " + std::to_string(action[p]) + " out of range for player " +
                       std::to_string(p + 1));
    }
    flat = flat * dims_[p] + action[p];
  }
  return flat;
}

JointAction PayoffTable::action_at(std::size_t flat) const {
  if (flat >= cells_.size()) throw OutOfRange("cell index out of range");
  JointAction a(dims_.size());
  for (std::size_t p = dims_.size(); p-- > 0;) {
    a[p] = flat % dims_[p];
    flat /= dims_[p];
  }
  return a;
}

const Subset& PayoffTable::at(std::size_t row, std::size_t col) const { return cells_[flat_index({row, col})]; }

void PayoffTable::set(const JointAction& action, Subset value) {
  if (!same_universe(value.universe(), universe_)) throw IncompatibleOperands("payoff cell over a different universe");
  cells_[flat_index(action)] = std::move(value);
}

bool PayoffTable::operator==(const PayoffTable& other) const {
  return same_universe(universe_, other.universe_) && dims_ == other.dims_ && cells_ == other.cells_;
}

PayoffTable table_union(const PayoffTable& a, const PayoffTable& b) { return cellwise(a, b, subset_union); }

PayoffTable table_intersect(const PayoffTable& a, const PayoffTable& b) { return cellwise(a, b, subset_intersect); }

PayoffTable table_difference(const PayoffTable& a, const PayoffTable& b) { return cellwise(a, b, subset_difference); }

PayoffTable table_complement(const PayoffTable& a) {
  std::vector<Subset> out;
  out.reserve(a.cell_count());
  for (const auto& c : a.cells()) out.push_back(subset_complement(c));
  return PayoffTable(a.universe(), a.dims(), std::move(out));
}

PayoffTable empty_table(UniversePtr universe, std::vector<std::size_t> dims) {
  return PayoffTable(std::move(universe), std::move(dims));
}

PayoffTable full_table(UniversePtr universe, std::vector<std::size_t> dims) {
  auto full = Subset::full(universe);
  return PayoffTable::filled(std::move(universe), std::move(dims), full);
}

bool is_all_empty(const PayoffTable& t) {
  for (const auto& c : t.cells()) {
    if (!c.is_empty()) return false;
  }
  return true;
}

bool is_all_full(const PayoffTable& t) {
  for (const auto& c : t.cells()) {
    if (!c.is_full()) return false;
  }
  return true;
}

// TwoPersonSoftGame

TwoPersonSoftGame::TwoPersonSoftGame(UniversePtr universe, std::vector<std::string> x_labels,
                                     std::vector<std::string> y_labels, PayoffTable table1,
                                     std::optional<PayoffTable> table2, std::vector<std::string> player_names)
    : universe_(std::move(universe)),
      x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      table1_(std::move(table1)),
      table2_(std::move(table2)),
      player_names_(std::move(player_names)) {
  if (!universe_) throw InvalidGame("game requires a universe");
  check_labels(x_labels_, "Player 1");
  check_labels(y_labels_, "Player 2");
  if (player_names_.size() != 2) throw InvalidGame("two-person game needs exactly two player names");
  const std::vector<std::size_t> dims{rows(), cols()};
  auto check_table = [&](const PayoffTable& t, const char* which) {
    if (!same_universe(t.universe(), universe_)) throw IncompatibleOperands(std::string(which) + " uses a different universe");
    if (t.dims() != dims) throw InvalidGame(std::string(which) + " dimensions do not match the strategy sets");
  };
  check_table(table1_, "table of Player 1");
  if (table2_) check_table(*table2_, "table of Player 2");
}

const PayoffTable& TwoPersonSoftGame::table(Player k) const {
  if (k == Player::kOne) return table1_;
  if (!table2_) throw ModeError("single-matrix game has no table for Player 2");
  return *table2_;
}

const Subset& TwoPersonSoftGame::payoff(Player k, ActionPair a) const { return table(k).at(a.row, a.col); }

TwoPersonSoftGame TwoPersonSoftGame::restrict(const std::vector<std::size_t>& rows,
                                              const std::vector<std::size_t>& cols) const {
  std::vector<std::string> xs, ys;
  for (std::size_t r : rows) xs.push_back(x_labels_.at(r));
  for (std::size_t c : cols) ys.push_back(y_labels_.at(c));
  auto sub = [&](const PayoffTable& t) {
    std::vector<Subset> cells;
    cells.reserve(rows.size() * cols.size());
    for (std::size_t r : rows) {
      for (std::size_t c : cols) cells.push_back(t.at(r, c));
    }
    return PayoffTable(universe_, {rows.size(), cols.size()}, std::move(cells));
  };
  std::optional<PayoffTable> t2;
  if (table2_) t2 = sub(*table2_);
  return TwoPersonSoftGame(universe_, std::move(xs), std::move(ys), sub(table1_), std::move(t2), player_names_);
}

bool TwoPersonSoftGame::operator==(const TwoPersonSoftGame& other) const {
  return same_universe(universe_, other.universe_) && x_labels_ == other.x_labels_ && y_labels_ == other.y_labels_ &&
         table1_ == other.table1_ && table2_ == other.table2_ && player_names_ == other.player_names_;
}

// NPersonSoftGame

NPersonSoftGame::NPersonSoftGame(UniversePtr universe, std::vector<std::vector<std::string>> strategy_labels,
                                 std::vector<PayoffTable> tables, std::vector<std::string> player_names)
    : universe_(std::move(universe)),
      labels_(std::move(strategy_labels)),
      tables_(std::move(tables)),
      player_names_(std::move(player_names)) {
  if (!universe_) throw InvalidGame("game requires a universe");
  if (labels_.size() < 2) throw InvalidGame("n-person game needs at least two players");
  if (player_names_.empty()) {
    for (std::size_t k = 1; k <= labels_.size(); ++k) player_names_.push_back("Player " + std::to_string(k));
  }
  if (player_names_.size() != labels_.size()) throw InvalidGame("one name per player required");
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    check_labels(labels_[k], "Player " + std::to_string(k + 1));
    dims.push_back(labels_[k].size());
  }
  if (tables_.size() != labels_.size()) {
    throw InvalidGame("n-person game needs one payoff table per player");
  }
  for (std::size_t k = 0; k < tables_.size(); ++k) {
    if (!same_universe(tables_[k].universe(), universe_)) {
      throw IncompatibleOperands("table of Player " + std::to_string(k + 1) + " uses a different universe");
    }
    if (tables_[k].dims() != dims) {
      throw InvalidGame("table of Player " + std::to_string(k + 1) + " dimensions do not match the strategy sets");
    }
  }
}

const PayoffTable& NPersonSoftGame::table(std::size_t player) const {
  if (player >= tables_.size()) throw OutOfRange("player index " + std::to_string(player) + " out of range");
  return tables_[player];
}

const Subset& NPersonSoftGame::payoff(std::size_t player, const JointAction& a) const { return table(player).at(a); }

bool NPersonSoftGame::operator==(const NPersonSoftGame& other) const {
  return same_universe(universe_, other.universe_) && labels_ == other.labels_ && tables_ == other.tables_ &&
         player_names_ == other.player_names_;
}

NPersonSoftGame to_nperson(const TwoPersonSoftGame& g) {
  return NPersonSoftGame(g.universe(), {g.x_labels(), g.y_labels()}, {g.table(Player::kOne), g.table(Player::kTwo)},
                         g.player_names());
}

// Predicates

bool is_disjoint_game(const TwoPersonSoftGame& g) {
  const auto& t1 = g.table(Player::kOne);
  const auto& t2 = g.table(Player::kTwo);
  for (std::size_t i = 0; i < t1.cell_count(); ++i) {
    if (!subset_intersect(t1.cell(i), t2.cell(i)).is_empty()) return false;
  }
  return true;
}

bool is_universal_game(const TwoPersonSoftGame& g) {
  const auto& t1 = g.table(Player::kOne);
  const auto& t2 = g.table(Player::kTwo);
  for (std::size_t i = 0; i < t1.cell_count(); ++i) {
    if (!subset_union(t1.cell(i), t2.cell(i)).is_full()) return false;
  }
  return true;
}

bool is_empty_game(const TwoPersonSoftGame& g, Player k) { return is_all_empty(g.table(k)); }

bool is_full_game(const TwoPersonSoftGame& g, Player k) { return is_all_full(g.table(k)); }

bool is_rational(const TwoPersonSoftGame& g, Player k) {
  const auto& cells = g.table(k).cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = i + 1; j < cells.size(); ++j) {
      if (!is_subset(cells[i], cells[j]) && !is_subset(cells[j], cells[i])) return false;
    }
  }
  return true;
}

PreferenceOutcome prefers(const TwoPersonSoftGame& g, Player k, ActionPair a, ActionPair b) {
  const Subset& pa = g.payoff(k, a);
  const Subset& pb = g.payoff(k, b);
  const bool a_in_b = is_subset(pa, pb);
  const bool b_in_a = is_subset(pb, pa);
  if (a_in_b && b_in_a) return PreferenceOutcome::kIndifferent;
  if (b_in_a) return PreferenceOutcome::kStrictlyPrefers;
  if (a_in_b) return PreferenceOutcome::kStrictlyDisprefers;
  return PreferenceOutcome::kIncomparable;
}

bool weakly_prefers(const TwoPersonSoftGame& g, Player k, ActionPair a, ActionPair b) {
  return is_subset(g.payoff(k, b), g.payoff(k, a));
}

std::string_view to_string(PreferenceOutcome p) {
  switch (p) {
    case PreferenceOutcome::kStrictlyPrefers: return "strictly-prefers";
    case PreferenceOutcome::kIndifferent: return "indifferent";
    case PreferenceOutcome::kStrictlyDisprefers: return "strictly-disprefers";
    case PreferenceOutcome::kIncomparable: return "incomparable";
  }
  return "incomparable";
}

std::vector<ActionPair> optimal_actions(const TwoPersonSoftGame& g, Player k) {
  const auto& t = g.table(k);
  Subset top(g.universe());
  for (const auto& c : t.cells()) top = subset_union(top, c);
  // A cell contains every payoff iff it equals their union.
  std::vector<ActionPair> out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (t.at(r, c) == top) out.push_back({r, c});
    }
  }
  return out;
}

PayoffTable complement_game(const TwoPersonSoftGame& g, Player k) { return table_complement(g.table(k)); }

PayoffTable difference_game(const TwoPersonSoftGame& g, Player minuend) {
  const Player other = minuend == Player::kOne ? Player::kTwo : Player::kOne;
  if (!g.is_bimatrix()) throw ModeError("difference needs both players' tables");
  return table_difference(g.table(minuend), g.table(other));
}

}  // namespace softgame
