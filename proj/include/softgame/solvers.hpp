#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "softgame/game.hpp"

namespace softgame {

// ---------------------------------------------------------------------------
// Saddle points and values
// ---------------------------------------------------------------------------

// Union of column `col` of player k's table.
Subset column_union(const TwoPersonSoftGame& g, Player k, std::size_t col);
// Intersection of row `row` of player k's table.
Subset row_intersection(const TwoPersonSoftGame& g, Player k, std::size_t row);

struct SaddlePoint {
  std::size_t row = 0;
  std::size_t col = 0;
  Subset value;
};

struct SaddleResult {
  std::vector<SaddlePoint> points;  // row-major

  bool empty() const { return points.empty(); }
};

// Cells (i, j) whose payoff equals both the union of column j and the
// intersection of row i.
SaddleResult saddle_points(const TwoPersonSoftGame& g, Player k);

// Intersection over columns of the column unions.
Subset upper_value(const TwoPersonSoftGame& g, Player k);
// Union over rows of the row intersections.
Subset lower_value(const TwoPersonSoftGame& g, Player k);

struct ValueReport {
  Subset lower;
  Subset upper;
  std::optional<Subset> value;  // set iff lower == upper
};

ValueReport game_value(const TwoPersonSoftGame& g, Player k);

// ---------------------------------------------------------------------------
// Dominance and elimination
// ---------------------------------------------------------------------------

enum class Side { kRows, kColumns };

struct Domination {
  std::size_t dominated = 0;
  std::size_t dominating = 0;

  bool operator==(const Domination&) const = default;
};

// All (dominated, dominating) pairs on one side, ordered by dominated then
// dominating index.
//
// Rows compare Player 1's table: row i dominates row r when every cell of i
// contains the matching cell of r. Columns compare Player 2's table the same
// way in bimatrix mode; in single-matrix mode column j dominates column s
// when every cell of j is contained in the matching cell of s (Player 2
// wants Player 1 to receive less). A pair qualifies when the containment is
// strict somewhere, or when the two strategies are identical and the
// dominating one has the lower index.
std::vector<Domination> dominated_strategies(const TwoPersonSoftGame& g, Side side);

struct EliminationStep {
  Side side = Side::kRows;  // kRows: Player 1 lost a strategy
  std::size_t removed = 0;  // index in the original game
  std::string removed_label;
  std::size_t dominating = 0;  // index in the original game
  std::string dominating_label;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  std::vector<std::size_t> kept_rows;  // original indices, ascending
  std::vector<std::size_t> kept_cols;
  TwoPersonSoftGame reduced;
};

// Iterated deletion of dominated strategies until fixpoint. Each pass
// deletes one strategy: the lowest-index dominated column if there is one,
// else the lowest-index dominated row, each time against its lowest-index
// dominator.
EliminationTrace eliminate(const TwoPersonSoftGame& g);

// Applies the recorded deletions to the original game.
TwoPersonSoftGame replay(const TwoPersonSoftGame& original, const std::vector<EliminationStep>& steps);

// ---------------------------------------------------------------------------
// Nash equilibria
// ---------------------------------------------------------------------------

struct NashPoint {
  JointAction action;
  std::vector<Subset> payoffs;  // one per player
};

struct NashResult {
  std::vector<NashPoint> equilibria;  // lexicographic (row-major) order

  bool empty() const { return equilibria.empty(); }
};

// Pure soft Nash equilibria of a bimatrix game. Throws ModeError in
// single-matrix mode.
NashResult nash_equilibria(const TwoPersonSoftGame& g);

// True iff player k's payoff with `strat` contains the payoff with `other`
// against every combination of the other players' strategies.
bool nps_dominated(const NPersonSoftGame& g, std::size_t k, std::size_t strat, std::size_t other);

NashResult nps_nash_equilibria(const NPersonSoftGame& g);

// ---------------------------------------------------------------------------
// Elimination followed by saddle point and value analysis
// ---------------------------------------------------------------------------

struct PipelineReport {
  EliminationTrace trace;
  SaddleResult saddle;  // indices refer to the reduced game
  ValueReport values;
};

PipelineReport solve_pipeline(const TwoPersonSoftGame& g, Player k = Player::kOne);

}  // namespace softgame
