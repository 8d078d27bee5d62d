#include "softgame/solvers.hpp"

#include <algorithm>
#include <utility>

#include "softgame/error.hpp"

namespace softgame {

Subset column_union(const TwoPersonSoftGame& g, Player k, std::size_t col) {
  if (col >= g.cols()) throw OutOfRange("column index " + std::to_string(col) + " out of range");
  const auto& t = g.table(k);
  Subset acc(g.universe());
  for (std::size_t r = 0; r < g.rows(); ++r) acc = subset_union(acc, t.at(r, col));
  return acc;
}

Subset row_intersection(const TwoPersonSoftGame& g, Player k, std::size_t row) {
  if (row >= g.rows()) throw OutOfRange("row index " + std::to_string(row) + " out of range");
  const auto& t = g.table(k);
  Subset acc = Subset::full(g.universe());
  for (std::size_t c = 0; c < g.cols(); ++c) acc = subset_intersect(acc, t.at(row, c));
  return acc;
}

SaddleResult saddle_points(const TwoPersonSoftGame& g, Player k) {
  std::vector<Subset> unions, inters;
  for (std::size_t c = 0; c < g.cols(); ++c) unions.push_back(column_union(g, k, c));
  for (std::size_t r = 0; r < g.rows(); ++r) inters.push_back(row_intersection(g, k, r));

  SaddleResult out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      const Subset& cell = g.payoff(k, {r, c});
      if (cell == unions[c] && cell == inters[r]) out.points.push_back({r, c, cell});
    }
  }
  return out;
}

Subset upper_value(const TwoPersonSoftGame& g, Player k) {
  Subset acc = Subset::full(g.universe());
  for (std::size_t c = 0; c < g.cols(); ++c) acc = subset_intersect(acc, column_union(g, k, c));
  return acc;
}

Subset lower_value(const TwoPersonSoftGame& g, Player k) {
  Subset acc(g.universe());
  for (std::size_t r = 0; r < g.rows(); ++r) acc = subset_union(acc, row_intersection(g, k, r));
  return acc;
}

ValueReport game_value(const TwoPersonSoftGame& g, Player k) {
  ValueReport report{lower_value(g, k), upper_value(g, k), std::nullopt};
  if (report.lower == report.upper) report.value = report.lower;
  return report;
}

namespace {

// Containment of one strategy's payoff vector in another's. `dom` is the
// candidate dominator.
enum class Containment { kNone, kEqual, kStrict };

template <typename CellOf>
Containment compare_strategies(std::size_t n, CellOf cell_of, std::size_t dom, std::size_t sub, bool dom_is_superset) {
  bool strict = false;
  for (std::size_t x = 0; x < n; ++x) {
    const Subset& d = cell_of(dom, x);
    const Subset& s = cell_of(sub, x);
    const bool ok = dom_is_superset ? is_subset(s, d) : is_subset(d, s);
    if (!ok) return Containment::kNone;
    if (!(d == s)) strict = true;
  }
  return strict ? Containment::kStrict : Containment::kEqual;
}

}  // namespace

std::vector<Domination> dominated_strategies(const TwoPersonSoftGame& g, Side side) {
  std::vector<Domination> out;
  if (side == Side::kRows) {
    const auto& t = g.table(Player::kOne);
    auto row_cell = [&](std::size_t r, std::size_t c) -> const Subset& { return t.at(r, c); };
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t i = 0; i < g.rows(); ++i) {
        if (i == r) continue;
        auto c = compare_strategies(g.cols(), row_cell, i, r, true);
        if (c == Containment::kStrict || (c == Containment::kEqual && i < r)) out.push_back({r, i});
      }
    }
    return out;
  }

  // Player 2 maximizes its own table in bimatrix mode and minimizes
  // Player 1's table in single-matrix mode.
  const bool bimatrix = g.is_bimatrix();
  const auto& t = g.table(bimatrix ? Player::kTwo : Player::kOne);
  auto col_cell = [&](std::size_t c, std::size_t r) -> const Subset& { return t.at(r, c); };
  for (std::size_t s = 0; s < g.cols(); ++s) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      if (j == s) continue;
      auto c = compare_strategies(g.rows(), col_cell, j, s, bimatrix);
      if (c == Containment::kStrict || (c == Containment::kEqual && j < s)) out.push_back({s, j});
    }
  }
  return out;
}

EliminationTrace eliminate(const TwoPersonSoftGame& g) {
  std::vector<std::size_t> rows(g.rows()), cols(g.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;

  std::vector<EliminationStep> steps;
  TwoPersonSoftGame current = g;
  for (;;) {
    // dominated_strategies orders by dominated index then dominator, so the
    // first entry is the deletion prescribed by the scan order.
    if (auto doms = dominated_strategies(current, Side::kColumns); !doms.empty()) {
      const auto [s, j] = doms.front();
      steps.push_back({Side::kColumns, cols[s], g.y_labels()[cols[s]], cols[j], g.y_labels()[cols[j]]});
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(s));
    } else if (auto rdoms = dominated_strategies(current, Side::kRows); !rdoms.empty()) {
      const auto [r, i] = rdoms.front();
      steps.push_back({Side::kRows, rows[r], g.x_labels()[rows[r]], rows[i], g.x_labels()[rows[i]]});
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
    } else {
      break;
    }
    current = g.restrict(rows, cols);
  }
  return EliminationTrace{std::move(steps), std::move(rows), std::move(cols), std::move(current)};
}

TwoPersonSoftGame replay(const TwoPersonSoftGame& original, const std::vector<EliminationStep>& steps) {
  std::vector<std::size_t> rows(original.rows()), cols(original.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  for (const auto& step : steps) {
    auto& v = step.side == Side::kRows ? rows : cols;
    auto it = std::find(v.begin(), v.end(), step.removed);
    if (it == v.end()) throw InvalidGame("replay removes strategy " + step.removed_label + " twice");
    v.erase(it);
  }
  return original.restrict(rows, cols);
}

NashResult nash_equilibria(const TwoPersonSoftGame& g) {
  if (!g.is_bimatrix()) throw ModeError("soft Nash equilibria need both players' tables");
  // f1(x*,y*) contains every f1(x,y*) iff it equals the column union of
  // table 1; symmetrically for table 2 and the row union.
  const auto& t1 = g.table(Player::kOne);
  const auto& t2 = g.table(Player::kTwo);
  std::vector<Subset> best1(g.cols(), Subset(g.universe()));
  std::vector<Subset> best2(g.rows(), Subset(g.universe()));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      best1[c] = subset_union(best1[c], t1.at(r, c));
      best2[r] = subset_union(best2[r], t2.at(r, c));
    }
  }
  NashResult out;
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      if (t1.at(r, c) == best1[c] && t2.at(r, c) == best2[r]) {
        out.equilibria.push_back({{r, c}, {t1.at(r, c), t2.at(r, c)}});
      }
    }
  }
  return out;
}

namespace {

// Advances `a` to the next joint action in lexicographic order, skipping
// position `fixed`. Returns false after the last one.
bool next_action(JointAction& a, const std::vector<std::size_t>& dims, std::size_t fixed) {
  for (std::size_t p = dims.size(); p-- > 0;) {
    if (p == fixed) continue;
    if (++a[p] < dims[p]) return true;
    a[p] = 0;
  }
  return false;
}

}  // namespace

bool nps_dominated(const NPersonSoftGame& g, std::size_t k, std::size_t strat, std::size_t other) {
  if (k >= g.player_count()) throw OutOfRange("player index " + std::to_string(k) + " out of range");
  const auto& dims = g.dims();
  if (strat >= dims[k] || other >= dims[k]) throw OutOfRange("strategy index out of range");
  const auto& t = g.table(k);
  JointAction a(dims.size(), 0);
  do {
    JointAction b = a;
    a[k] = strat;
    b[k] = other;
    if (!is_subset(t.at(b), t.at(a))) return false;
  } while (next_action(a, dims, k));
  return true;
}

NashResult nps_nash_equilibria(const NPersonSoftGame& g) {
  const auto& dims = g.dims();
  const std::size_t n = g.player_count();
  NashResult out;
  JointAction a(n, 0);
  const std::size_t none = n;  // no fixed position
  do {
    bool stable = true;
    for (std::size_t k = 0; k < n && stable; ++k) {
      const Subset& here = g.payoff(k, a);
      JointAction dev = a;
      for (std::size_t x = 0; x < dims[k] && stable; ++x) {
        dev[k] = x;
        if (!is_subset(g.payoff(k, dev), here)) stable = false;
      }
    }
    if (stable) {
      NashPoint p{a, {}};
      for (std::size_t k = 0; k < n; ++k) p.payoffs.push_back(g.payoff(k, a));
      out.equilibria.push_back(std::move(p));
    }
  } while (next_action(a, dims, none));
  return out;
}

PipelineReport solve_pipeline(const TwoPersonSoftGame& g, Player k) {
  auto trace = eliminate(g);
  auto saddle = saddle_points(trace.reduced, k);
  auto values = game_value(trace.reduced, k);
  return PipelineReport{std::move(trace), std::move(saddle), std::move(values)};
}

}  // namespace softgame
