// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "softgame/generator.hpp"
#include "softgame/io.hpp"
#include "softgame/softset.hpp"
#include "softgame/solvers.hpp"
#include "test_support.hpp"

namespace {

using namespace softgame;
using testing::U;

// Collects mismatches for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    expect(got == want, what);
  }
  bool passed() const { return failures_.empty(); }
  std::string detail() const {
    std::string s;
    for (std::size_t i = 0; i < failures_.size() && i < 4; ++i) s += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 4) s += "; +" + std::to_string(failures_.size() - 4) + " more";
    return s;
  }

 private:
  std::vector<std::string> failures_;
};

void ac1(Check& c) {
  const auto g = testing::load_two("table4.json");
  const auto& u = g.universe();
  const auto s = saddle_points(g, Player::kOne);
  c.expect(s.points.size() == 1, "exactly one saddle point");
  if (!s.empty()) {
    c.expect(s.points[0].row == 3 && s.points[0].col == 2, "saddle at (x4,y3)");
    c.equal(s.points[0].value, U(u, {4, 7, 8}), "saddle value");
  }
  c.equal(column_union(g, Player::kOne, 0), U(u, {2, 4, 5, 7, 8, 10}), "union y1");
  c.equal(column_union(g, Player::kOne, 1), U(u, {1, 4, 7, 8}), "union y2");
  c.equal(column_union(g, Player::kOne, 2), U(u, {4, 7, 8}), "union y3");
  c.equal(row_intersection(g, Player::kOne, 0), U(u, {4}), "cap x1");
  c.equal(row_intersection(g, Player::kOne, 1), U(u, {}), "cap x2");
  c.equal(row_intersection(g, Player::kOne, 2), U(u, {8}), "cap x3");
  c.equal(row_intersection(g, Player::kOne, 3), U(u, {4, 7, 8}), "cap x4");
}

void ac2(Check& c) {
  const auto g = testing::load_two("table4.json");
  const auto& u = g.universe();
  const auto v = game_value(g, Player::kOne);
  c.equal(v.lower, U(u, {4, 7, 8}), "lower value");
  c.equal(v.upper, U(u, {4, 7, 8}), "upper value");
  c.expect(v.value.has_value(), "value present");
}

void ac3(Check& c) {
  const auto u = Universe::numbered(10);
  const auto g = testing::single_matrix(u, testing::table4_modified_grid());
  c.expect(saddle_points(g, Player::kOne).empty(), "saddle list empty");
  const auto lo = lower_value(g, Player::kOne), up = upper_value(g, Player::kOne);
  c.expect(lo != up, "lower != upper (lower " + lo.to_string() + ", upper " + up.to_string() + ")");
}

void ac4(Check& c) {
  const auto g = testing::load_two("table5.json");
  const auto& u = g.universe();
  const auto t = eliminate(g);
  std::vector<std::string> order;
  for (const auto& s : t.steps) order.push_back(s.removed_label);
  c.equal(order, std::vector<std::string>{"y3", "x1", "x2", "y1"}, "deletion order");
  if (t.steps.size() >= 2) {
    c.expect(t.steps[0].side == Side::kColumns && t.steps[0].dominating_label == "y2", "step 1: y3 by y2");
    c.expect(t.steps[1].side == Side::kRows && t.steps[1].dominating_label == "x3", "step 2: x1 by x3");
  }
  c.expect(t.reduced.rows() == 1 && t.reduced.cols() == 1, "reduced to 1x1");
  if (t.reduced.rows() == 1 && t.reduced.cols() == 1) {
    c.expect(t.reduced.x_labels()[0] == "x3" && t.reduced.y_labels()[0] == "y2", "ends at (x3,y2)");
    c.equal(t.reduced.payoff(Player::kOne, {0, 0}), U(u, {4, 7, 8}), "value");
  }
}

void ac5(Check& c) {
  const auto g = testing::load_two("table8_9.json");
  const auto& u = g.universe();
  const auto n = nash_equilibria(g);
  c.expect(n.equilibria.size() == 1, "exactly one equilibrium");
  if (!n.empty()) {
    c.equal(n.equilibria[0].action, JointAction{0, 1}, "at (x1,y2)");
    c.equal(n.equilibria[0].payoffs[0], U(u, {1, 2, 4, 7, 8}), "Player 1 payoff");
    c.equal(n.equilibria[0].payoffs[1], U(u, {3, 5, 6, 9, 10}), "Player 2 payoff");
  }
  c.equal(oracle::nash_cells(g), std::vector<ActionPair>{{0, 1}}, "oracle agrees");
}

void ac6(Check& c) {
  const auto g = testing::load_two("table10.json");
  const auto& u = g.universe();
  const auto p = solve_pipeline(g);
  c.expect(!p.trace.steps.empty() && p.trace.steps[0].side == Side::kColumns &&
               p.trace.steps[0].removed_label == "y2",
           "first deletion is column y2");
  const auto& r = p.trace.reduced;
  c.expect(r.rows() == 3 && r.cols() == 2, "3x2 fixpoint");
  if (r.rows() == 3 && r.cols() == 2) {
    c.equal(column_union(r, Player::kOne, 0), U(u, {1, 2, 3, 4, 5, 7, 8}), "union y1");
    c.equal(column_union(r, Player::kOne, 1), U(u, {1, 2, 3}), "union y3");
    c.equal(row_intersection(r, Player::kOne, 0), U(u, {3}), "cap x1");
    c.equal(row_intersection(r, Player::kOne, 1), U(u, {3}), "cap x2");
    c.equal(row_intersection(r, Player::kOne, 2), U(u, {1, 2, 3}), "cap x3");
  }
  c.expect(p.saddle.points.size() == 1, "one saddle point");
  if (p.saddle.points.size() == 1) {
    const auto& s = p.saddle.points[0];
    c.expect(r.x_labels()[s.row] == "x3" && r.y_labels()[s.col] == "y3", "saddle at (x3,y3)");
    c.equal(s.value, U(u, {1, 2, 3}), "saddle value");
  }
}

void ac7(Check& c) {
  const auto g = testing::load_two("table2_3.json");
  c.expect(is_disjoint_game(g), "disjoint");
  c.expect(is_universal_game(g), "universal over a " + std::to_string(g.universe()->size()) + "-element universe");
  c.expect(complement_game(g, Player::kOne) == g.table(Player::kTwo), "complement of table 1 equals table 2");
  c.expect(difference_game(g, Player::kOne) == g.table(Player::kOne), "S1 \\ S2 = S1");
}

void ac8(Check& c) {
  for (Constraint mode : props::kModes) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto g = random_two_person_game(props::spec_for(seed, mode));
      for (const auto& f : props::check_game(g, mode)) {
        c.expect(false, std::string(props::mode_name(mode)) + " seed " + std::to_string(seed) + ": " + f);
      }
    }
  }
}

void ac9(Check& c) {
  for (const char* name : {"table2_3.json", "table4.json", "table5.json", "table8_9.json", "table10.json"}) {
    const auto text = read_text_file(testing::fixture_path(name));
    const AnyGame g = parse_game(text);
    c.expect(parse_game(serialize_game(g)) == g, std::string("round trip ") + name);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GenSpec spec{seed, 1 + seed % 16, {1 + seed % 6, 1 + (seed / 6) % 6}, props::kModes[seed % 4], {}};
    const AnyGame g = random_game(spec);
    c.expect(parse_game(serialize_game(g)) == g, "round trip generated seed " + std::to_string(seed));
  }
  const std::vector<std::pair<GenSpec, std::string>> golden{
      {{7, 10, {3, 3}, Constraint::kNone, {}}, "game_seed7_u10_3x3_none.json"},
      {{7, 10, {3, 3}, Constraint::kDisjointUniversal, {}}, "game_seed7_u10_3x3_disjoint_universal.json"},
      {{11, 6, {2, 2, 2}, Constraint::kNone, {}}, "game_seed11_u6_2x2x2_none.json"}};
  for (const auto& [spec, file] : golden) {
    const auto expected = read_text_file(testing::golden_path(file));
    const auto first = serialize_game(random_game(spec));
    const auto second = serialize_game(random_game(spec));
    c.expect(first == expected && second == expected, "golden " + file);
  }
}

void ac10(Check& c) {
  const auto u = Universe::numbered(4);
  const std::vector<std::string> e{"x1", "x2", "x3", "x4"};
  const SoftSet s(u, e, {U(u, {1, 2}), U(u, {1, 2, 4}), U(u, {}), U(u, {1, 2, 3, 4})});
  const SoftSet t(u, e, {U(u, {1, 2}), U(u, {1, 2, 3}), U(u, {1, 2}), U(u, {1})});
  c.equal(softset_union(s, t), SoftSet(u, e, {U(u, {1, 2}), U(u, {1, 2, 3, 4}), U(u, {1, 2}), U(u, {1, 2, 3, 4})}),
          "S union T");
  c.equal(softset_intersect(s, t), SoftSet(u, e, {U(u, {1, 2}), U(u, {1, 2}), U(u, {}), U(u, {1})}),
          "S intersect T");
  c.equal(softset_complement(s), SoftSet(u, e, {U(u, {3, 4}), U(u, {3}), U(u, {1, 2, 3, 4}), U(u, {})}),
          "complement of S");

  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SplitMix64 rng(seed);
    const auto uu = Universe::numbered(1 + seed % 16);
    const auto params = testing::labels("e", 1 + seed % 5);
    auto draw = [&] {
      std::vector<Subset> v;
      for (std::size_t i = 0; i < params.size(); ++i) v.push_back(random_subset(rng, uu));
      return SoftSet(uu, params, std::move(v));
    };
    const auto a = draw(), b = draw(), d = draw();
    const std::string at = " (seed " + std::to_string(seed) + ")";
    c.equal(softset_complement(softset_union(a, b)),
            softset_intersect(softset_complement(a), softset_complement(b)), "De Morgan union" + at);
    c.equal(softset_complement(softset_intersect(a, b)),
            softset_union(softset_complement(a), softset_complement(b)), "De Morgan intersection" + at);
    c.equal(softset_union(a, softset_intersect(b, d)),
            softset_intersect(softset_union(a, b), softset_union(a, d)), "distributivity" + at);
    c.equal(softset_union(a, softset_intersect(a, b)), a, "absorption" + at);
    c.equal(softset_union(a, b), softset_union(b, a), "commutativity" + at);
    c.equal(softset_intersect(softset_intersect(a, b), d), softset_intersect(a, softset_intersect(b, d)),
            "associativity" + at);
    c.equal(softset_complement(softset_complement(a)), a, "involution" + at);
  }
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "Table 4 saddle point, column unions and row intersections", ac1},
      {"AC2", "Table 4 lower = upper = {u4,u7,u8}", ac2},
      {"AC3", "modified Table 4: no saddle and lower != upper", ac3},
      {"AC4", "Table 5 elimination walkthrough", ac4},
      {"AC5", "Tables 8+9 unique soft Nash equilibrium", ac5},
      {"AC6", "Table 10 elimination then saddle", ac6},
      {"AC7", "Tables 2+3 disjoint and universal classification", ac7},
      {"AC8", "property suite, 1000 seeds per constraint mode", ac8},
      {"AC9", "parse/serialize round trip and golden generator output", ac9},
      {"AC10", "soft set algebra and lattice laws", ac10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (c.passed() ? "PASS " : "FAIL ") << cr.id << "  " << cr.title << "  (" << ms << " ms)";
    if (!c.passed()) {
      ++failed;
      std::cout << "\n       " << c.detail();
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
