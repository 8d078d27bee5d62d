#include "softgame/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "softgame/error.hpp"
#include "softgame/generator.hpp"
#include "softgame/io.hpp"
#include "softgame/solvers.hpp"

namespace softgame::cli {

using json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx.get(), hash, &len) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(hash[i]);
  return os.str();
}

namespace {

// Thrown for a method/property that does not apply to the loaded game.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class Style {
 public:
  Style() {
    const char* env = std::getenv("SOFTGAME_COLOR");
    enabled_ = env != nullptr && std::string(env) == "1";
  }
  std::string heading(const std::string& s) const { return enabled_ ? "\x1b[1m" + s + "\x1b[0m" : s; }

 private:
  bool enabled_ = false;
};

std::string dims_string(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "x" : "") + std::to_string(dims[i]);
  return s;
}

json subset_json(const Subset& s) { return s.names(); }

Player to_player(int k) { return k == 2 ? Player::kTwo : Player::kOne; }

const TwoPersonSoftGame& two_person(const AnyGame& g, const std::string& what) {
  if (const auto* two = std::get_if<TwoPersonSoftGame>(&g)) return *two;
  throw NotApplicable(what + " is defined for two-person games only");
}

std::string cell_label(const TwoPersonSoftGame& g, std::size_t r, std::size_t c) {
  return "(" + g.x_labels()[r] + ", " + g.y_labels()[c] + ")";
}

std::string joint_label(const std::vector<std::vector<std::string>>& labels, const JointAction& a) {
  std::string s = "(";
  for (std::size_t p = 0; p < a.size(); ++p) s += (p ? ", " : "") + labels[p][a[p]];
  return s + ")";
}

std::vector<std::vector<std::string>> labels_of(const AnyGame& g) {
  if (const auto* two = std::get_if<TwoPersonSoftGame>(&g)) return {two->x_labels(), two->y_labels()};
  return std::get<NPersonSoftGame>(g).strategy_labels();
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

struct Outcome {
  bool found = false;
  std::string human;
  json result;
};

json saddle_json(const TwoPersonSoftGame& g, const SaddleResult& s) {
  json arr = json::array();
  for (const auto& p : s.points) {
    arr.push_back({{"row", g.x_labels()[p.row]}, {"col", g.y_labels()[p.col]}, {"value", subset_json(p.value)}});
  }
  return arr;
}

std::string saddle_human(const TwoPersonSoftGame& g, const SaddleResult& s) {
  if (s.empty()) return "  no soft saddle point\n";
  std::string out;
  for (const auto& p : s.points) out += "  " + cell_label(g, p.row, p.col) + " value " + p.value.to_string() + "\n";
  return out;
}

json values_json(const ValueReport& v) {
  json j{{"lower", subset_json(v.lower)}, {"upper", subset_json(v.upper)}};
  j["value"] = v.value ? subset_json(*v.value) : json(nullptr);
  return j;
}

std::string values_human(const ValueReport& v) {
  std::string out = "  lower value: " + v.lower.to_string() + "\n  upper value: " + v.upper.to_string() + "\n";
  out += v.value ? "  value: " + v.value->to_string() + "\n" : "  value: none (lower and upper differ)\n";
  return out;
}

json trace_json(const TwoPersonSoftGame& original, const EliminationTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"player", s.side == Side::kRows ? 1 : 2},
                     {"removed", s.removed_label},
                     {"dominated_by", s.dominating_label}});
  }
  json rows = json::array(), cols = json::array();
  for (std::size_t r : t.kept_rows) rows.push_back(original.x_labels()[r]);
  for (std::size_t c : t.kept_cols) cols.push_back(original.y_labels()[c]);
  return {{"steps", steps}, {"remaining_rows", rows}, {"remaining_cols", cols}};
}

std::string trace_human(const EliminationTrace& t) {
  std::string out;
  if (t.steps.empty()) out += "  no dominated strategy\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    out += "  " + std::to_string(i + 1) + ". delete " + (s.side == Side::kRows ? "row " : "column ") + s.removed_label +
           " (dominated by " + s.dominating_label + ")\n";
  }
  std::string rows, cols;
  for (const auto& x : t.reduced.x_labels()) rows += (rows.empty() ? "" : ", ") + x;
  for (const auto& y : t.reduced.y_labels()) cols += (cols.empty() ? "" : ", ") + y;
  out += "  remaining rows: " + rows + "\n  remaining columns: " + cols + "\n";
  return out;
}

Outcome solve_two_person(const TwoPersonSoftGame& g, const std::string& method, Player k, const Style& style) {
  Outcome o;
  const std::string who = k == Player::kOne ? "Player 1" : "Player 2";
  if (method == "saddle") {
    auto s = saddle_points(g, k);
    o.found = !s.empty();
    o.result = {{"saddle_points", saddle_json(g, s)}};
    o.human = style.heading("Soft saddle points (" + who + "):") + "\n" + saddle_human(g, s);
  } else if (method == "values") {
    auto v = game_value(g, k);
    o.found = v.value.has_value();
    o.result = values_json(v);
    o.human = style.heading("Soft values (" + who + "):") + "\n" + values_human(v);
  } else if (method == "eliminate") {
    auto t = eliminate(g);
    const auto& r = t.reduced;
    o.found = r.rows() == 1 && r.cols() == 1;
    o.result = trace_json(g, t);
    o.human = style.heading("Soft elimination:") + "\n" + trace_human(t);
    if (o.found) {
      json sol{{"row", r.x_labels()[0]}, {"col", r.y_labels()[0]}, {"value", subset_json(r.payoff(k, {0, 0}))}};
      o.result["solution"] = sol;
      o.human += "  solution: " + cell_label(r, 0, 0) + " value " + r.payoff(k, {0, 0}).to_string() + "\n";
    } else {
      o.result["solution"] = nullptr;
    }
  } else if (method == "nash") {
    if (!g.is_bimatrix()) throw NotApplicable("soft Nash equilibria need a payoff table for each player");
    auto n = nash_equilibria(g);
    o.found = !n.empty();
    json arr = json::array();
    o.human = style.heading("Soft Nash equilibria:") + "\n";
    if (n.empty()) o.human += "  none\n";
    for (const auto& e : n.equilibria) {
      arr.push_back({{"action", {g.x_labels()[e.action[0]], g.y_labels()[e.action[1]]}},
                     {"payoffs", {subset_json(e.payoffs[0]), subset_json(e.payoffs[1])}}});
      o.human += "  " + cell_label(g, e.action[0], e.action[1]) + ": Player 1 " + e.payoffs[0].to_string() +
                 ", Player 2 " + e.payoffs[1].to_string() + "\n";
    }
    o.result = {{"equilibria", arr}};
  } else {  // pipeline
    auto p = solve_pipeline(g, k);
    o.found = !p.saddle.empty();
    o.result = {{"elimination", trace_json(g, p.trace)},
                {"saddle_points", saddle_json(p.trace.reduced, p.saddle)},
                {"values", values_json(p.values)}};
    o.human = style.heading("Soft elimination:") + "\n" + trace_human(p.trace) +
              style.heading("Soft saddle points on the reduced game (" + who + "):") + "\n" +
              saddle_human(p.trace.reduced, p.saddle) + style.heading("Soft values on the reduced game:") + "\n" +
              values_human(p.values);
  }
  return o;
}

Outcome solve_nperson(const NPersonSoftGame& g, const std::string& method, const Style& style) {
  if (method != "nash") throw NotApplicable("method '" + method + "' is defined for two-person games only");
  Outcome o;
  auto n = nps_nash_equilibria(g);
  o.found = !n.empty();
  json arr = json::array();
  o.human = style.heading("Soft Nash equilibria:") + "\n";
  if (n.empty()) o.human += "  none\n";
  for (const auto& e : n.equilibria) {
    json action = json::array(), payoffs = json::array();
    std::string line = "  " + joint_label(g.strategy_labels(), e.action) + ":";
    for (std::size_t k = 0; k < e.action.size(); ++k) {
      action.push_back(g.strategy_labels()[k][e.action[k]]);
      payoffs.push_back(subset_json(e.payoffs[k]));
      line += (k ? ", " : " ") + g.player_names()[k] + " " + e.payoffs[k].to_string();
    }
    arr.push_back({{"action", action}, {"payoffs", payoffs}});
    o.human += line + "\n";
  }
  o.result = {{"equilibria", arr}};
  return o;
}

AnyGame load(const std::string& path) { return parse_game(read_text_file(path)); }

int solve(const std::string& path, const std::string& method, int player, const std::string& format,
          std::ostream& out) {
  const AnyGame g = load(path);
  const Style style;
  Outcome o;
  if (const auto* two = std::get_if<TwoPersonSoftGame>(&g)) {
    if (player == 2 && !two->is_bimatrix() && method != "nash" && method != "eliminate") {
      throw NotApplicable("single-matrix game has no table for Player 2");
    }
    o = solve_two_person(*two, method, to_player(player), style);
  } else {
    o = solve_nperson(std::get<NPersonSoftGame>(g), method, style);
  }

  if (format == "json") {
    json doc;
    doc["method"] = method;
    doc["player"] = player;
    doc["input_digest"] = "sha256:" + sha256_hex(serialize_game(g));
    doc["found"] = o.found;
    doc["result"] = o.result;
    out << doc.dump(2) << "\n";
  } else {
    out << o.human;
  }
  return o.found ? kExitFound : kExitNotFound;
}

// ---------------------------------------------------------------------------
// check / info / gen
// ---------------------------------------------------------------------------

int check(const std::string& path, const std::string& property, int player, std::ostream& out) {
  const AnyGame any = load(path);
  const auto& g = two_person(any, "property '" + property + "'");
  const Player k = to_player(player);
  if (k == Player::kTwo && !g.is_bimatrix()) throw NotApplicable("single-matrix game has no table for Player 2");
  if ((property == "disjoint" || property == "universal") && !g.is_bimatrix()) {
    throw NotApplicable("property '" + property + "' needs a payoff table for each player");
  }
  bool holds = false;
  if (property == "disjoint") holds = is_disjoint_game(g);
  else if (property == "universal") holds = is_universal_game(g);
  else if (property == "rational") holds = is_rational(g, k);
  else if (property == "empty") holds = is_empty_game(g, k);
  else holds = is_full_game(g, k);
  out << property << ": " << (holds ? "true" : "false") << "\n";
  return holds ? kExitFound : kExitNotFound;
}

int info(const std::string& path, std::ostream& out) {
  const AnyGame g = load(path);
  const auto labels = labels_of(g);
  std::vector<std::size_t> dims;
  for (const auto& l : labels) dims.push_back(l.size());
  const UniversePtr& universe = std::visit([](const auto& x) -> const UniversePtr& { return x.universe(); }, g);
  const auto& names = std::visit([](const auto& x) -> const std::vector<std::string>& { return x.player_names(); }, g);
  std::string mode = "n-person";
  if (const auto* two = std::get_if<TwoPersonSoftGame>(&g)) mode = two->is_bimatrix() ? "bimatrix" : "single-matrix";

  out << "players: " << labels.size() << "\n";
  out << "mode: " << mode << "\n";
  out << "dimensions: " << dims_string(dims) << "\n";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    out << "  " << names[k] << ":";
    for (const auto& l : labels[k]) out << " " << l;
    out << "\n";
  }
  out << "universe (" << universe->size() << "):";
  for (const auto& e : universe->elements()) out << " " << e;
  out << "\n";
  return kExitFound;
}

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::size_t> parse_dims(const std::string& s) {
  std::vector<std::size_t> dims;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("--dims expects MxK[x...], got '" + s + "'");
    }
    dims.push_back(std::stoul(part));
  }
  if (dims.size() < 2) throw UsageError("--dims needs at least two players");
  return dims;
}

Probability parse_probability(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return {std::stoull(s), 1};
    return {std::stoull(s.substr(0, slash)), std::stoull(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw UsageError("--inclusion expects a fraction such as 1/2, got '" + s + "'");
  }
}

int gen(std::uint64_t seed, std::size_t universe, const std::string& dims, const std::string& constraint,
        const std::string& inclusion, const std::string& output, std::ostream& out) {
  GenSpec spec;
  spec.seed = seed;
  spec.universe_size = universe;
  spec.dims = parse_dims(dims);
  spec.inclusion = parse_probability(inclusion);
  if (constraint == "disjoint") spec.constraint = Constraint::kDisjoint;
  else if (constraint == "universal") spec.constraint = Constraint::kUniversal;
  else if (constraint == "disjoint-universal") spec.constraint = Constraint::kDisjointUniversal;
  std::string text;
  try {
    text = serialize_game(random_game(spec));
  } catch (const InvalidGame& e) {
    throw UsageError(e.what());
  } catch (const UnsupportedConstraint& e) {
    throw UsageError(e.what());
  }
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f || !(f << text)) throw IoError("cannot write '" + output + "'");
  }
  return kExitFound;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solver for set-valued (soft) payoff games"};
  app.name("softgame");
  app.require_subcommand(1);

  std::string file, method, format = "human", property, dims, constraint = "none", inclusion = "1/2", output;
  int player = 1;
  std::uint64_t seed = 0;
  std::size_t universe = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Solve a game with one method");
  solve_cmd->add_option("file", file, "Game document")->required();
  solve_cmd->add_option("--method", method, "Solution method")
      ->required()
      ->check(CLI::IsMember({"saddle", "values", "eliminate", "nash", "pipeline"}));
  solve_cmd->add_option("--player", player, "Player whose table is analysed")->check(CLI::IsMember({1, 2}));
  solve_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "json"}));

  auto* check_cmd = app.add_subcommand("check", "Test a game property");
  check_cmd->add_option("file", file, "Game document")->required();
  check_cmd->add_option("--property", property, "Property")
      ->required()
      ->check(CLI::IsMember({"disjoint", "universal", "rational", "empty", "full"}));
  check_cmd->add_option("--player", player, "Player for per-player properties")->check(CLI::IsMember({1, 2}));

  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random game");
  gen_cmd->add_option("--seed", seed, "SplitMix64 seed")->required();
  gen_cmd->add_option("--universe", universe, "Universe size")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--dims", dims, "Strategy counts, e.g. 3x3 or 2x2x2")->required();
  gen_cmd->add_option("--constraint", constraint, "Payoff constraint")
      ->check(CLI::IsMember({"none", "disjoint", "universal", "disjoint-universal"}));
  gen_cmd->add_option("--inclusion", inclusion, "Element inclusion probability as num/den");
  gen_cmd->add_option("-o,--output", output, "Write to file instead of standard output");

  auto* info_cmd = app.add_subcommand("info", "Describe a game document");
  info_cmd->add_option("file", file, "Game document")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return solve(file, method, player, format, out);
    if (*check_cmd) return check(file, property, player, out);
    if (*gen_cmd) return gen(seed, universe, dims, constraint, inclusion, output, out);
    return info(file, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "invalid game document: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace softgame::cli
