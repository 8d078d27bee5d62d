#include "softgame/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace softgame {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(ParseErrorKind kind, const std::string& key, const std::string& message) {
  throw ParseError(kind, key, message);
}

const json& field(const json& obj, const char* name) {
  auto it = obj.find(name);
  if (it == obj.end()) fail(ParseErrorKind::kSchema, name, std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(ParseErrorKind::kSchema, where, "'" + where + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(ParseErrorKind::kSchema, where, "'" + where + "' must contain only strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ParseErrorKind::kSyntax, "", std::string("malformed JSON: ") + e.what());
  }
}

json subset_json(const Subset& s) {
  json arr = json::array();
  for (const auto& n : s.names()) arr.push_back(n);
  return arr;
}

std::vector<std::size_t> dims_of(const std::vector<std::vector<std::string>>& labels) {
  std::vector<std::size_t> dims;
  for (const auto& l : labels) dims.push_back(l.size());
  return dims;
}

PayoffTable parse_table(const json& entry, std::size_t player, const UniversePtr& universe,
                        const std::vector<std::vector<std::string>>& labels) {
  const std::string where = "payoffs[" + std::to_string(player) + "]";
  if (!entry.is_object()) fail(ParseErrorKind::kSchema, where, where + " must be an object");

  // Key -> flat index of every joint action.
  PayoffTable table(universe, dims_of(labels));
  std::unordered_map<std::string, std::size_t> flat_of;
  for (std::size_t f = 0; f < table.cell_count(); ++f) flat_of.emplace(action_key(labels, table.action_at(f)), f);

  std::vector<bool> seen(table.cell_count(), false);
  for (auto it = entry.begin(); it != entry.end(); ++it) {
    const std::string& key = it.key();
    auto pos = flat_of.find(key);
    if (pos == flat_of.end()) fail(ParseErrorKind::kUnknownAction, key, where + ": unknown joint action \"" + key + "\"");
    seen[pos->second] = true;

    Subset cell(universe);
    for (const auto& name : string_list(it.value(), where + "." + key)) {
      auto idx = universe->find(name);
      if (!idx) fail(ParseErrorKind::kUnknownElement, key, where + ": \"" + key + "\" names unknown element \"" + name + "\"");
      cell.insert(*idx);
    }
    table.set(table.action_at(pos->second), std::move(cell));
  }
  for (std::size_t f = 0; f < seen.size(); ++f) {
    if (!seen[f]) {
      const auto key = action_key(labels, table.action_at(f));
      fail(ParseErrorKind::kMissingAction, key, where + ": missing joint action \"" + key + "\"");
    }
  }
  return table;
}

// The JSON library keeps only the last of repeated object keys; reject
// repeats (e.g. a joint action listed twice) before that happens.
void check_duplicate_keys(std::string_view text) {
  std::vector<std::unordered_map<std::string, int>> stack;
  json::parser_callback_t cb = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: stack.emplace_back(); break;
      case json::parse_event_t::object_end: stack.pop_back(); break;
      case json::parse_event_t::key: {
        auto key = parsed.get<std::string>();
        if (++stack.back()[key] > 1) fail(ParseErrorKind::kDuplicateAction, key, "duplicate key \"" + key + "\"");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    const json discarded = json::parse(text.begin(), text.end(), cb);
    (void)discarded;
  } catch (const json::parse_error& e) {
    fail(ParseErrorKind::kSyntax, "", std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string action_key(const std::vector<std::vector<std::string>>& labels, const JointAction& a) {
  std::string key;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (p) key += '|';
    key += labels[p][a[p]];
  }
  return key;
}

AnyGame parse_game(std::string_view text) {
  check_duplicate_keys(text);
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(ParseErrorKind::kSchema, "", "game document must be a JSON object");

  const json& version = field(doc, "format_version");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    fail(ParseErrorKind::kSchema, "format_version", "unsupported format_version (expected 1)");
  }

  UniversePtr universe;
  try {
    universe = Universe::make(string_list(field(doc, "universe"), "universe"));
  } catch (const InvalidGame& e) {
    fail(ParseErrorKind::kSchema, "universe", e.what());
  }

  const json& players = field(doc, "players");
  if (!players.is_array() || players.size() < 2) {
    fail(ParseErrorKind::kDimension, "players", "'players' must list at least two players");
  }
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t k = 0; k < players.size(); ++k) {
    const std::string where = "players[" + std::to_string(k) + "]";
    const json& p = players[k];
    if (!p.is_object()) fail(ParseErrorKind::kSchema, where, where + " must be an object");
    const json& name = field(p, "name");
    if (!name.is_string()) fail(ParseErrorKind::kSchema, where + ".name", where + ".name must be a string");
    names.push_back(name.get<std::string>());
    labels.push_back(string_list(field(p, "strategies"), where + ".strategies"));
    const auto& ls = labels.back();
    if (ls.empty()) fail(ParseErrorKind::kDimension, where, where + " has no strategies");
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (ls[i].empty() || ls[i].find('|') != std::string::npos) {
        fail(ParseErrorKind::kSchema, where, where + ": strategy labels must be non-empty and free of '|'");
      }
      if (std::find(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i), ls[i]) != ls.begin() + static_cast<std::ptrdiff_t>(i)) {
        fail(ParseErrorKind::kSchema, where, where + ": duplicate strategy \"" + ls[i] + "\"");
      }
    }
  }

  const json& payoffs = field(doc, "payoffs");
  if (!payoffs.is_array()) fail(ParseErrorKind::kSchema, "payoffs", "'payoffs' must be an array");
  const std::size_t n = players.size();
  const bool single = n == 2 && payoffs.size() == 1;
  if (!single && payoffs.size() != n) {
    fail(ParseErrorKind::kDimension, "payoffs",
         "expected " + std::string(n == 2 ? "1 or 2" : std::to_string(n)) + " payoff tables, got " +
             std::to_string(payoffs.size()));
  }

  std::vector<PayoffTable> tables;
  for (std::size_t k = 0; k < payoffs.size(); ++k) tables.push_back(parse_table(payoffs[k], k, universe, labels));

  try {
    if (n == 2) {
      std::optional<PayoffTable> t2;
      if (!single) t2 = std::move(tables[1]);
      return TwoPersonSoftGame(universe, labels[0], labels[1], std::move(tables[0]), std::move(t2), names);
    }
    return NPersonSoftGame(universe, labels, std::move(tables), names);
  } catch (const InvalidGame& e) {
    fail(ParseErrorKind::kSchema, "players", e.what());
  }
}

TwoPersonSoftGame parse_two_person_game(std::string_view text) {
  auto g = parse_game(text);
  if (auto* two = std::get_if<TwoPersonSoftGame>(&g)) return std::move(*two);
  fail(ParseErrorKind::kDimension, "players", "expected a two-person game");
}

namespace {

std::string dump(const std::vector<std::string>& names, const std::vector<std::vector<std::string>>& labels,
                 const UniversePtr& universe, const std::vector<const PayoffTable*>& tables) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["universe"] = universe->elements();
  json players = json::array();
  for (std::size_t k = 0; k < labels.size(); ++k) {
    json p;
    p["name"] = names[k];
    p["strategies"] = labels[k];
    players.push_back(std::move(p));
  }
  doc["players"] = std::move(players);
  json payoffs = json::array();
  for (const PayoffTable* t : tables) {
    json entry = json::object();
    for (std::size_t f = 0; f < t->cell_count(); ++f) entry[action_key(labels, t->action_at(f))] = subset_json(t->cell(f));
    payoffs.push_back(std::move(entry));
  }
  doc["payoffs"] = std::move(payoffs);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string serialize_game(const TwoPersonSoftGame& g) {
  std::vector<const PayoffTable*> tables{&g.table(Player::kOne)};
  if (g.is_bimatrix()) tables.push_back(&g.table(Player::kTwo));
  return dump(g.player_names(), {g.x_labels(), g.y_labels()}, g.universe(), tables);
}

std::string serialize_game(const NPersonSoftGame& g) {
  std::vector<const PayoffTable*> tables;
  for (std::size_t k = 0; k < g.player_count(); ++k) tables.push_back(&g.table(k));
  return dump(g.player_names(), g.strategy_labels(), g.universe(), tables);
}

std::string serialize_game(const AnyGame& g) {
  return std::visit([](const auto& game) { return serialize_game(game); }, g);
}

SoftSet parse_soft_set(std::string_view text) {
  check_duplicate_keys(text);
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(ParseErrorKind::kSchema, "", "soft set document must be a JSON object");
  UniversePtr universe;
  try {
    universe = Universe::make(string_list(field(doc, "universe"), "universe"));
  } catch (const InvalidGame& e) {
    fail(ParseErrorKind::kSchema, "universe", e.what());
  }
  std::vector<std::string> params = string_list(field(doc, "parameters"), "parameters");
  std::optional<SoftSet> s;
  try {
    s.emplace(universe, params);
  } catch (const InvalidGame& e) {
    fail(ParseErrorKind::kSchema, "parameters", e.what());
  }
  const json& approx = field(doc, "approx");
  if (!approx.is_object()) fail(ParseErrorKind::kSchema, "approx", "'approx' must be an object");
  for (auto it = approx.begin(); it != approx.end(); ++it) {
    const std::string& key = it.key();
    if (std::find(params.begin(), params.end(), key) == params.end()) {
      fail(ParseErrorKind::kUnknownAction, key, "unknown parameter \"" + key + "\"");
    }
    Subset value(universe);
    for (const auto& name : string_list(it.value(), "approx." + key)) {
      auto idx = universe->find(name);
      if (!idx) fail(ParseErrorKind::kUnknownElement, key, "\"" + key + "\" names unknown element \"" + name + "\"");
      value.insert(*idx);
    }
    s->set(key, std::move(value));
  }
  return std::move(*s);
}

std::string serialize_soft_set(const SoftSet& s) {
  json doc;
  doc["universe"] = s.universe()->elements();
  doc["parameters"] = s.parameters();
  json approx = json::object();
  for (std::size_t i = 0; i < s.parameter_count(); ++i) {
    if (!s.approx(i).is_empty()) approx[s.parameters()[i]] = subset_json(s.approx(i));
  }
  doc["approx"] = std::move(approx);
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace softgame
