#include "softgame/generator.hpp"

#include <numeric>
#include <string>

#include "softgame/error.hpp"

namespace softgame {

std::uint64_t SplitMix64::next() {
  ++draws_;
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool hits(std::uint64_t draw, Probability p) {
  if (p.den == 0 || p.num > p.den) throw InvalidGame("inclusion probability must be num/den with 0 <= num <= den");
  // floor(num * 2^64 / den), which is 2^64 when num == den.
  __extension__ using u128 = unsigned __int128;
  const u128 threshold = (static_cast<u128>(p.num) << 64) / p.den;
  return static_cast<u128>(draw) < threshold;
}

Subset random_subset(SplitMix64& rng, const UniversePtr& universe, Probability p) {
  Subset s(universe);
  for (std::size_t i = 0; i < universe->size(); ++i) {
    if (hits(rng.next(), p)) s.insert(i);
  }
  return s;
}

namespace {

std::size_t cell_count(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void validate(const GenSpec& spec) {
  if (spec.universe_size == 0) throw InvalidGame("universe size must be at least 1");
  if (spec.dims.size() < 2) throw InvalidGame("at least two players are required");
  for (std::size_t d : spec.dims) {
    if (d == 0) throw InvalidGame("every player needs at least one strategy");
  }
  if (spec.constraint != Constraint::kNone && spec.dims.size() != 2) {
    throw UnsupportedConstraint("disjoint/universal constraints are defined for two players only");
  }
  hits(0, spec.inclusion);
}

std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Fills one table per player, cells row-major, players in index order.
std::vector<PayoffTable> fill_tables(const GenSpec& spec, const UniversePtr& universe) {
  SplitMix64 rng(spec.seed);
  const std::size_t n = spec.dims.size();
  const std::size_t cells = cell_count(spec.dims);
  std::vector<std::vector<Subset>> per_player(n);

  for (std::size_t c = 0; c < cells; ++c) {
    if (spec.constraint == Constraint::kNone) {
      for (std::size_t k = 0; k < n; ++k) per_player[k].push_back(random_subset(rng, universe, spec.inclusion));
      continue;
    }
    Subset s1(universe), s2(universe);
    for (std::size_t e = 0; e < universe->size(); ++e) {
      const bool a = hits(rng.next(), spec.inclusion);
      bool in1 = false, in2 = false;
      switch (spec.constraint) {
        case Constraint::kDisjointUniversal:
          in1 = a;
          in2 = !a;
          break;
        case Constraint::kDisjoint: {
          const bool b = hits(rng.next(), spec.inclusion);
          in1 = a;
          in2 = !a && b;
          break;
        }
        case Constraint::kUniversal: {
          const bool b = hits(rng.next(), spec.inclusion);
          in1 = a || !b;
          in2 = b;
          break;
        }
        case Constraint::kNone: break;
      }
      if (in1) s1.insert(e);
      if (in2) s2.insert(e);
    }
    per_player[0].push_back(std::move(s1));
    per_player[1].push_back(std::move(s2));
  }

  std::vector<PayoffTable> tables;
  for (auto& cellv : per_player) tables.emplace_back(universe, spec.dims, std::move(cellv));
  return tables;
}

}  // namespace

std::uint64_t draw_count(const GenSpec& spec) {
  validate(spec);
  const std::uint64_t per_cell_element = [&]() -> std::uint64_t {
    switch (spec.constraint) {
      case Constraint::kNone: return spec.dims.size();
      case Constraint::kDisjointUniversal: return 1;
      case Constraint::kDisjoint:
      case Constraint::kUniversal: return 2;
    }
    return 0;
  }();
  return per_cell_element * cell_count(spec.dims) * spec.universe_size;
}

TwoPersonSoftGame random_two_person_game(const GenSpec& spec) {
  validate(spec);
  if (spec.dims.size() != 2) throw InvalidGame("two-person game needs exactly two dimensions");
  auto universe = Universe::numbered(spec.universe_size);
  auto tables = fill_tables(spec, universe);
  return TwoPersonSoftGame(universe, labels("x", spec.dims[0]), labels("y", spec.dims[1]), std::move(tables[0]),
                           std::move(tables[1]));
}

NPersonSoftGame random_nperson_game(const GenSpec& spec) {
  validate(spec);
  auto universe = Universe::numbered(spec.universe_size);
  std::vector<std::vector<std::string>> strategy_labels;
  for (std::size_t k = 0; k < spec.dims.size(); ++k) {
    strategy_labels.push_back(labels("p" + std::to_string(k + 1) + "s", spec.dims[k]));
  }
  return NPersonSoftGame(universe, std::move(strategy_labels), fill_tables(spec, universe));
}

AnyGame random_game(const GenSpec& spec) {
  if (spec.dims.size() == 2) return random_two_person_game(spec);
  return random_nperson_game(spec);
}

}  // namespace softgame
