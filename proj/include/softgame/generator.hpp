#pragma once

#include <cstdint>
#include <vector>

#include "softgame/game.hpp"

namespace softgame {

// SplitMix64 (Steele, Lea, Flood). Same seed, same stream, in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t state() const { return state_; }
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

// Inclusion probability num/den, 0 <= num <= den, den > 0.
struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;

  static Probability half() { return {1, 2}; }
};

// A draw d "hits" iff d < floor(p * 2^64). Integer-only.
bool hits(std::uint64_t draw, Probability p);

// One draw per universe element, ascending index order.
Subset random_subset(SplitMix64& rng, const UniversePtr& universe, Probability p = Probability::half());

enum class Constraint { kNone, kDisjoint, kUniversal, kDisjointUniversal };

struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t universe_size = 1;
  std::vector<std::size_t> dims;  // per-player strategy counts
  Constraint constraint = Constraint::kNone;
  Probability inclusion = Probability::half();
};

// Number of draws random_game(spec) consumes.
std::uint64_t draw_count(const GenSpec& spec);

// Bimatrix game over {u1..uN} with strategies x1.. and y1...
TwoPersonSoftGame random_two_person_game(const GenSpec& spec);
// Constraints other than kNone are two-player only (UnsupportedConstraint).
NPersonSoftGame random_nperson_game(const GenSpec& spec);

// Two dims give a two-person game, more give an n-person game.
AnyGame random_game(const GenSpec& spec);

}  // namespace softgame
