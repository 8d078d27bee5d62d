#include "softgame/softset.hpp"

#include <sstream>
#include <utility>

#include "softgame/error.hpp"

namespace softgame {

Universe::Universe(std::vector<std::string> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidGame("universe must have at least one element");
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].empty()) throw InvalidGame("universe element names must be non-empty");
    if (!index_.emplace(elements_[i], i).second) {
      throw InvalidGame("duplicate universe element '" + elements_[i] + "'");
    }
  }
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> elements) {
  return std::make_shared<const Universe>(std::move(elements));
}

std::shared_ptr<const Universe> Universe::numbered(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return make(std::move(names));
}

const std::string& Universe::name(std::size_t index) const {
  if (index >= elements_.size()) throw OutOfRange("element index " + std::to_string(index) + " out of range");
  return elements_[index];
}

std::optional<std::size_t> Universe::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw OutOfRange("unknown element '" + std::string(name) + "'");
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
  return a == b || (a && b && *a == *b);
}

namespace {

void require_same(const Subset& a, const Subset& b) {
  if (!same_universe(a.universe(), b.universe())) {
    throw IncompatibleOperands("subsets belong to different universes");
  }
}

}  // namespace

Subset::Subset(UniversePtr universe) : universe_(std::move(universe)) {
  if (!universe_) throw InvalidGame("subset requires a universe");
  bits_.resize(universe_->size());
}

Subset::Subset(UniversePtr universe, std::initializer_list<std::size_t> indices)
    : Subset(std::move(universe)) {
  for (std::size_t i : indices) insert(i);
}

Subset::Subset(UniversePtr universe, const std::vector<std::size_t>& indices)
    : Subset(std::move(universe)) {
  for (std::size_t i : indices) insert(i);
}

Subset Subset::full(UniversePtr universe) {
  Subset s(std::move(universe));
  s.bits_.set();
  return s;
}

Subset Subset::of_names(UniversePtr universe, const std::vector<std::string>& names) {
  Subset s(universe);
  for (const auto& n : names) s.insert(universe->index_of(n));
  return s;
}

bool Subset::contains(std::size_t index) const {
  if (index >= bits_.size()) throw OutOfRange("element index " + std::to_string(index) + " out of range");
  return bits_.test(index);
}

void Subset::insert(std::size_t index) {
  if (index >= bits_.size()) throw OutOfRange("element index " + std::to_string(index) + " out of range");
  bits_.set(index);
}

void Subset::erase(std::size_t index) {
  if (index >= bits_.size()) throw OutOfRange("element index " + std::to_string(index) + " out of range");
  bits_.reset(index);
}

std::vector<std::size_t> Subset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos; i = bits_.find_next(i)) {
    out.push_back(i);
  }
  return out;
}

std::vector<std::string> Subset::names() const {
  std::vector<std::string> out;
  for (std::size_t i : indices()) out.push_back(universe_->name(i));
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& n : names()) {
    if (!first) os << ',';
    os << n;
    first = false;
  }
  os << '}';
  return os.str();
}

bool Subset::operator==(const Subset& other) const {
  return same_universe(universe_, other.universe_) && bits_ == other.bits_;
}

Subset subset_union(const Subset& a, const Subset& b) {
  require_same(a, b);
  return Subset(a.universe_, a.bits_ | b.bits_);
}

Subset subset_intersect(const Subset& a, const Subset& b) {
  require_same(a, b);
  return Subset(a.universe_, a.bits_ & b.bits_);
}

Subset subset_complement(const Subset& a) { return Subset(a.universe_, ~a.bits_); }

Subset subset_difference(const Subset& a, const Subset& b) {
  require_same(a, b);
  return Subset(a.universe_, a.bits_ - b.bits_);
}

bool is_subset(const Subset& a, const Subset& b) {
  require_same(a, b);
  return a.bits().is_subset_of(b.bits());
}

bool is_proper_subset(const Subset& a, const Subset& b) {
  require_same(a, b);
  return a.bits().is_proper_subset_of(b.bits());
}

// SoftSet

SoftSet::SoftSet(UniversePtr universe, std::vector<std::string> parameters)
    : universe_(std::move(universe)), parameters_(std::move(parameters)) {
  if (!universe_) throw InvalidGame("soft set requires a universe");
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (parameters_[i] == parameters_[j]) throw InvalidGame("duplicate parameter '" + parameters_[i] + "'");
    }
  }
  approx_.assign(parameters_.size(), Subset(universe_));
}

SoftSet::SoftSet(UniversePtr universe, std::vector<std::string> parameters, std::vector<Subset> approx)
    : SoftSet(std::move(universe), std::move(parameters)) {
  if (approx.size() != parameters_.size()) {
    throw InvalidGame("soft set needs one approximate value per parameter");
  }
  for (const auto& s : approx) {
    if (!same_universe(s.universe(), universe_)) throw IncompatibleOperands("approximate value over a different universe");
  }
  approx_ = std::move(approx);
}

std::size_t SoftSet::parameter_index(std::string_view parameter) const {
  for (std::size_t i = 0; i < parameters_.size(); ++i) {
    if (parameters_[i] == parameter) return i;
  }
  throw OutOfRange("unknown parameter '" + std::string(parameter) + "'");
}

const Subset& SoftSet::approx(std::size_t parameter) const {
  if (parameter >= approx_.size()) throw OutOfRange("parameter index out of range");
  return approx_[parameter];
}

const Subset& SoftSet::approx(std::string_view parameter) const { return approx_[parameter_index(parameter)]; }

void SoftSet::set(std::string_view parameter, Subset value) {
  if (!same_universe(value.universe(), universe_)) throw IncompatibleOperands("approximate value over a different universe");
  approx_[parameter_index(parameter)] = std::move(value);
}

SoftSet SoftSet::empty(UniversePtr universe, std::vector<std::string> parameters) {
  return SoftSet(std::move(universe), std::move(parameters));
}

SoftSet SoftSet::full(UniversePtr universe, std::vector<std::string> parameters) {
  SoftSet s(std::move(universe), std::move(parameters));
  for (auto& a : s.approx_) a = Subset::full(s.universe_);
  return s;
}

bool SoftSet::is_empty() const {
  for (const auto& a : approx_) {
    if (!a.is_empty()) return false;
  }
  return true;
}

bool SoftSet::operator==(const SoftSet& other) const {
  return same_universe(universe_, other.universe_) && parameters_ == other.parameters_ && approx_ == other.approx_;
}

namespace {

void require_same(const SoftSet& s, const SoftSet& t) {
  if (!same_universe(s.universe(), t.universe())) throw IncompatibleOperands("soft sets over different universes");
  if (s.parameters() != t.parameters()) throw IncompatibleOperands("soft sets over different parameter sets");
}

template <typename Op>
SoftSet parameterwise(const SoftSet& s, const SoftSet& t, Op op) {
  require_same(s, t);
  std::vector<Subset> out;
  out.reserve(s.parameter_count());
  for (std::size_t i = 0; i < s.parameter_count(); ++i) out.push_back(op(s.approx(i), t.approx(i)));
  return SoftSet(s.universe(), s.parameters(), std::move(out));
}

}  // namespace

SoftSet softset_union(const SoftSet& s, const SoftSet& t) { return parameterwise(s, t, subset_union); }

SoftSet softset_intersect(const SoftSet& s, const SoftSet& t) { return parameterwise(s, t, subset_intersect); }

SoftSet softset_difference(const SoftSet& s, const SoftSet& t) { return parameterwise(s, t, subset_difference); }

SoftSet softset_complement(const SoftSet& s) {
  std::vector<Subset> out;
  out.reserve(s.parameter_count());
  for (std::size_t i = 0; i < s.parameter_count(); ++i) out.push_back(subset_complement(s.approx(i)));
  return SoftSet(s.universe(), s.parameters(), std::move(out));
}

bool is_soft_subset(const SoftSet& s, const SoftSet& t) {
  require_same(s, t);
  for (std::size_t i = 0; i < s.parameter_count(); ++i) {
    if (!is_subset(s.approx(i), t.approx(i))) return false;
  }
  return true;
}

}  // namespace softgame
