#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace softgame {

// Finite, ordered ground set of named alternatives.
class Universe {
 public:
  explicit Universe(std::vector<std::string> elements);

  // Shared handle; subsets and games keep their universe alive this way.
  static std::shared_ptr<const Universe> make(std::vector<std::string> elements);
  // Universe {prefix1, ..., prefixN}.
  static std::shared_ptr<const Universe> numbered(std::size_t n, std::string_view prefix = "u");

  std::size_t size() const { return elements_.size(); }
  const std::string& name(std::size_t index) const;
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws OutOfRange

  bool operator==(const Universe& other) const { return elements_ == other.elements_; }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// True when both handles denote the same element list.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

// A subset of a universe, stored as a bitmask over element indices.
// Enumeration is always in ascending index order.
class Subset {
 public:
  explicit Subset(UniversePtr universe);
  Subset(UniversePtr universe, std::initializer_list<std::size_t> indices);
  Subset(UniversePtr universe, const std::vector<std::size_t>& indices);

  static Subset empty(UniversePtr universe) { return Subset(std::move(universe)); }
  static Subset full(UniversePtr universe);
  // Members by element name; throws OutOfRange on an unknown name.
  static Subset of_names(UniversePtr universe, const std::vector<std::string>& names);

  const UniversePtr& universe() const { return universe_; }
  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool is_empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }
  bool contains(std::size_t index) const;

  void insert(std::size_t index);
  void erase(std::size_t index);

  std::vector<std::size_t> indices() const;
  std::vector<std::string> names() const;
  // "{u1,u4}" or "{}".
  std::string to_string() const;

  const boost::dynamic_bitset<std::uint64_t>& bits() const { return bits_; }

  // Same universe and same members.
  bool operator==(const Subset& other) const;

 private:
  friend Subset subset_union(const Subset&, const Subset&);
  friend Subset subset_intersect(const Subset&, const Subset&);
  friend Subset subset_complement(const Subset&);
  friend Subset subset_difference(const Subset&, const Subset&);

  Subset(UniversePtr universe, boost::dynamic_bitset<std::uint64_t> bits)
      : universe_(std::move(universe)), bits_(std::move(bits)) {}

  UniversePtr universe_;
  boost::dynamic_bitset<std::uint64_t> bits_;
};

Subset subset_union(const Subset& a, const Subset& b);
Subset subset_intersect(const Subset& a, const Subset& b);
Subset subset_complement(const Subset& a);
Subset subset_difference(const Subset& a, const Subset& b);
bool is_subset(const Subset& a, const Subset& b);
// a ⊂ b and a ≠ b.
bool is_proper_subset(const Subset& a, const Subset& b);

// Soft set over a universe: parameters E with an approximate function
// E -> P(U). The mapping is total in memory; parameters absent from a
// literal are empty-valued.
class SoftSet {
 public:
  SoftSet(UniversePtr universe, std::vector<std::string> parameters);
  SoftSet(UniversePtr universe, std::vector<std::string> parameters, std::vector<Subset> approx);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  std::size_t parameter_count() const { return parameters_.size(); }
  std::size_t parameter_index(std::string_view parameter) const;

  const Subset& approx(std::size_t parameter) const;
  const Subset& approx(std::string_view parameter) const;
  void set(std::string_view parameter, Subset value);

  // Every parameter mapped to the empty set / to U.
  static SoftSet empty(UniversePtr universe, std::vector<std::string> parameters);
  static SoftSet full(UniversePtr universe, std::vector<std::string> parameters);

  bool is_empty() const;
  bool operator==(const SoftSet& other) const;

 private:
  UniversePtr universe_;
  std::vector<std::string> parameters_;
  std::vector<Subset> approx_;
};

SoftSet softset_union(const SoftSet& s, const SoftSet& t);
SoftSet softset_intersect(const SoftSet& s, const SoftSet& t);
SoftSet softset_complement(const SoftSet& s);
SoftSet softset_difference(const SoftSet& s, const SoftSet& t);
bool is_soft_subset(const SoftSet& s, const SoftSet& t);

}  // namespace softgame
