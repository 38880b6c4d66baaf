#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "grpkit/limits.hpp"
#include "grpkit/perm.hpp"
#include "grpkit/perm_group.hpp"

namespace grpkit {

// Index of an element in a GroupTable. Index 0 is always the identity.
using Elem = std::uint16_t;

// Fixed-universe bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  // Returns true if the bit was newly set.
  bool insert(std::size_t i) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (words_[i >> 6] & mask) return false;
    words_[i >> 6] |= mask;
    ++count_;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept;
  ElementSet intersection(const ElementSet& other) const;
  std::vector<Elem> members() const;
  std::size_t hash() const noexcept;

  // Lexicographic comparison of the sorted member lists.
  bool lex_less(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const noexcept {
    return count_ == other.count_ && words_ == other.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

// A subgroup of a tabulated group: its element set plus a generating set.
struct TableSubgroup {
  ElementSet elements;
  std::vector<Elem> generators;

  std::size_t order() const noexcept { return elements.count(); }
};

// Full Cayley table of a permutation group of moderate order.
//
// Elements are numbered in BFS order from the identity over the group's
// generators (right multiplication), so element k > 0 equals
// element(parent(k)) * generator(parent_generator(k)).
class GroupTable {
 public:
  // Throws OrderExceedsCap when |G| > cap.
  explicit GroupTable(const PermGroup& group, std::uint64_t cap = kLatticeCap);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elements_.size(); }

  Elem mul(Elem a, Elem b) const noexcept { return table_[std::size_t{a} * size() + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  // g^-1 x g
  Elem conj(Elem x, Elem g) const noexcept { return mul(mul(inverse_[g], x), g); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  Elem power(Elem a, std::uint64_t k) const noexcept;
  std::uint64_t element_order(Elem a) const noexcept { return orders_[a]; }

  const Permutation& element(Elem a) const noexcept { return elements_[a]; }
  std::optional<Elem> index_of(const Permutation& p) const;

  // Table indices of the group's non-identity generators, in generator order
  // (duplicates removed).
  std::span<const Elem> generators() const noexcept { return generator_elems_; }

  // Generator positions (into group().generators()) spelling element a as a
  // left-to-right word from the identity.
  std::vector<std::size_t> word(Elem a) const;

  ElementSet full() const;
  TableSubgroup whole() const;
  TableSubgroup trivial() const;

  // Subgroup generated by gens.
  ElementSet closure(std::span<const Elem> gens) const;
  TableSubgroup subgroup(std::vector<Elem> gens) const;

  // <base, extra> where every element of extra normalizes base.
  // Built as a union of right cosets of base.
  ElementSet extend(const ElementSet& base, std::span<const Elem> extra) const;

  // Smallest subgroup containing gens and closed under conjugation by `by`.
  TableSubgroup normal_closure(std::vector<Elem> gens, std::span<const Elem> by) const;

  bool normalizes(Elem g, const TableSubgroup& h) const noexcept;
  // Elements of `within` normalizing h.
  ElementSet normalizer(const ElementSet& within, const TableSubgroup& h) const;
  // True iff every generator of `of` normalizes h.
  bool is_normal_in(const TableSubgroup& h, std::span<const Elem> of_gens) const noexcept;
  bool contains_all(const ElementSet& s, std::span<const Elem> gens) const noexcept;

  // Conjugacy classes of the whole group, each sorted; classes ordered by smallest member.
  std::vector<std::vector<Elem>> conjugacy_classes() const;

  // Elements commuting with every generator.
  ElementSet center() const;

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Elem, PermutationHash> index_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::uint64_t> orders_;
  std::vector<Elem> parent_;
  std::vector<std::uint16_t> parent_gen_;
  std::vector<Elem> generator_elems_;
};

}  // namespace grpkit
