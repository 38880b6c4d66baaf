#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "grpkit/group_table.hpp"
#include "grpkit/limits.hpp"
#include "grpkit/perm_group.hpp"
#include "grpkit/subgroup.hpp"

namespace grpkit {

// Sorted set of primes; pi_set(n) is the prime support of n.
struct PrimeSet {
  std::vector<std::uint64_t> primes;

  bool contains(std::uint64_t p) const;
  bool is_subset_of(const PrimeSet& other) const;
  std::uint64_t largest() const { return primes.empty() ? 1 : primes.back(); }
  bool operator==(const PrimeSet&) const = default;
};

PrimeSet pi_set(std::uint64_t order);

// Every subgroup of a tabulated group.
struct SubgroupLattice {
  std::vector<TableSubgroup> subgroups;  // by order, then lexicographic element set
  std::vector<std::size_t> maximal;      // indices into subgroups, increasing
  bool by_cyclic_extension = false;      // false: join closure (nonsolvable groups)
};

// A permutation group together with its Cayley table and lazily computed
// normal-subgroup and subgroup lattices. Copies share the cached data;
// concurrent first use computes each cache once.
class FiniteGroup {
 public:
  // Throws OrderExceedsCap when |G| > cap.
  explicit FiniteGroup(PermGroup group, std::uint64_t cap = kLatticeCap);

  const PermGroup& group() const noexcept { return state_->group; }
  const GroupTable& table() const noexcept { return state_->table; }
  std::uint64_t order() const noexcept { return state_->table.size(); }

  bool is_solvable() const;

  // Normal subgroups ordered by order, then lexicographic element set. The
  // first entry is the trivial subgroup and the last is the whole group.
  const std::vector<TableSubgroup>& normal_subgroups() const;
  std::optional<std::size_t> normal_index(const ElementSet& s) const;

  const SubgroupLattice& lattice() const;

  SubgroupHandle handle(const TableSubgroup& s) const;
  // Throws std::invalid_argument if a generator is not in the group.
  TableSubgroup tabulate(const SubgroupHandle& h) const;

 private:
  struct State {
    State(PermGroup g, std::uint64_t cap) : group(std::move(g)), table(group, cap) {}
    PermGroup group;
    GroupTable table;
    std::once_flag solvable_once;
    bool solvable = false;
    std::once_flag normal_once;
    std::vector<TableSubgroup> normal;
    std::once_flag lattice_once;
    SubgroupLattice lattice;
  };
  std::shared_ptr<State> state_;
};

// Commutator subgroup of h, as a subgroup of the table's group.
TableSubgroup derived_subgroup(const GroupTable& table, const TableSubgroup& h);

SubgroupLattice compute_lattice(const GroupTable& table, bool solvable);
std::vector<TableSubgroup> compute_normal_subgroups(const GroupTable& table);

// Complete duplicate-free list of subgroups, trivial and whole group included.
std::vector<SubgroupHandle> all_subgroups(const PermGroup& group, std::uint64_t order_cap = kLatticeCap);
std::vector<SubgroupHandle> maximal_subgroups(const PermGroup& group, std::uint64_t order_cap = kLatticeCap);
std::vector<SubgroupHandle> normal_subgroups(const PermGroup& group, std::uint64_t order_cap = kLatticeCap);

// N_G(H) by streaming over the elements of G; the test for g conjugates the
// generators of H and checks membership. Throws OrderExceedsCap when |G| > cap.
SubgroupHandle normalizer(const PermGroup& group, const SubgroupHandle& h,
                          std::uint64_t cap = kNormalizerCap);
TableSubgroup normalizer(const GroupTable& table, const TableSubgroup& h);

// A Sylow p-subgroup (trivial when p does not divide |G|). Groups within
// table_cap are handled by deterministic ascent through normalizers; larger
// groups by closing random p-elements, which throws OrderExceedsCap if the
// random budget runs out.
SubgroupHandle sylow_subgroup(const PermGroup& group, std::uint64_t p, std::uint64_t seed = 1,
                              std::uint64_t table_cap = kLatticeCap);
TableSubgroup sylow_subgroup(const GroupTable& table, std::uint64_t p);

bool is_normal(const PermGroup& group, const SubgroupHandle& h);

}  // namespace grpkit
