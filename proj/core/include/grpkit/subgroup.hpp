#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "grpkit/perm_group.hpp"

namespace grpkit {

// A subgroup of an ambient permutation group, carried by its generators.
class SubgroupHandle {
 public:
  // Throws std::invalid_argument if a generator is not in the ambient group.
  SubgroupHandle(PermGroup ambient, std::vector<Permutation> generators);

  static SubgroupHandle whole(const PermGroup& ambient);
  static SubgroupHandle trivial(const PermGroup& ambient);
  static SubgroupHandle unchecked(PermGroup ambient, std::vector<Permutation> generators);

  const PermGroup& ambient() const noexcept { return ambient_; }
  const PermGroup& group() const noexcept { return group_; }
  std::span<const Permutation> generators() const noexcept { return group_.generators(); }
  std::uint64_t order() const { return group_.order(); }
  bool contains(const Permutation& g) const { return group_.contains(g); }

  // Same element set: equal orders and every generator of one lies in the other.
  bool same_subgroup(const SubgroupHandle& other) const;

 private:
  struct Unchecked {};
  SubgroupHandle(Unchecked, PermGroup ambient, std::vector<Permutation> generators);

  PermGroup ambient_;
  PermGroup group_;
};

}  // namespace grpkit
