#pragma once

#include <cstdint>
#include <vector>

#include "grpkit/group_table.hpp"
#include "grpkit/limits.hpp"
#include "grpkit/subgroup.hpp"
#include "grpkit/subgroups.hpp"

namespace grpkit {

// G/N realized as the permutation action of G on the right cosets of a normal
// subgroup N. Coset 0 is N itself; cosets are numbered by their smallest
// element index. The quotient's generators are the images of G's generators,
// in order.
class CosetAction {
 public:
  // Throws NotNormal or IndexExceedsCap.
  CosetAction(const GroupTable& table, const TableSubgroup& normal, std::uint64_t index_cap = kDegreeCap);

  const PermGroup& quotient() const noexcept { return quotient_; }
  std::size_t index() const noexcept { return reps_.size(); }
  std::size_t coset_of(Elem g) const noexcept { return coset_[g]; }

  // Image of g in the quotient: coset i goes to the coset of rep(i) * g.
  Permutation image(Elem g) const;

 private:
  const GroupTable* table_;
  std::vector<std::size_t> coset_;
  std::vector<Elem> reps_;
  PermGroup quotient_;
};

// Faithful permutation representation of G/N on |G:N| points.
PermGroup coset_action(const PermGroup& group, const SubgroupHandle& normal,
                       std::uint64_t index_cap = kDegreeCap, std::uint64_t order_cap = kLatticeCap);

}  // namespace grpkit
