#include "grpkit/subgroup.hpp"

#include <stdexcept>

namespace grpkit {

SubgroupHandle::SubgroupHandle(Unchecked, PermGroup ambient, std::vector<Permutation> generators)
    : ambient_(std::move(ambient)), group_(ambient_.degree(), std::move(generators)) {}

SubgroupHandle::SubgroupHandle(PermGroup ambient, std::vector<Permutation> generators)
    : SubgroupHandle(Unchecked{}, std::move(ambient), std::move(generators)) {
  for (const auto& g : group_.generators()) {
    if (!ambient_.contains(g)) throw std::invalid_argument("generator not in ambient group");
  }
}

SubgroupHandle SubgroupHandle::whole(const PermGroup& ambient) {
  return SubgroupHandle(Unchecked{}, ambient,
                        std::vector<Permutation>(ambient.generators().begin(), ambient.generators().end()));
}

SubgroupHandle SubgroupHandle::trivial(const PermGroup& ambient) {
  return SubgroupHandle(Unchecked{}, ambient, {});
}

SubgroupHandle SubgroupHandle::unchecked(PermGroup ambient, std::vector<Permutation> generators) {
  return SubgroupHandle(Unchecked{}, std::move(ambient), std::move(generators));
}

bool SubgroupHandle::same_subgroup(const SubgroupHandle& other) const {
  if (order() != other.order()) return false;
  for (const auto& g : other.generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

}  // namespace grpkit
