#include "grpkit/quotient.hpp"

#include <limits>

#include "grpkit/errors.hpp"

namespace grpkit {

namespace {

PermGroup build_quotient(const GroupTable& table, const std::vector<std::size_t>& coset,
                         const std::vector<Elem>& reps) {
  std::vector<Permutation> gens;
  for (const auto& g : table.group().generators()) {
    const Elem e = *table.index_of(g);
    std::vector<Point> img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      img[i] = static_cast<Point>(coset[table.mul(reps[i], e)]);
    }
    gens.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  return PermGroup(reps.size(), std::move(gens));
}

}  // namespace

CosetAction::CosetAction(const GroupTable& table, const TableSubgroup& normal, std::uint64_t index_cap)
    : table_(&table), quotient_(PermGroup::trivial(1)) {
  if (!table.is_normal_in(normal, table.generators())) throw NotNormal();
  const std::size_t n = table.size();
  const std::size_t idx = n / normal.order();
  if (idx > index_cap) throw IndexExceedsCap(idx, index_cap);
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  coset_.assign(n, kUnset);
  const std::vector<Elem> nm = normal.elements.members();
  for (std::size_t x = 0; x < n; ++x) {
    if (coset_[x] != kUnset) continue;
    const std::size_t c = reps_.size();
    reps_.push_back(static_cast<Elem>(x));
    for (Elem h : nm) coset_[table.mul(h, static_cast<Elem>(x))] = c;
  }
  quotient_ = build_quotient(table, coset_, reps_);
}

Permutation CosetAction::image(Elem g) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    img[i] = static_cast<Point>(coset_[table_->mul(reps_[i], g)]);
  }
  return Permutation::from_images_unchecked(std::move(img));
}

PermGroup coset_action(const PermGroup& group, const SubgroupHandle& normal, std::uint64_t index_cap,
                       std::uint64_t order_cap) {
  if (!is_normal(group, normal)) throw NotNormal();
  const std::uint64_t idx = group.order() / normal.order();
  if (idx > index_cap) throw IndexExceedsCap(idx, index_cap);
  FiniteGroup fg(group, order_cap);
  return CosetAction(fg.table(), fg.tabulate(normal), index_cap).quotient();
}

}  // namespace grpkit
