#include "grpkit/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"

namespace grpkit {

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes.begin(), primes.end(), p);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  return std::includes(other.primes.begin(), other.primes.end(), primes.begin(), primes.end());
}

PrimeSet pi_set(std::uint64_t order) {
  PrimeSet s;
  for (const auto& [p, e] : factorize(order)) s.primes.push_back(p);
  return s;
}

namespace {

// Deduplicating store of subgroups keyed by element set.
class SubgroupStore {
 public:
  // Returns (index, inserted).
  std::pair<std::size_t, bool> insert(TableSubgroup s) {
    auto it = index_.find(s.elements);
    if (it != index_.end()) return {it->second, false};
    const std::size_t idx = items_.size();
    index_.emplace(s.elements, idx);
    items_.push_back(std::move(s));
    return {idx, true};
  }
  std::optional<std::size_t> find(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const TableSubgroup& operator[](std::size_t i) const { return items_[i]; }
  std::size_t size() const { return items_.size(); }
  std::vector<TableSubgroup> release() { return std::move(items_); }

 private:
  std::vector<TableSubgroup> items_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

bool order_lex_less(const TableSubgroup& a, const TableSubgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements.lex_less(b.elements);
}

// Sorts subgroups into canonical order and carries the per-subgroup flags along.
std::vector<std::size_t> canonical_order(const std::vector<TableSubgroup>& subs) {
  std::vector<std::size_t> perm(subs.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return order_lex_less(subs[a], subs[b]); });
  return perm;
}

// Every solvable subgroup K > 1 contains a normal subgroup H of prime index,
// so K = <H, g> for g in N(H) whose image in N(H)/H has prime order. Growing
// from the trivial subgroup this way reaches every subgroup of a solvable group.
void cyclic_extension(const GroupTable& t, SubgroupStore& store, std::vector<bool>& extended) {
  const std::size_t n = t.size();
  const ElementSet all = t.full();
  store.insert(t.trivial());
  extended.assign(1, false);
  for (std::size_t idx = 0; idx < store.size(); ++idx) {
    const TableSubgroup h = store[idx];
    if (h.order() == n) continue;
    const ElementSet nh = t.normalizer(all, h);
    const std::vector<Elem> hm = h.elements.members();
    ElementSet done = h.elements;
    for (Elem g : nh.members()) {
      if (done.test(g)) continue;
      for (Elem x : hm) done.insert(t.mul(x, g));
      std::uint64_t k = 1;
      for (Elem y = g; !h.elements.test(y); y = t.mul(y, g)) ++k;
      if (!is_prime(k)) continue;
      const Elem ext[] = {g};
      TableSubgroup cand{t.extend(h.elements, ext), h.generators};
      cand.generators.push_back(g);
      const bool proper = cand.order() != n;
      auto [kidx, inserted] = store.insert(std::move(cand));
      if (inserted) extended.push_back(false);
      if (proper) extended[idx] = true;
      (void)kidx;
    }
  }
}

// Adjoins prime-power cyclic subgroups one at a time; complete for any group.
void join_closure(const GroupTable& t, SubgroupStore& store, std::vector<bool>& extended) {
  const std::size_t n = t.size();
  std::vector<Elem> pp;
  {
    SubgroupStore cyclic;
    for (std::size_t x = 1; x < n; ++x) {
      const std::uint64_t o = t.element_order(static_cast<Elem>(x));
      const auto f = factorize(o);
      if (f.size() != 1) continue;
      const Elem gen[] = {static_cast<Elem>(x)};
      if (cyclic.insert(TableSubgroup{t.closure(gen), {static_cast<Elem>(x)}}).second) {
        pp.push_back(static_cast<Elem>(x));
      }
    }
  }
  store.insert(t.trivial());
  extended.assign(1, false);
  for (std::size_t idx = 0; idx < store.size(); ++idx) {
    const TableSubgroup h = store[idx];
    if (h.order() == n) continue;
    for (Elem x : pp) {
      if (h.elements.test(x)) continue;
      std::vector<Elem> gens = h.generators;
      gens.push_back(x);
      TableSubgroup cand{t.closure(gens), std::move(gens)};
      const bool proper = cand.order() != n;
      if (store.insert(std::move(cand)).second) extended.push_back(false);
      if (proper) extended[idx] = true;
    }
  }
}

}  // namespace

TableSubgroup derived_subgroup(const GroupTable& table, const TableSubgroup& h) {
  std::vector<Elem> comms;
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < h.generators.size(); ++j) {
      const Elem c = table.commutator(h.generators[i], h.generators[j]);
      if (c != 0 && std::find(comms.begin(), comms.end(), c) == comms.end()) comms.push_back(c);
    }
  }
  return table.normal_closure(std::move(comms), h.generators);
}

SubgroupLattice compute_lattice(const GroupTable& table, bool solvable) {
  SubgroupStore store;
  std::vector<bool> extended;
  if (solvable) {
    cyclic_extension(table, store, extended);
  } else {
    join_closure(table, store, extended);
  }
  std::vector<TableSubgroup> raw = store.release();
  const auto perm = canonical_order(raw);

  SubgroupLattice lat;
  lat.by_cyclic_extension = solvable;
  std::vector<bool> non_maximal(raw.size());
  lat.subgroups.reserve(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    non_maximal[i] = extended[perm[i]];
    lat.subgroups.push_back(std::move(raw[perm[i]]));
  }

  const std::size_t n = table.size();
  const std::size_t count = lat.subgroups.size();
  for (std::size_t i = 0; i < count; ++i) {
    const TableSubgroup& h = lat.subgroups[i];
    if (h.order() == n) {
      non_maximal[i] = true;
      continue;
    }
    if (non_maximal[i]) continue;
    // Ascending order finds small overgroups first.
    for (std::size_t j = i + 1; j < count; ++j) {
      const TableSubgroup& k = lat.subgroups[j];
      if (k.order() == n) break;
      if (k.order() == h.order() || k.order() % h.order() != 0) continue;
      if (table.contains_all(k.elements, h.generators)) {
        non_maximal[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (!non_maximal[i]) lat.maximal.push_back(i);
  }
  return lat;
}

std::vector<TableSubgroup> compute_normal_subgroups(const GroupTable& table) {
  const auto gens = table.generators();
  SubgroupStore store;
  store.insert(table.trivial());

  // Normal closures of conjugacy classes; every normal subgroup is a product of these.
  std::vector<std::size_t> atoms;
  for (const auto& cls : table.conjugacy_classes()) {
    if (cls.front() == 0) continue;
    auto [idx, inserted] = store.insert(table.normal_closure({cls.front()}, gens));
    if (inserted) atoms.push_back(idx);
  }
  for (std::size_t idx = 0; idx < store.size(); ++idx) {
    for (std::size_t a : atoms) {
      const TableSubgroup& atom = store[a];
      const TableSubgroup& base = store[idx];
      if (table.contains_all(base.elements, atom.generators)) continue;
      TableSubgroup joined{table.extend(base.elements, atom.generators), base.generators};
      for (Elem g : atom.generators) {
        if (!base.elements.test(g)) joined.generators.push_back(g);
      }
      store.insert(std::move(joined));
    }
  }
  std::vector<TableSubgroup> raw = store.release();
  const auto perm = canonical_order(raw);
  std::vector<TableSubgroup> out;
  out.reserve(raw.size());
  for (std::size_t i : perm) out.push_back(std::move(raw[i]));
  return out;
}

FiniteGroup::FiniteGroup(PermGroup group, std::uint64_t cap)
    : state_(std::make_shared<State>(std::move(group), cap)) {}

bool FiniteGroup::is_solvable() const {
  std::call_once(state_->solvable_once, [this] {
    const GroupTable& t = state_->table;
    TableSubgroup d = t.whole();
    for (;;) {
      if (d.order() == 1) {
        state_->solvable = true;
        return;
      }
      TableSubgroup next = derived_subgroup(t, d);
      if (next.order() == d.order()) {
        state_->solvable = false;
        return;
      }
      d = std::move(next);
    }
  });
  return state_->solvable;
}

const std::vector<TableSubgroup>& FiniteGroup::normal_subgroups() const {
  std::call_once(state_->normal_once,
                 [this] { state_->normal = compute_normal_subgroups(state_->table); });
  return state_->normal;
}

std::optional<std::size_t> FiniteGroup::normal_index(const ElementSet& s) const {
  const auto& ns = normal_subgroups();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i].elements == s) return i;
  }
  return std::nullopt;
}

const SubgroupLattice& FiniteGroup::lattice() const {
  const bool solvable = is_solvable();
  std::call_once(state_->lattice_once,
                 [this, solvable] { state_->lattice = compute_lattice(state_->table, solvable); });
  return state_->lattice;
}

SubgroupHandle FiniteGroup::handle(const TableSubgroup& s) const {
  std::vector<Permutation> gens;
  gens.reserve(s.generators.size());
  for (Elem g : s.generators) gens.push_back(table().element(g));
  return SubgroupHandle::unchecked(group(), std::move(gens));
}

TableSubgroup FiniteGroup::tabulate(const SubgroupHandle& h) const {
  std::vector<Elem> gens;
  for (const auto& g : h.generators()) {
    auto idx = table().index_of(g);
    if (!idx) throw std::invalid_argument("generator not in group");
    if (*idx != 0) gens.push_back(*idx);
  }
  return table().subgroup(std::move(gens));
}

std::vector<SubgroupHandle> all_subgroups(const PermGroup& group, std::uint64_t order_cap) {
  FiniteGroup fg(group, order_cap);
  std::vector<SubgroupHandle> out;
  for (const auto& s : fg.lattice().subgroups) out.push_back(fg.handle(s));
  return out;
}

std::vector<SubgroupHandle> maximal_subgroups(const PermGroup& group, std::uint64_t order_cap) {
  FiniteGroup fg(group, order_cap);
  const auto& lat = fg.lattice();
  std::vector<SubgroupHandle> out;
  for (std::size_t i : lat.maximal) out.push_back(fg.handle(lat.subgroups[i]));
  return out;
}

std::vector<SubgroupHandle> normal_subgroups(const PermGroup& group, std::uint64_t order_cap) {
  FiniteGroup fg(group, order_cap);
  std::vector<SubgroupHandle> out;
  for (const auto& s : fg.normal_subgroups()) out.push_back(fg.handle(s));
  return out;
}

SubgroupHandle normalizer(const PermGroup& group, const SubgroupHandle& h, std::uint64_t cap) {
  const std::uint64_t ord = group.order();
  if (ord > cap) throw OrderExceedsCap(ord, cap);
  const PermGroup& hg = h.group();
  std::vector<Permutation> hgens;
  for (const auto& x : h.generators()) {
    if (!x.is_identity()) hgens.push_back(x);
  }
  std::vector<Permutation> ngens(hgens);
  PermGroup current(group.degree(), ngens);
  std::uint64_t count = 0;
  const std::size_t deg = group.degree();
  std::vector<Point> img(deg);
  group.for_each_element(
      [&](const Permutation& g) {
        for (const auto& x : hgens) {
          // g^-1 x g sends g(i) to g(x(i)).
          for (std::size_t i = 0; i < deg; ++i) img[g(static_cast<Point>(i))] = g(x(static_cast<Point>(i)));
          if (!hg.contains(Permutation::from_images_unchecked(img))) return;
        }
        ++count;
        if (!current.contains(g)) {
          ngens.push_back(g);
          current = PermGroup(group.degree(), ngens);
        }
      },
      cap);
  if (current.order() != count) throw Error("normalizer generator set disagrees with element count");
  return SubgroupHandle::unchecked(group, std::move(ngens));
}

TableSubgroup normalizer(const GroupTable& table, const TableSubgroup& h) {
  ElementSet n = table.normalizer(table.full(), h);
  // Generators: grow from h's generators until the closure covers n.
  std::vector<Elem> gens = h.generators;
  ElementSet cur = table.closure(gens);
  for (Elem g : n.members()) {
    if (cur.test(g)) continue;
    gens.push_back(g);
    cur = table.closure(gens);
  }
  return TableSubgroup{std::move(cur), std::move(gens)};
}

TableSubgroup sylow_subgroup(const GroupTable& table, std::uint64_t p) {
  const std::uint64_t target = p_part(table.size(), p);
  TableSubgroup sub = table.trivial();
  while (sub.order() < target) {
    // A p-subgroup that is not Sylow has p dividing |N(P) : P|, so N(P)/P
    // contains an element of order p.
    const ElementSet np = table.normalizer(table.full(), sub);
    bool grown = false;
    for (Elem g : np.members()) {
      if (sub.elements.test(g)) continue;
      std::uint64_t k = 1;
      for (Elem y = g; !sub.elements.test(y); y = table.mul(y, g)) ++k;
      if (!is_power_of(k, p)) continue;
      const Elem x = table.power(g, k / p);
      const Elem ext[] = {x};
      sub.elements = table.extend(sub.elements, ext);
      sub.generators.push_back(x);
      grown = true;
      break;
    }
    if (!grown) throw Error("Sylow ascent stalled");
  }
  return sub;
}

SubgroupHandle sylow_subgroup(const PermGroup& group, std::uint64_t p, std::uint64_t seed,
                              std::uint64_t table_cap) {
  const std::uint64_t ord = group.order();
  const std::uint64_t target = p_part(ord, p);
  if (target == 1) return SubgroupHandle::trivial(group);
  if (ord <= table_cap) {
    FiniteGroup fg(group, table_cap);
    return fg.handle(sylow_subgroup(fg.table(), p));
  }
  std::mt19937_64 rng(seed);
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(group.degree());
  constexpr int kBudget = 20'000;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    const Permutation g = group.random_element(rng);
    const std::uint64_t o = g.order();
    if (o % p != 0) continue;
    const Permutation x = g.pow(static_cast<std::int64_t>(o / p_part(o, p)));
    if (current.contains(x)) continue;
    auto trial = gens;
    trial.push_back(x);
    PermGroup cand(group.degree(), trial);
    if (!is_power_of(cand.order(), p)) continue;
    gens = std::move(trial);
    current = std::move(cand);
    if (current.order() == target) return SubgroupHandle::unchecked(group, std::move(gens));
  }
  throw OrderExceedsCap(ord, table_cap);
}

bool is_normal(const PermGroup& group, const SubgroupHandle& h) {
  for (const auto& g : group.generators()) {
    for (const auto& x : h.generators()) {
      if (!h.contains(conjugate(x, g))) return false;
    }
  }
  return true;
}

}  // namespace grpkit
