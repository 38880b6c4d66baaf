#include "grpkit/structure.hpp"

#include <algorithm>

#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"

namespace grpkit {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Derived: return "derived";
    case SeriesKind::LowerCentral: return "lower_central";
    case SeriesKind::Chief: return "chief";
    case SeriesKind::Fitting: return "fitting";
    case SeriesKind::PSeries: return "p_series";
  }
  return "unknown";
}

namespace {

SeriesReport make_report(const FiniteGroup& fg, SeriesKind kind, const std::vector<TableSubgroup>& terms,
                         bool descending) {
  SeriesReport r;
  r.kind = kind;
  for (const auto& t : terms) r.terms.push_back(fg.handle(t));
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    r.factor_orders.push_back(descending ? terms[i].order() / terms[i + 1].order()
                                         : terms[i + 1].order() / terms[i].order());
  }
  return r;
}

// Index of the largest normal subgroup M >= normal[base] with |M : normal[base]|
// accepted by pred. Joins of such subgroups qualify again, so it is unique.
template <typename Pred>
std::size_t largest_normal_over(const FiniteGroup& fg, std::size_t base, Pred pred) {
  const auto& ns = fg.normal_subgroups();
  const TableSubgroup& b = ns[base];
  std::size_t best = base;
  for (std::size_t i = base + 1; i < ns.size(); ++i) {
    const TableSubgroup& m = ns[i];
    if (m.order() % b.order() != 0) continue;
    if (!b.elements.is_subset_of(m.elements)) continue;
    if (pred(m.order() / b.order()) && m.order() > ns[best].order()) best = i;
  }
  return best;
}

std::size_t join_index(const FiniteGroup& fg, const std::vector<std::size_t>& parts) {
  const auto& ns = fg.normal_subgroups();
  const GroupTable& t = fg.table();
  ElementSet acc = ns[parts.front()].elements;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (ns[parts[i]].elements.is_subset_of(acc)) continue;
    acc = t.extend(acc, ns[parts[i]].generators);
  }
  auto idx = fg.normal_index(acc);
  if (!idx) throw Error("join of normal subgroups is missing from the normal lattice");
  return *idx;
}

std::vector<TableSubgroup> pick(const FiniteGroup& fg, const std::vector<std::size_t>& idx) {
  std::vector<TableSubgroup> out;
  for (std::size_t i : idx) out.push_back(fg.normal_subgroups()[i]);
  return out;
}

}  // namespace

std::vector<TableSubgroup> derived_series_terms(const FiniteGroup& fg) {
  const GroupTable& t = fg.table();
  std::vector<TableSubgroup> terms{t.whole()};
  for (;;) {
    TableSubgroup next = derived_subgroup(t, terms.back());
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

SeriesReport derived_series(const FiniteGroup& fg) {
  return make_report(fg, SeriesKind::Derived, derived_series_terms(fg), true);
}

SeriesReport derived_series(const PermGroup& group, std::uint64_t cap) {
  return derived_series(FiniteGroup(group, cap));
}

unsigned derived_length(const FiniteGroup& fg) {
  const auto terms = derived_series_terms(fg);
  if (terms.back().order() != 1) throw NotSolvable();
  return static_cast<unsigned>(terms.size() - 1);
}

bool is_solvable(const PermGroup& group, std::uint64_t cap) { return FiniteGroup(group, cap).is_solvable(); }

std::vector<TableSubgroup> lower_central_terms(const FiniteGroup& fg) {
  const GroupTable& t = fg.table();
  const auto gens = t.generators();
  std::vector<TableSubgroup> terms{t.whole()};
  for (;;) {
    std::vector<Elem> comms;
    for (Elem x : terms.back().generators) {
      for (Elem g : gens) {
        const Elem c = t.commutator(x, g);
        if (c != 0 && std::find(comms.begin(), comms.end(), c) == comms.end()) comms.push_back(c);
      }
    }
    TableSubgroup next = t.normal_closure(std::move(comms), gens);
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

SeriesReport lower_central_series(const FiniteGroup& fg) {
  return make_report(fg, SeriesKind::LowerCentral, lower_central_terms(fg), true);
}

bool is_nilpotent(const FiniteGroup& fg) { return lower_central_terms(fg).back().order() == 1; }

bool is_nilpotent(const PermGroup& group, std::uint64_t cap) { return is_nilpotent(FiniteGroup(group, cap)); }

std::vector<TableSubgroup> fitting_series_terms(const FiniteGroup& fg) {
  if (!fg.is_solvable()) throw NotSolvable();
  const auto& ns = fg.normal_subgroups();
  const std::size_t top = ns.size() - 1;
  std::vector<std::size_t> idx{0};
  while (idx.back() != top) {
    const std::size_t cur = idx.back();
    std::vector<std::size_t> parts{cur};
    // F(G/N) is the product of the O_q(G/N).
    for (std::uint64_t q : pi_set(fg.order() / ns[cur].order()).primes) {
      parts.push_back(largest_normal_over(fg, cur, [q](std::uint64_t r) { return is_power_of(r, q); }));
    }
    const std::size_t next = join_index(fg, parts);
    if (next == cur) throw NotSolvable();
    idx.push_back(next);
  }
  return pick(fg, idx);
}

SeriesReport fitting_series(const FiniteGroup& fg) {
  return make_report(fg, SeriesKind::Fitting, fitting_series_terms(fg), false);
}

unsigned fitting_height(const FiniteGroup& fg) {
  return static_cast<unsigned>(fitting_series_terms(fg).size() - 1);
}

unsigned fitting_height(const PermGroup& group, std::uint64_t cap) {
  return fitting_height(FiniteGroup(group, cap));
}

TableSubgroup o_p(const FiniteGroup& fg, std::uint64_t p) {
  const std::size_t i = largest_normal_over(fg, 0, [p](std::uint64_t r) { return is_power_of(r, p); });
  return fg.normal_subgroups()[i];
}

TableSubgroup o_pprime(const FiniteGroup& fg, std::uint64_t p) {
  const std::size_t i = largest_normal_over(fg, 0, [p](std::uint64_t r) { return r % p != 0; });
  return fg.normal_subgroups()[i];
}

TableSubgroup with_generators(const GroupTable& table, const ElementSet& elements) {
  std::vector<Elem> gens;
  ElementSet cur = table.closure(gens);
  for (Elem g : elements.members()) {
    if (cur.test(g)) continue;
    gens.push_back(g);
    cur = table.closure(gens);
  }
  return TableSubgroup{std::move(cur), std::move(gens)};
}

TableSubgroup o_p_sylow_core(const FiniteGroup& fg, std::uint64_t p) {
  const GroupTable& t = fg.table();
  const TableSubgroup sylow = sylow_subgroup(t, p);
  const std::vector<Elem> members = sylow.elements.members();
  ElementSet core = sylow.elements;
  for (std::size_t g = 0; g < t.size() && core.count() > 1; ++g) {
    ElementSet conj(t.size());
    for (Elem x : members) conj.insert(t.conj(x, static_cast<Elem>(g)));
    core = core.intersection(conj);
  }
  return with_generators(t, core);
}

SubgroupHandle big_o_p(const PermGroup& group, std::uint64_t p, std::uint64_t cap) {
  FiniteGroup fg(group, cap);
  return fg.handle(o_p(fg, p));
}

SubgroupHandle big_o_pprime(const PermGroup& group, std::uint64_t p, std::uint64_t cap) {
  FiniteGroup fg(group, cap);
  return fg.handle(o_pprime(fg, p));
}

std::vector<TableSubgroup> upper_p_series_terms(const FiniteGroup& fg, std::uint64_t p) {
  if (!fg.is_solvable()) throw NotSolvable();
  const std::size_t top = fg.normal_subgroups().size() - 1;
  std::vector<std::size_t> idx{0};
  for (;;) {
    idx.push_back(largest_normal_over(fg, idx.back(), [p](std::uint64_t r) { return r % p != 0; }));
    if (idx.back() == top) break;
    const std::size_t next =
        largest_normal_over(fg, idx.back(), [p](std::uint64_t r) { return is_power_of(r, p); });
    if (next == idx.back()) throw NotSolvable();
    idx.push_back(next);
    if (next == top) break;
  }
  return pick(fg, idx);
}

PLengthResult p_length(const FiniteGroup& fg, std::uint64_t p) {
  const auto terms = upper_p_series_terms(fg, p);
  PLengthResult r;
  r.p = p;
  r.series = make_report(fg, SeriesKind::PSeries, terms, false);
  for (std::size_t i = 1; i < r.series.factor_orders.size(); i += 2) {
    if (r.series.factor_orders[i] > 1) ++r.length;
  }
  return r;
}

PLengthResult p_length(const PermGroup& group, std::uint64_t p, std::uint64_t cap) {
  return p_length(FiniteGroup(group, cap), p);
}

std::vector<TableSubgroup> chief_series_terms(const FiniteGroup& fg) {
  const auto& ns = fg.normal_subgroups();
  const std::size_t top = ns.size() - 1;
  std::vector<std::size_t> idx{0};
  while (idx.back() != top) {
    const TableSubgroup& cur = ns[idx.back()];
    // Sorted order makes the first proper normal overgroup minimal over cur.
    for (std::size_t j = 0; j < ns.size(); ++j) {
      if (ns[j].order() <= cur.order() || ns[j].order() % cur.order() != 0) continue;
      if (cur.elements.is_subset_of(ns[j].elements)) {
        idx.push_back(j);
        break;
      }
    }
  }
  return pick(fg, idx);
}

SeriesReport chief_series(const FiniteGroup& fg) {
  return make_report(fg, SeriesKind::Chief, chief_series_terms(fg), false);
}

SeriesReport chief_series(const PermGroup& group, std::uint64_t cap) {
  return chief_series(FiniteGroup(group, cap));
}

namespace {

bool chief_factor_criterion(const FiniteGroup& fg) {
  const auto terms = chief_series_terms(fg);
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (!is_prime(terms[i + 1].order() / terms[i].order())) return false;
  }
  return true;
}

bool maximal_index_criterion(const FiniteGroup& fg) {
  const auto& lat = fg.lattice();
  for (std::size_t i : lat.maximal) {
    if (!is_prime(fg.order() / lat.subgroups[i].order())) return false;
  }
  return true;
}

}  // namespace

bool is_supersolvable(const FiniteGroup& fg, SupersolvableCriterion criterion) {
  switch (criterion) {
    case SupersolvableCriterion::ChiefFactors: return chief_factor_criterion(fg);
    case SupersolvableCriterion::PrimeIndexMaximals: return maximal_index_criterion(fg);
    case SupersolvableCriterion::Both: {
      const bool a = chief_factor_criterion(fg);
      if (a != maximal_index_criterion(fg)) {
        throw Error("supersolvability criteria disagree");
      }
      return a;
    }
  }
  return false;
}

bool is_supersolvable(const PermGroup& group, std::uint64_t cap) {
  return is_supersolvable(FiniteGroup(group, cap));
}

std::uint64_t exponent(const FiniteGroup& fg) {
  std::uint64_t e = 1;
  for (std::size_t x = 0; x < fg.table().size(); ++x) {
    e = lcm(e, fg.table().element_order(static_cast<Elem>(x)));
  }
  return e;
}

std::vector<TableSubgroup> minimal_normal_terms(const FiniteGroup& fg) {
  const auto& ns = fg.normal_subgroups();
  std::vector<TableSubgroup> out;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j) {
      if (ns[j].order() < ns[i].order() && ns[j].elements.is_subset_of(ns[i].elements)) minimal = false;
    }
    if (minimal) out.push_back(ns[i]);
  }
  return out;
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& fg) {
  std::vector<SubgroupHandle> out;
  for (const auto& m : minimal_normal_terms(fg)) out.push_back(fg.handle(m));
  return out;
}

std::vector<SubgroupHandle> minimal_normal_subgroups(const PermGroup& group, std::uint64_t cap) {
  return minimal_normal_subgroups(FiniteGroup(group, cap));
}

}  // namespace grpkit
