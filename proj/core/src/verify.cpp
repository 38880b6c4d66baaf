#include "grpkit/verify.hpp"

#include <random>

#include "grpkit/errors.hpp"
#include "grpkit/parallel.hpp"
#include "grpkit/primes.hpp"
#include "grpkit/quotient.hpp"
#include "grpkit/structure.hpp"

namespace grpkit {

MonakhovReport monakhov_check(const FiniteGroup& fg, std::string group_id) {
  MonakhovReport r;
  r.group_id = std::move(group_id);
  r.order = fg.order();
  r.pi_g = pi_set(r.order);
  const SubgroupLattice& lat = fg.lattice();
  for (std::size_t i : lat.maximal) {
    const TableSubgroup& m = lat.subgroups[i];
    r.maximal_orders.push_back(m.order());
    if (!(pi_set(m.order()) == r.pi_g)) continue;
    const SubgroupHandle h = fg.handle(m);
    const bool ss = is_supersolvable(FiniteGroup(h.group(), fg.order()));
    r.full_spectrum_maximals.push_back({m.order(), ss});
    if (!ss && !r.witness) r.witness = h;
  }
  r.property_holds = !r.witness.has_value();
  r.vacuous = r.full_spectrum_maximals.empty();
  return r;
}

MonakhovReport monakhov_check(const PermGroup& group, std::string group_id, std::uint64_t cap) {
  return monakhov_check(FiniteGroup(group, cap), std::move(group_id));
}

NormalizerQuotientResult verify_lemma_normalizer_quotient(const FiniteGroup& fg, const TableSubgroup& normal,
                                                          std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  const GroupTable& t = fg.table();
  const CosetAction action(t, normal);
  const GroupTable qt(action.quotient(), fg.order());

  auto image_of = [&](const std::vector<Elem>& gens) {
    std::vector<Elem> out;
    for (Elem g : gens) out.push_back(*qt.index_of(action.image(g)));
    return qt.subgroup(std::move(out));
  };

  const TableSubgroup sylow = sylow_subgroup(t, p);
  const TableSubgroup n_g_p = normalizer(t, sylow);
  const TableSubgroup p_bar = image_of(sylow.generators);
  const TableSubgroup lhs = normalizer(qt, p_bar);
  const TableSubgroup rhs = image_of(n_g_p.generators);

  NormalizerQuotientResult r;
  r.p = p;
  r.group_order = fg.order();
  r.normal_order = normal.order();
  r.lhs_order = lhs.order();
  r.rhs_order = rhs.order();
  r.holds = lhs.elements == rhs.elements;
  return r;
}

NormalizerQuotientResult verify_lemma_normalizer_quotient(const PermGroup& group, const SubgroupHandle& normal,
                                                          std::uint64_t p, std::uint64_t cap) {
  if (!is_normal(group, normal)) throw NotNormal();
  const FiniteGroup fg(group, cap);
  return verify_lemma_normalizer_quotient(fg, fg.tabulate(normal), p);
}

std::vector<NormalizerQuotientTrial> normalizer_quotient_suite(const Corpus& corpus, std::size_t trials,
                                                               std::uint64_t seed) {
  std::vector<NormalizerQuotientTrial> out;
  if (corpus.entries.empty()) return out;
  std::mt19937_64 rng(seed);
  std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> picks;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::size_t e = rng() % corpus.entries.size();
    const FiniteGroup& fg = corpus.entries[e].finite;
    const std::size_t n = rng() % fg.normal_subgroups().size();
    const auto primes = pi_set(fg.order()).primes;
    const std::uint64_t p = primes.empty() ? 2 : primes[rng() % primes.size()];
    picks.emplace_back(e, n, p);
  }
  out.resize(trials);
  parallel_for(trials, [&](std::size_t i) {
    const auto [e, n, p] = picks[i];
    const CorpusEntry& entry = corpus.entries[e];
    out[i] = {entry.recipe,
              verify_lemma_normalizer_quotient(entry.finite, entry.finite.normal_subgroups()[n], p)};
  });
  return out;
}

SylowNormalizerResult verify_sylow_normalizer_alternating(std::uint64_t p, std::uint64_t cap, std::uint64_t seed) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
  const PermGroup a = alternating_group(p);
  if (a.order() > cap) throw OrderExceedsCap(a.order(), cap);
  const SubgroupHandle sylow = sylow_subgroup(a, p, seed);
  SylowNormalizerResult r;
  r.p = p;
  r.computed = normalizer(a, sylow, cap).order();
  r.formula = p * (p - 1) / 2;
  r.agree = r.computed == r.formula;
  return r;
}

TowerReport verify_theorem_b(unsigned levels, std::uint64_t seed, const Limits& limits) {
  const auto tower = build_tower(levels, seed, limits);
  TowerReport report;
  for (std::size_t i = 0; i < tower.size(); ++i) {
    const TowerLevel& level = tower[i];
    TowerLevelCheck c;
    c.n = level.n;
    c.p = level.p;
    c.module_dim = level.module_dim;
    c.order = level.order;
    c.exponent = level.exponent;
    c.built = level.group.has_value();
    if (i > 0) {
      const TowerLevel& prev = tower[i - 1];
      c.prime_admissible = level.p > prev.p && (level.p - 1) % prev.exponent == 0 && is_prime(level.p);
    }
    c.module_faithful = level.module_faithful;
    c.module_irreducible = level.module_irreducible;
    bool ok = c.prime_admissible;
    if (i > 0) ok = ok && c.module_faithful.value_or(false) && c.module_irreducible.value_or(false);
    if (c.built) {
      c.fitting_height = level.fitting_height;
      c.unique_minimal_normal = level.unique_minimal_normal;
      c.monakhov = monakhov_check(FiniteGroup(*level.group, limits.lattice), "G_" + std::to_string(level.n));
      ok = ok && c.fitting_height == level.n && c.unique_minimal_normal.value_or(false) &&
           c.monakhov->property_holds;
    }
    c.passed = ok;
    report.levels.push_back(std::move(c));
  }
  report.all_passed = !report.levels.empty();
  for (const auto& c : report.levels) report.all_passed = report.all_passed && c.passed;
  return report;
}

PLengthEntry plength_entry(const FiniteGroup& fg, std::string recipe) {
  PLengthEntry e;
  e.recipe = std::move(recipe);
  e.order = fg.order();
  e.solvable = fg.is_solvable();
  const MonakhovReport m = monakhov_check(fg);
  e.has_property = m.property_holds;
  e.vacuous = m.vacuous;
  if (e.solvable) {
    for (std::uint64_t p : pi_set(e.order).primes) e.p_lengths.emplace_back(p, p_length(fg, p).length);
  }
  return e;
}

PLengthSweepReport verify_theorem_c(const Corpus& corpus) {
  PLengthSweepReport r;
  r.corpus_size = corpus.entries.size();
  r.entries.resize(corpus.entries.size());
  parallel_for(corpus.entries.size(), [&](std::size_t i) {
    r.entries[i] = plength_entry(corpus.entries[i].finite, corpus.entries[i].recipe);
  });
  for (const auto& e : r.entries) {
    if (!e.solvable || !e.has_property) continue;
    for (const auto& [p, l] : e.p_lengths) {
      if (l >= 2) {
        r.violations.push_back(e.recipe + ": property holds but l_" + std::to_string(p) + " = " + std::to_string(l));
      }
    }
  }
  r.control = plength_entry(FiniteGroup(symmetric_group(4)), "S_4");
  r.control_as_expected = !r.control.has_property && !r.control.p_lengths.empty() &&
                          r.control.p_lengths.front() == std::pair<std::uint64_t, unsigned>{2, 2};
  return r;
}

SylowFactReport verify_supersolvable_sylow_fact(const Corpus& corpus) {
  SylowFactReport r;
  std::vector<int> verdict(corpus.entries.size(), -1);
  parallel_for(corpus.entries.size(), [&](std::size_t i) {
    const FiniteGroup& fg = corpus.entries[i].finite;
    if (!fg.is_solvable() || !is_supersolvable(fg)) return;
    const std::uint64_t p = pi_set(fg.order()).largest();
    const GroupTable& t = fg.table();
    const TableSubgroup sylow = sylow_subgroup(t, p);
    verdict[i] = t.is_normal_in(sylow, t.generators()) ? 1 : 0;
  });
  for (std::size_t i = 0; i < verdict.size(); ++i) {
    if (verdict[i] < 0) continue;
    ++r.supersolvable_checked;
    if (verdict[i] == 0) r.failures.push_back(corpus.entries[i].recipe);
  }
  return r;
}

QuotientStabilityReport verify_quotient_stability(const Corpus& corpus) {
  QuotientStabilityReport r;
  std::vector<std::size_t> checked(corpus.entries.size(), 0);
  std::vector<std::vector<std::string>> failures(corpus.entries.size());
  parallel_for(corpus.entries.size(), [&](std::size_t i) {
    const CorpusEntry& entry = corpus.entries[i];
    const FiniteGroup& fg = entry.finite;
    if (!monakhov_check(fg).property_holds) return;
    const auto& normals = fg.normal_subgroups();
    for (std::size_t k = 1; k + 1 < normals.size(); ++k) {
      const CosetAction action(fg.table(), normals[k]);
      ++checked[i];
      if (!monakhov_check(FiniteGroup(action.quotient(), fg.order())).property_holds) {
        failures[i].push_back(entry.recipe + " / normal subgroup of order " + std::to_string(normals[k].order()));
      }
    }
  });
  for (std::size_t i = 0; i < checked.size(); ++i) {
    r.quotients_checked += checked[i];
    for (auto& f : failures[i]) r.failures.push_back(std::move(f));
  }
  return r;
}

}  // namespace grpkit
