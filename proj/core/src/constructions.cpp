#include "grpkit/constructions.hpp"

#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"
#include "grpkit/structure.hpp"

namespace grpkit {

namespace {

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<Point> c;
  for (std::size_t i = 0; i < length; ++i) c.push_back(static_cast<Point>(first + i));
  return Permutation::from_cycles(degree, {c});
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

FpVector decode(std::size_t index, std::uint32_t p, std::size_t dim) {
  FpVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return v;
}

std::size_t encode(const FpVector& v, std::uint32_t p) {
  std::size_t index = 0;
  for (std::size_t i = v.size(); i-- > 0;) index = index * p + v[i];
  return index;
}

}  // namespace

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic_group: n must be positive");
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup(n, {cycle_on(n, 0, n)});
}

PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric_group: n must be positive");
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup(2, {cycle_on(2, 0, 2)});
  return PermGroup(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)});
}

PermGroup alternating_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("alternating_group: n must be at least 3");
  Permutation three = cycle_on(n, 0, 3);
  Permutation big = (n % 2 == 1) ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1);
  return PermGroup(n, {std::move(three), std::move(big)});
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral_group: n must be at least 3");
  std::vector<Point> refl(n);
  for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
  return PermGroup(n, {cycle_on(n, 0, n), Permutation(std::move(refl))});
}

PermGroup elementary_abelian_group(std::size_t p, std::size_t k) {
  if (!is_prime(p) || k == 0) throw std::invalid_argument("elementary_abelian_group: need prime p and k >= 1");
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < k; ++b) gens.push_back(cycle_on(p * k, b * p, p));
  return PermGroup(p * k, std::move(gens));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t na = a.degree();
  const std::size_t n = na + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = i < na ? g(static_cast<Point>(i)) : static_cast<Point>(i);
    gens.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = i < na ? static_cast<Point>(i) : static_cast<Point>(na + g(static_cast<Point>(i - na)));
    }
    gens.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup matrix_group_on_vectors(std::uint32_t p, std::size_t dim, const std::vector<FpMatrix>& matrices) {
  const std::uint64_t size = checked_pow(p, dim, kDegreeCap);
  if (size > kDegreeCap) throw DegreeExceedsCap(size, kDegreeCap);
  std::vector<Permutation> gens;
  for (const auto& m : matrices) {
    if (m.p() != p || m.rows() != dim || m.cols() != dim || !m.is_invertible()) {
      throw std::invalid_argument("matrix_group_on_vectors: need invertible dim x dim matrices over F_p");
    }
    std::vector<Point> img(size - 1);
    for (std::size_t x = 1; x < size; ++x) {
      const FpVector v = decode(x, p, dim);
      img[x - 1] = static_cast<Point>(encode(std::span<const std::uint32_t>(v) * m, p) - 1);
    }
    gens.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  return PermGroup(size - 1, std::move(gens));
}

PermGroup sl23() {
  return matrix_group_on_vectors(3, 2, {FpMatrix::from_rows(3, {{1, 1}, {0, 1}}),
                                         FpMatrix::from_rows(3, {{1, 0}, {1, 1}})});
}

PermGroup quaternion8() {
  return matrix_group_on_vectors(3, 2, {FpMatrix::from_rows(3, {{0, 1}, {2, 0}}),
                                         FpMatrix::from_rows(3, {{1, 1}, {1, 2}})});
}

PermGroup wreath_imprimitive(const PermGroup& s, const PermGroup& top, std::uint64_t degree_cap) {
  const std::size_t m = s.degree();
  const std::size_t k = top.degree();
  const std::uint64_t n = std::uint64_t{m} * k;
  if (n > degree_cap) throw DegreeExceedsCap(n, degree_cap);
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < k; ++b) {
    for (const auto& g : s.generators()) {
      if (g.is_identity()) continue;
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < m; ++i) img[b * m + i] = static_cast<Point>(b * m + g(static_cast<Point>(i)));
      gens.push_back(Permutation::from_images_unchecked(std::move(img)));
    }
  }
  for (const auto& t : top.generators()) {
    std::vector<Point> img(n);
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t i = 0; i < m; ++i) img[b * m + i] = static_cast<Point>(t(static_cast<Point>(b)) * m + i);
    }
    gens.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup affine_semidirect(const MatModule& module, std::uint64_t degree_cap) {
  const std::uint32_t p = module.p;
  const std::size_t d = module.dim;
  const std::uint64_t size = checked_pow(p, d, degree_cap);
  if (size > degree_cap) throw DegreeExceedsCap(size, degree_cap);
  std::vector<Permutation> gens;
  for (const auto& a : module.action) {
    std::vector<Point> img(size);
    for (std::size_t x = 0; x < size; ++x) {
      const FpVector v = decode(x, p, d);
      img[x] = static_cast<Point>(encode(std::span<const std::uint32_t>(v) * a, p));
    }
    gens.push_back(Permutation(std::move(img)));
  }
  const PrimeField f(p);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Point> img(size);
    for (std::size_t x = 0; x < size; ++x) {
      FpVector v = decode(x, p, d);
      v[i] = f.add(v[i], 1);
      img[x] = static_cast<Point>(encode(v, p));
    }
    gens.push_back(Permutation::from_images_unchecked(std::move(img)));
  }
  return PermGroup(size, std::move(gens));
}

SubgroupHandle translation_subgroup(const PermGroup& affine, std::size_t dim) {
  const auto gens = affine.generators();
  if (dim > gens.size()) throw std::invalid_argument("translation_subgroup: too few generators");
  return SubgroupHandle(affine, std::vector<Permutation>(gens.end() - static_cast<std::ptrdiff_t>(dim), gens.end()));
}

namespace {

void check_built_level(TowerLevel& level, const FiniteGroup& fg) {
  level.fitting_height = fitting_height(fg);
  const auto minimal = minimal_normal_terms(fg);
  bool unique = minimal.size() == 1;
  if (unique && level.n > 1) {
    const TableSubgroup v = fg.tabulate(translation_subgroup(fg.group(), level.module_dim));
    unique = v.elements == minimal.front().elements;
  }
  level.unique_minimal_normal = unique;
}

}  // namespace

std::vector<TowerLevel> build_tower(unsigned levels, std::uint64_t seed, const Limits& limits) {
  if (levels == 0) throw std::invalid_argument("build_tower: levels must be positive");
  std::vector<TowerLevel> out;
  TowerLevel first;
  first.group = cyclic_group(2);
  std::optional<FiniteGroup> current(std::in_place, *first.group, limits.lattice);
  check_built_level(first, *current);
  out.push_back(std::move(first));

  for (unsigned n = 2; n <= levels; ++n) {
    const TowerLevel& prev = out.back();
    if (!current) {
      throw DegreeExceedsCap(checked_pow(prev.p, prev.module_dim, std::numeric_limits<std::uint64_t>::max()),
                             limits.degree);
    }
    TowerLevel level;
    level.n = n;
    const TowerPrimeChoice choice = next_prime_one_mod(prev.exponent);
    level.p = choice.p;
    MatModule module = find_faithful_irreducible(*current, static_cast<std::uint32_t>(level.p), seed);
    level.module_dim = module.dim;
    level.module_faithful = is_faithful(module, *current);
    level.module_irreducible = is_irreducible(module, seed);
    level.order = prev.order * checked_pow(level.p, module.dim, std::numeric_limits<std::uint64_t>::max() / prev.order);

    const std::uint64_t points = checked_pow(level.p, module.dim, limits.degree);
    if (points <= limits.degree) {
      level.group = affine_semidirect(module, limits.degree);
      current.emplace(*level.group, limits.lattice);
      if (current->order() != level.order) throw Error("affine group has unexpected order");
      level.exponent = exponent(*current);
      check_built_level(level, *current);
    } else {
      current.reset();
      level.exponent = lcm(prev.exponent, level.p);
    }
    level.module = std::move(module);
    out.push_back(std::move(level));
  }
  return out;
}

bool TheoremACertificate::all_hold() const {
  for (const auto& f : facts) {
    if (!f.holds) return false;
  }
  return !facts.empty();
}

TheoremACertificate theorem_a_certificate(std::uint64_t s_order, std::uint64_t bound) {
  if (s_order < 2) throw std::invalid_argument("theorem_a_certificate: s_order must be at least 2");
  TheoremACertificate c;
  c.s_order = s_order;
  const std::uint64_t top = factorize(s_order).back().first;
  c.q = next_prime(top);
  c.p = next_prime(2 * c.q);
  if (c.p > bound) throw SearchBoundExceeded(bound);
  const std::uint64_t half = (c.p - 1) / 2;
  c.r_candidates = primes_between(half, c.p);
  if (c.r_candidates.empty()) throw SearchBoundExceeded(c.p);
  c.r = c.r_candidates.front();
  c.normalizer_quotient_order = c.p * half;

  auto fact = [&](std::string s, bool holds) { c.facts.push_back({std::move(s), holds}); };
  const std::string q = std::to_string(c.q), p = std::to_string(c.p), r = std::to_string(c.r);
  fact("q = " + q + " is prime and exceeds every prime divisor of " + std::to_string(s_order),
       is_prime(c.q) && c.q > top);
  fact("p = " + p + " is prime and p > 2q", is_prime(c.p) && c.p > 2 * c.q);
  fact("q <= (p-1)/2 = " + std::to_string(half), c.q <= half);
  fact("r = " + r + " is prime with (p-1)/2 < r < p", is_prime(c.r) && half < c.r && c.r < c.p);
  fact("r does not divide |S| = " + std::to_string(s_order), s_order % c.r != 0);
  fact("r does not divide p(p-1)/2 = " + std::to_string(c.normalizer_quotient_order),
       c.normalizer_quotient_order % c.r != 0);
  fact("r < p, so r divides |A_p| = p!/2", c.r < c.p);
  return c;
}

Fingerprint fingerprint(const FiniteGroup& fg) {
  const GroupTable& t = fg.table();
  Fingerprint f;
  f.order = t.size();
  for (std::size_t a = 0; a < t.size(); ++a) ++f.element_orders[t.element_order(static_cast<Elem>(a))];
  f.derived_length = static_cast<unsigned>(derived_series_terms(fg).size() - 1);
  f.center_order = t.center().count();
  return f;
}

namespace {

struct Candidate {
  std::string recipe;
  PermGroup group;
};

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

std::vector<Candidate> small_pool() {
  return {
      {"C_2", cyclic_group(2)},      {"C_3", cyclic_group(3)},     {"C_4", cyclic_group(4)},
      {"C_5", cyclic_group(5)},      {"C_6", cyclic_group(6)},     {"C_2^2", elementary_abelian_group(2, 2)},
      {"S_3", symmetric_group(3)},   {"D_8", dihedral_group(4)},   {"Q_8", quaternion8()},
      {"D_10", dihedral_group(5)},   {"A_4", alternating_group(4)}, {"D_12", dihedral_group(6)},
      {"SL(2,3)", sl23()},           {"S_4", symmetric_group(4)},
  };
}

MatModule permutation_module(const PermGroup& h, std::uint32_t p) {
  MatModule m;
  m.p = p;
  m.dim = h.degree();
  m.group = h;
  for (const auto& g : h.generators()) {
    FpMatrix a(p, m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) a.at(i, g(static_cast<Point>(i))) = 1;
    m.action.push_back(std::move(a));
  }
  return m;
}

std::optional<Candidate> affine_draw(std::mt19937_64& rng, std::uint64_t max_order) {
  static const std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  const auto pool = small_pool();
  const std::uint32_t p = kPrimes[rng() % std::size(kPrimes)];
  const int style = static_cast<int>(rng() % 3);
  if (style == 0) {
    // Scalar action of C_d on F_p.
    const std::uint64_t d = pick(rng, 2, 12);
    const PrimeField f(p);
    const std::uint64_t x = pick(rng, 1, p - 1);
    const std::uint32_t lambda = f.pow(static_cast<std::uint32_t>(x), (p - 1) / gcd(d, p - 1));
    MatModule m;
    m.p = p;
    m.dim = 1;
    m.group = cyclic_group(d);
    m.action.push_back(FpMatrix::from_rows(p, {{lambda}}));
    if (std::uint64_t{p} * d > max_order * 4) return std::nullopt;
    return Candidate{"affine(C_" + std::to_string(d) + " scalar " + std::to_string(lambda) + " on F_" +
                         std::to_string(p) + ")",
                     affine_semidirect(m)};
  }
  const Candidate& h = pool[rng() % pool.size()];
  if (checked_pow(p, 1, max_order) > max_order) return std::nullopt;
  MatModule m = permutation_module(h.group, p);
  std::string what = "permutation module";
  if (style == 2) {
    std::vector<MatModule> factors;
    try {
      factors = composition_factors(m, rng(), 40);
    } catch (const Inconclusive&) {
      return std::nullopt;
    }
    m = std::move(factors[rng() % factors.size()]);
    what = "constituent of dim " + std::to_string(m.dim) + " of the permutation module";
  }
  if (checked_pow(p, m.dim, max_order) > max_order) return std::nullopt;
  return Candidate{"affine(" + h.recipe + ", " + what + " over F_" + std::to_string(p) + ")", affine_semidirect(m)};
}

std::optional<Candidate> random_draw(std::mt19937_64& rng, std::uint64_t max_order) {
  const auto pool = small_pool();
  switch (rng() % 7) {
    case 0: {
      const std::uint64_t n = pick(rng, 2, 64);
      return Candidate{"C_" + std::to_string(n), cyclic_group(n)};
    }
    case 1: {
      const std::uint64_t n = pick(rng, 3, 48);
      return Candidate{"D_" + std::to_string(2 * n), dihedral_group(n)};
    }
    case 2: {
      const std::uint64_t a = pick(rng, 2, 12), b = pick(rng, 2, 12);
      return Candidate{"C_" + std::to_string(a) + " x C_" + std::to_string(b),
                       direct_product(cyclic_group(a), cyclic_group(b))};
    }
    case 3: {
      const Candidate& a = pool[rng() % pool.size()];
      const Candidate& b = pool[rng() % pool.size()];
      return Candidate{a.recipe + " x " + b.recipe, direct_product(a.group, b.group)};
    }
    case 4: {
      static const std::size_t kBase[] = {0, 1, 6, 2};      // C_2, C_3, S_3, C_4
      static const std::size_t kTop[] = {0, 1, 6, 2, 7, 10};  // C_2, C_3, S_3, C_4, D_8, A_4
      const Candidate& s = pool[kBase[rng() % std::size(kBase)]];
      const Candidate& t = pool[kTop[rng() % std::size(kTop)]];
      return Candidate{s.recipe + " wr " + t.recipe, wreath_imprimitive(s.group, t.group)};
    }
    case 5: return affine_draw(rng, max_order);
    default: {
      auto inner = affine_draw(rng, max_order);
      if (!inner) return std::nullopt;
      const std::uint64_t n = pick(rng, 2, 6);
      return Candidate{inner->recipe + " x C_" + std::to_string(n), direct_product(inner->group, cyclic_group(n))};
    }
  }
}

}  // namespace

Corpus corpus_generate(std::uint64_t seed, std::size_t count, std::uint64_t max_order) {
  if (count == 0) throw PreconditionError("corpus_generate: count must be positive");
  if (max_order > kLatticeCap) throw PreconditionError("corpus_generate: max_order exceeds the lattice cap");
  Corpus corpus;
  std::set<Fingerprint> seen;
  auto offer = [&](Candidate c) {
    if (corpus.entries.size() >= count) return;
    if (c.group.order() > max_order) return;
    FiniteGroup fg(c.group, max_order);
    if (!fg.is_solvable()) return;
    Fingerprint f = fingerprint(fg);
    if (!seen.insert(f).second) return;
    corpus.entries.push_back({std::move(c.recipe), std::move(c.group), std::move(fg), std::move(f)});
  };

  const auto tower = build_tower(3, 1);
  std::vector<Candidate> anchors{
      {"S_3", symmetric_group(3)},   {"S_4", symmetric_group(4)}, {"A_4", alternating_group(4)},
      {"C_6", cyclic_group(6)},      {"D_8", dihedral_group(4)},  {"SL(2,3)", sl23()},
      {"tower G_2", *tower[1].group}, {"tower G_3", *tower[2].group},
  };
  for (auto& a : anchors) offer(std::move(a));

  const std::size_t max_draws = 100 * count + 1000;
  while (corpus.entries.size() < count && corpus.draws < max_draws) {
    std::seed_seq sequence{seed & 0xffffffffu, seed >> 32, static_cast<std::uint64_t>(corpus.draws)};
    std::mt19937_64 rng(sequence);
    ++corpus.draws;
    std::optional<Candidate> c;
    try {
      c = random_draw(rng, max_order);
    } catch (const CapError&) {
      continue;
    }
    if (c) offer(std::move(*c));
  }
  corpus.shortfall = count - corpus.entries.size();
  return corpus;
}

}  // namespace grpkit
