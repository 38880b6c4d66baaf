#include "doctest.h"
#include "oracles.hpp"

#include "grpkit/constructions.hpp"
#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"
#include "grpkit/structure.hpp"

using namespace grpkit;

namespace {

std::vector<std::uint64_t> term_orders(const SeriesReport& s) {
  std::vector<std::uint64_t> out;
  for (const auto& t : s.terms) out.push_back(t.order());
  return out;
}

std::uint64_t product(const std::vector<std::uint64_t>& xs) {
  std::uint64_t p = 1;
  for (auto x : xs) p *= x;
  return p;
}

const PermGroup& tower_g3() {
  static const PermGroup g = *build_tower(3, 1)[2].group;
  return g;
}

}  // namespace

TEST_SUITE("structure") {

TEST_CASE("derived series") {
  const auto s4 = derived_series(symmetric_group(4));
  CHECK(term_orders(s4) == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(is_solvable(symmetric_group(4)));

  // Brute-force commutator subgroups give the same chain.
  auto g = oracle::elements_of(symmetric_group(4));
  std::vector<std::uint64_t> brute{g.size()};
  while (g.size() > 1) {
    g = oracle::derived(g);
    brute.push_back(g.size());
  }
  CHECK(brute == term_orders(s4));

  CHECK(term_orders(derived_series(alternating_group(5))) == std::vector<std::uint64_t>{60});
  CHECK_FALSE(is_solvable(alternating_group(5)));
  CHECK(term_orders(derived_series(cyclic_group(12))) == std::vector<std::uint64_t>{12, 1});
}

TEST_CASE("nilpotency and Fitting height") {
  CHECK(is_nilpotent(dihedral_group(4)));
  CHECK_FALSE(is_nilpotent(symmetric_group(3)));
  CHECK(fitting_height(symmetric_group(3)) == 2);
  CHECK(fitting_height(symmetric_group(4)) == 3);
  CHECK(fitting_height(tower_g3()) == 3);
  CHECK(fitting_height(PermGroup::trivial(2)) == 0);
  CHECK(fitting_height(quaternion8()) == 1);
  CHECK_THROWS_AS(fitting_height(alternating_group(5)), NotSolvable);

  const auto f = fitting_series(FiniteGroup(symmetric_group(4)));
  CHECK(term_orders(f) == std::vector<std::uint64_t>{1, 4, 12, 24});
  CHECK(product(f.factor_orders) == 24);
}

TEST_CASE("O_p and O_p'") {
  CHECK(big_o_p(symmetric_group(4), 2).order() == 4);
  CHECK(big_o_p(symmetric_group(4), 3).order() == 1);
  CHECK(big_o_p(sl23(), 2).order() == 8);
  CHECK(big_o_pprime(sl23(), 3).order() == 8);
  CHECK(big_o_pprime(tower_g3(), 7).order() == 1);
  CHECK(big_o_p(tower_g3(), 7).order() == 49);
}

TEST_CASE("O_p equals the intersection of the Sylow p-subgroups") {
  for (const auto& g : {symmetric_group(4), sl23(), tower_g3(), dihedral_group(12),
                        wreath_imprimitive(cyclic_group(3), cyclic_group(2))}) {
    const FiniteGroup fg(g);
    for (std::uint64_t p : pi_set(fg.order()).primes) {
      CHECK(o_p(fg, p).elements == o_p_sylow_core(fg, p).elements);
    }
  }
}

TEST_CASE("p-length") {
  CHECK(p_length(symmetric_group(4), 2).length == 2);
  CHECK(p_length(symmetric_group(4), 3).length == 1);
  CHECK(p_length(sl23(), 2).length == 1);
  CHECK(p_length(sl23(), 3).length == 1);
  CHECK(p_length(symmetric_group(4), 5).length == 0);
  CHECK(p_length(cyclic_group(9), 2).length == 0);
  CHECK_THROWS_AS(p_length(alternating_group(5), 2), NotSolvable);

  const auto r = p_length(FiniteGroup(symmetric_group(4)), 2);
  CHECK(product(r.series.factor_orders) == 24);
}

TEST_CASE("p-length agrees with the explicit-quotient oracle") {
  for (const auto& g : {symmetric_group(4), sl23(), *build_tower(2, 1)[1].group, dihedral_group(6),
                        wreath_imprimitive(cyclic_group(2), cyclic_group(3)), direct_product(symmetric_group(3), symmetric_group(3)),
                        alternating_group(4), wreath_imprimitive(cyclic_group(3), cyclic_group(2))}) {
    const auto all = oracle::elements_of(g);
    for (std::uint64_t p : pi_set(g.order()).primes) {
      CHECK(p_length(g, p).length == oracle::p_length(all, p));
    }
  }
}

TEST_CASE("chief series and supersolvability") {
  CHECK(chief_series(symmetric_group(3)).factor_orders == std::vector<std::uint64_t>{3, 2});
  CHECK(is_supersolvable(symmetric_group(3)));
  CHECK(chief_series(alternating_group(4)).factor_orders == std::vector<std::uint64_t>{4, 3});
  CHECK_FALSE(is_supersolvable(alternating_group(4)));
  CHECK(is_supersolvable(cyclic_group(6)));

  const FiniteGroup a4(alternating_group(4));
  CHECK(is_supersolvable(a4, SupersolvableCriterion::ChiefFactors) ==
        is_supersolvable(a4, SupersolvableCriterion::PrimeIndexMaximals));
  const auto c = chief_series(FiniteGroup(tower_g3()));
  CHECK(product(c.factor_orders) == 294);
  CHECK(c.factor_orders == std::vector<std::uint64_t>{49, 3, 2});
}

TEST_CASE("series terms are normal and nested") {
  const FiniteGroup fg(wreath_imprimitive(symmetric_group(3), cyclic_group(2)));
  const auto& t = fg.table();
  for (const auto& terms : {chief_series_terms(fg), fitting_series_terms(fg), upper_p_series_terms(fg, 2),
                            upper_p_series_terms(fg, 3)}) {
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
      CHECK(terms[i].elements.is_subset_of(terms[i + 1].elements));
      CHECK(t.is_normal_in(terms[i], t.generators()));
    }
  }
}

TEST_CASE("exponent") {
  CHECK(exponent(FiniteGroup(symmetric_group(3))) == 6);
  CHECK(exponent(FiniteGroup(cyclic_group(2))) == 2);
  CHECK(exponent(FiniteGroup(tower_g3())) == 42);
  CHECK(oracle::exponent(oracle::elements_of(tower_g3())) == 42);
  CHECK(exponent(tower_g3()) == 42);
  CHECK_THROWS_AS(exponent(alternating_group(8), 1000), OrderExceedsCap);
}

TEST_CASE("minimal normal subgroups") {
  const auto s4 = minimal_normal_subgroups(symmetric_group(4));
  REQUIRE(s4.size() == 1);
  CHECK(s4.front().order() == 4);

  const auto g3 = minimal_normal_subgroups(tower_g3());
  REQUIRE(g3.size() == 1);
  CHECK(g3.front().order() == 49);

  const auto v = minimal_normal_subgroups(elementary_abelian_group(2, 2));
  CHECK(v.size() == 3);
  for (const auto& h : v) CHECK(h.order() == 2);
}

TEST_CASE("SeriesKind names") {
  CHECK(to_string(SeriesKind::Chief) == "chief");
  CHECK(to_string(SeriesKind::PSeries) == "p_series");
}

}  // TEST_SUITE
