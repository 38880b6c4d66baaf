#include <set>

#include "doctest.h"

#include "grpkit/constructions.hpp"
#include "grpkit/errors.hpp"
#include "grpkit/structure.hpp"
#include "grpkit/verify.hpp"

using namespace grpkit;

namespace {

const Corpus& corpus() {
  static const Corpus c = corpus_generate(3, 80, 2000);
  return c;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("full-spectrum maximal check: S_4 fails with A_4 as witness") {
  const auto r = monakhov_check(symmetric_group(4), "S_4");
  CHECK_FALSE(r.property_holds);
  CHECK_FALSE(r.vacuous);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->order() == 12);
  for (const auto& g : r.witness->generators()) CHECK(g.is_even());
}

TEST_CASE("full-spectrum maximal check: SL(2,3) holds through its C_6 maximals") {
  const auto r = monakhov_check(sl23());
  CHECK(r.property_holds);
  CHECK_FALSE(r.vacuous);
  CHECK_FALSE(r.witness.has_value());
  CHECK(r.full_spectrum_maximals.size() == 4);
  for (const auto& m : r.full_spectrum_maximals) {
    CHECK(m.order == 6);
    CHECK(m.supersolvable);
  }
}

TEST_CASE("full-spectrum maximal check: the order-294 level holds vacuously") {
  const auto r = monakhov_check(*build_tower(3, 1)[2].group);
  CHECK(r.property_holds);
  CHECK(r.vacuous);
  std::set<std::uint64_t> orders(r.maximal_orders.begin(), r.maximal_orders.end());
  CHECK(orders == std::set<std::uint64_t>{6, 98, 147});
}

TEST_CASE("normalizer of a Sylow image in a quotient") {
  const auto s4 = symmetric_group(4);
  const SubgroupHandle v4(s4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                               Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  const auto r = verify_lemma_normalizer_quotient(s4, v4, 3);
  CHECK(r.holds);
  CHECK(r.lhs_order == 6);
  CHECK(r.rhs_order == 6);

  const auto t = verify_lemma_normalizer_quotient(s4, SubgroupHandle::trivial(s4), 2);
  CHECK(t.holds);
  CHECK(t.lhs_order == 8);

  CHECK_THROWS_AS(verify_lemma_normalizer_quotient(s4, SubgroupHandle(s4, {Permutation::from_cycles(4, {{0, 1}})}), 2),
                  NotNormal);
}

TEST_CASE("normalizer-quotient identity on random corpus triples") {
  const auto trials = normalizer_quotient_suite(corpus(), 50, 9);
  CHECK(trials.size() == 50);
  for (const auto& t : trials) {
    INFO(t.recipe);
    CHECK(t.result.holds);
    CHECK(t.result.lhs_order == t.result.rhs_order);
  }
}

TEST_CASE("Sylow normalizers in alternating groups") {
  const auto five = verify_sylow_normalizer_alternating(5);
  CHECK(five.computed == 10);
  CHECK(five.formula == 10);
  CHECK(five.agree);
  const auto seven = verify_sylow_normalizer_alternating(7);
  CHECK(seven.computed == 21);
  CHECK(seven.agree);
  CHECK_THROWS_AS(verify_sylow_normalizer_alternating(11), OrderExceedsCap);
}

TEST_CASE("tower report") {
  const auto r = verify_theorem_b(4);
  CHECK(r.all_passed);
  REQUIRE(r.levels.size() == 4);
  CHECK(r.levels[1].fitting_height == 2u);
  CHECK(r.levels[1].monakhov->property_holds);
  CHECK(r.levels[2].fitting_height == 3u);
  CHECK(r.levels[2].monakhov->vacuous);
  CHECK_FALSE(r.levels[3].built);
  CHECK(*r.levels[3].module_faithful);
  CHECK(*r.levels[3].module_irreducible);
}

TEST_CASE("p-length sweep") {
  const auto r = verify_theorem_c(corpus());
  CHECK(r.corpus_size == corpus().entries.size());
  CHECK(r.violations.empty());
  CHECK(r.control_as_expected);
  CHECK_FALSE(r.control.has_property);

  bool saw_sl23 = false;
  for (const auto& e : r.entries) {
    if (e.recipe != "SL(2,3)") continue;
    saw_sl23 = true;
    CHECK(e.has_property);
    CHECK(e.p_lengths == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}});
  }
  CHECK(saw_sl23);
}

TEST_CASE("supersolvable groups have a normal Sylow subgroup for the largest prime") {
  const auto r = verify_supersolvable_sylow_fact(corpus());
  CHECK(r.holds());
  CHECK(r.supersolvable_checked > 10);
}

TEST_CASE("the property passes to quotients") {
  const auto r = verify_quotient_stability(corpus());
  CHECK(r.holds());
  CHECK(r.quotients_checked > 50);
}

TEST_CASE("corpus-wide structure hierarchy") {
  for (const auto& e : corpus().entries) {
    INFO(e.recipe);
    const bool nil = is_nilpotent(e.finite);
    const bool ss = is_supersolvable(e.finite, SupersolvableCriterion::ChiefFactors);
    CHECK(ss == is_supersolvable(e.finite, SupersolvableCriterion::PrimeIndexMaximals));
    if (nil) CHECK(ss);
    if (ss) CHECK(e.finite.is_solvable());
    for (std::uint64_t p : pi_set(e.finite.order()).primes) {
      CHECK(p_length(e.finite, p).length <= fitting_height(e.finite));
    }
  }
}

}  // TEST_SUITE
