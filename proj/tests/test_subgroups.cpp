#include <algorithm>
#include <map>

#include "doctest.h"
#include "oracles.hpp"

#include "grpkit/constructions.hpp"
#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"
#include "grpkit/structure.hpp"
#include "grpkit/subgroups.hpp"

using namespace grpkit;

namespace {

std::map<std::uint64_t, int> order_counts(const std::vector<SubgroupHandle>& hs) {
  std::map<std::uint64_t, int> m;
  for (const auto& h : hs) ++m[h.order()];
  return m;
}

std::set<oracle::Elements> as_sets(const std::vector<SubgroupHandle>& hs) {
  std::set<oracle::Elements> out;
  for (const auto& h : hs) out.insert(oracle::elements_of(h.group()));
  return out;
}

const PermGroup& tower_g3() {
  static const PermGroup g = *build_tower(3, 1)[2].group;
  return g;
}

}  // namespace

TEST_SUITE("subgroups") {

TEST_CASE("pi_set") {
  CHECK(pi_set(60).primes == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(pi_set(294).primes == std::vector<std::uint64_t>{2, 3, 7});
  CHECK(pi_set(1).primes.empty());
  CHECK(pi_set(12).is_subset_of(pi_set(60)));
  CHECK_FALSE(pi_set(7).is_subset_of(pi_set(60)));
}

TEST_CASE("all_subgroups matches the join-closure oracle") {
  const auto s3 = all_subgroups(symmetric_group(3));
  CHECK(s3.size() == 6);
  CHECK(order_counts(s3) == std::map<std::uint64_t, int>{{1, 1}, {2, 3}, {3, 1}, {6, 1}});

  CHECK(all_subgroups(cyclic_group(7)).size() == 2);
  CHECK(all_subgroups(cyclic_group(13)).size() == 2);

  const auto s4 = symmetric_group(4);
  const auto subs = all_subgroups(s4);
  CHECK(subs.size() == 30);
  const auto brute = oracle::all_subgroups(oracle::elements_of(s4));
  CHECK(brute.size() == 30);
  CHECK(as_sets(subs) == std::set<oracle::Elements>(brute.begin(), brute.end()));
}

TEST_CASE("lattices of assorted small groups agree with the oracle") {
  const std::vector<PermGroup> groups{
      sl23(), quaternion8(), dihedral_group(6), elementary_abelian_group(2, 3),
      wreath_imprimitive(cyclic_group(2), cyclic_group(2)), alternating_group(5),
      direct_product(symmetric_group(3), cyclic_group(3)), *build_tower(2, 1)[1].group};
  for (const auto& g : groups) {
    const auto subs = all_subgroups(g);
    const auto all = oracle::elements_of(g);
    const auto brute = oracle::all_subgroups(all);
    CHECK(as_sets(subs) == std::set<oracle::Elements>(brute.begin(), brute.end()));
    const auto max_brute = oracle::maximal_filter(brute, all);
    CHECK(as_sets(maximal_subgroups(g)) == std::set<oracle::Elements>(max_brute.begin(), max_brute.end()));
  }
}

TEST_CASE("maximal subgroups") {
  const auto s4 = maximal_subgroups(symmetric_group(4));
  CHECK(s4.size() == 8);
  CHECK(order_counts(s4) == std::map<std::uint64_t, int>{{6, 4}, {8, 3}, {12, 1}});

  CHECK(order_counts(maximal_subgroups(cyclic_group(6))) == std::map<std::uint64_t, int>{{2, 1}, {3, 1}});

  const auto g3 = maximal_subgroups(tower_g3());
  CHECK(order_counts(g3) == std::map<std::uint64_t, int>{{6, 49}, {98, 3}, {147, 1}});
}

TEST_CASE("all_subgroups refuses beyond the cap") {
  CHECK_THROWS_AS(all_subgroups(symmetric_group(5), 100), OrderExceedsCap);
}

TEST_CASE("normalizers") {
  const auto a5 = alternating_group(5);
  const SubgroupHandle c5(a5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(normalizer(a5, c5).order() == 10);

  const auto a7 = alternating_group(7);
  const auto p7 = sylow_subgroup(a7, 7);
  CHECK(normalizer(a7, p7).order() == 21);

  const auto whole = SubgroupHandle::whole(a7);
  CHECK(normalizer(a7, whole).order() == 2520);

  CHECK_THROWS_AS(normalizer(a7, p7, 1000), OrderExceedsCap);
}

TEST_CASE("normalizer contains H and its order divides |G|") {
  const auto g = symmetric_group(4);
  for (const auto& h : all_subgroups(g)) {
    const auto n = normalizer(g, h);
    CHECK(n.order() % h.order() == 0);
    CHECK(24 % n.order() == 0);
    for (const auto& x : h.generators()) CHECK(n.contains(x));
  }
}

TEST_CASE("Sylow subgroups") {
  const auto s4 = symmetric_group(4);
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  CHECK(sylow_subgroup(s4, 5).order() == 1);

  const auto a5 = alternating_group(5);
  const auto p5 = sylow_subgroup(a5, 5);
  CHECK(p5.order() == 5);

  const auto p7 = sylow_subgroup(tower_g3(), 7);
  CHECK(p7.order() == 49);
  const FiniteGroup f(p7.group());
  CHECK(exponent(f) == 7);
  CHECK(is_nilpotent(f));
  CHECK(f.table().center().count() == 49);
}

TEST_CASE("Sylow counts are 1 mod p") {
  for (const auto& g : {symmetric_group(4), alternating_group(5), sl23(), tower_g3()}) {
    for (std::uint64_t p : pi_set(g.order()).primes) {
      const auto s = sylow_subgroup(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      const std::uint64_t count = g.order() / normalizer(g, s).order();
      CHECK(count % p == 1);
    }
  }
}

TEST_CASE("random Sylow search beyond the table cap") {
  const auto a8 = alternating_group(8);
  const auto s = sylow_subgroup(a8, 3, 5, 1000);
  CHECK(s.order() == 9);
  const auto s7 = sylow_subgroup(a8, 7, 5, 1000);
  CHECK(s7.order() == 7);
}

TEST_CASE("is_normal") {
  const auto s4 = symmetric_group(4);
  const SubgroupHandle v4(s4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                               Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  CHECK(is_normal(s4, v4));
  CHECK_FALSE(is_normal(s4, SubgroupHandle(s4, {Permutation::from_cycles(4, {{0, 1}})})));
  const auto a5 = alternating_group(5);
  CHECK_FALSE(is_normal(a5, sylow_subgroup(a5, 5)));
}

TEST_CASE("prime spectra of subgroups lie inside that of G") {
  const auto g = tower_g3();
  const auto pg = pi_set(g.order());
  for (const auto& h : all_subgroups(g)) CHECK(pi_set(h.order()).is_subset_of(pg));
}

TEST_CASE("subgroup handles reject foreign generators") {
  CHECK_THROWS_AS(SubgroupHandle(alternating_group(4), {Permutation::from_cycles(4, {{0, 1}})}),
                  std::invalid_argument);
}

}  // TEST_SUITE
