#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "grpkit/constructions.hpp"
#include "grpkit/errors.hpp"
#include "grpkit/fp_matrix.hpp"
#include "grpkit/modrep.hpp"
#include "grpkit/structure.hpp"

using namespace grpkit;

namespace {

MatModule one_dim(const PermGroup& g, std::uint32_t p, std::vector<std::int64_t> scalars) {
  MatModule m;
  m.p = p;
  m.dim = 1;
  m.group = g;
  for (auto s : scalars) m.action.push_back(FpMatrix::from_rows(p, {{s}}));
  return m;
}

// The 2-dimensional constituent of the permutation module of S_3 over F_7:
// vectors with coordinate sum zero, basis e1 - e3, e2 - e3.
MatModule s3_standard() {
  MatModule m;
  m.p = 7;
  m.dim = 2;
  m.group = symmetric_group(3);  // generators (1,2), (1,2,3)
  m.action.push_back(FpMatrix::from_rows(7, {{0, 1}, {1, 0}}));
  m.action.push_back(FpMatrix::from_rows(7, {{-1, 1}, {-1, 0}}));
  return m;
}

std::vector<std::size_t> sorted_dims(const std::vector<MatModule>& ms) {
  std::vector<std::size_t> d;
  for (const auto& m : ms) d.push_back(m.dim);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_SUITE("modrep") {

TEST_CASE("prime field and matrices") {
  const PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  CHECK_THROWS(PrimeField(8));

  const auto a = FpMatrix::from_rows(7, {{1, 2}, {3, 4}});
  CHECK(a.determinant() == 5);  // -2 mod 7
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.rank() == 2);
  const auto s = FpMatrix::from_rows(7, {{1, 2}, {2, 4}});
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse(), std::domain_error);
  const auto ker = s.left_nullspace();
  REQUIRE(ker.size() == 1);
  const FpVector z = std::span<const std::uint32_t>(ker[0]) * s;
  CHECK(z == FpVector{0, 0});
}

TEST_CASE("echelon basis") {
  EchelonBasis b(5, 3);
  CHECK(b.add({1, 2, 3}));
  CHECK_FALSE(b.add({2, 4, 1}));
  CHECK(b.add({0, 1, 0}));
  CHECK(b.dim() == 2);
  CHECK(b.contains({1, 0, 3}));
  CHECK_FALSE(b.contains({0, 0, 1}));
  const auto c = b.coordinates(FpVector{1, 3, 3});
  CHECK(c.size() == 2);
}

TEST_CASE("next_prime_one_mod") {
  CHECK(next_prime_one_mod(2).p == 3);
  CHECK(next_prime_one_mod(6).p == 7);
  CHECK(next_prime_one_mod(42).p == 43);
  CHECK(next_prime_one_mod(1806).p == 3613);
  CHECK(next_prime_one_mod(42).e == 42);
  CHECK_THROWS_AS(next_prime_one_mod(42, 40), SearchBoundExceeded);
}

TEST_CASE("regular module") {
  const auto c2 = regular_module(FiniteGroup(cyclic_group(2)), 3);
  CHECK(c2.dim == 2);
  CHECK(c2.action.size() == 1);
  CHECK_FALSE(c2.action[0].is_identity());
  CHECK((c2.action[0] * c2.action[0]).is_identity());

  const FiniteGroup s3(symmetric_group(3));
  const auto r = regular_module(s3, 7);
  CHECK(r.dim == 6);
  CHECK(homomorphism_spot_check(r, s3.table(), 1, 100));
  CHECK_THROWS_AS(regular_module(s3, 3), PDividesOrder);
}

TEST_CASE("spin") {
  const FiniteGroup s3(symmetric_group(3));
  const auto r = regular_module(s3, 7);
  const FpVector ones(6, 1);
  CHECK(spin(r, std::vector<FpVector>{ones}).dim() == 1);
  CHECK(spin(r, std::vector<FpVector>{FpVector(6, 0)}).dim() == 0);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    FpVector v(6);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 7);
    const auto s = spin(r, std::vector<FpVector>{v});
    const auto again = spin(r, s.rows());
    CHECK(again.dim() == s.dim());
    CHECK(again.rows() == s.rows());
  }
}

TEST_CASE("submodule and quotient actions are homomorphisms") {
  const FiniteGroup s3(symmetric_group(3));
  const auto r = regular_module(s3, 7);
  const auto triv = spin(r, std::vector<FpVector>{FpVector(6, 1)});
  const auto sub = submodule(r, triv);
  const auto quo = quotient_module(r, triv);
  CHECK(sub.dim == 1);
  CHECK(quo.dim == 5);
  CHECK(sub.action[0].is_identity());
  CHECK(homomorphism_spot_check(sub, s3.table(), 2, 100));
  CHECK(homomorphism_spot_check(quo, s3.table(), 3, 100));
}

TEST_CASE("irreducibility and faithfulness of small modules") {
  const auto c2 = cyclic_group(2);
  const auto sign = one_dim(c2, 3, {-1});
  CHECK(is_irreducible(sign));
  CHECK(is_faithful(sign));

  const auto trivial = one_dim(c2, 3, {1});
  CHECK(is_irreducible(trivial));
  CHECK_FALSE(is_faithful(trivial));

  const auto std2 = s3_standard();
  CHECK(homomorphism_spot_check(std2, FiniteGroup(std2.group).table(), 4, 100));
  CHECK(is_irreducible(std2));
  CHECK(is_faithful(std2));
  CHECK_FALSE(oracle::has_invariant_subspace(std2));
  CHECK(oracle::kernel_order(std2) == 1);

  const FiniteGroup s3(symmetric_group(3));
  CHECK_FALSE(is_irreducible(regular_module(s3, 7)));
}

TEST_CASE("faithful irreducible search") {
  const FiniteGroup c2(cyclic_group(2));
  const auto m = find_faithful_irreducible(c2, 3);
  CHECK(m.dim == 1);
  CHECK(m.action[0].at(0, 0) == 2);

  const FiniteGroup s3(symmetric_group(3));
  const auto m2 = find_faithful_irreducible(s3, 7);
  CHECK(m2.dim == 2);
  CHECK_FALSE(oracle::has_invariant_subspace(m2));
  CHECK(oracle::kernel_order(m2) == 1);

  CHECK_THROWS_AS(find_faithful_irreducible(s3, 3), PDividesOrder);
  CHECK_THROWS_AS(find_faithful_irreducible(s3, 5), PreconditionError);
  // C_2 x C_2 has no faithful irreducible module over F_3.
  CHECK_THROWS_AS(find_faithful_irreducible(FiniteGroup(elementary_abelian_group(2, 2)), 3), SearchFailed);
}

TEST_CASE("the order-294 tower level over F_43") {
  const auto g3 = *build_tower(3, 1)[2].group;
  const FiniteGroup fg(g3);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto m = find_faithful_irreducible(fg, 43, seed);
    CHECK((m.dim == 3 || m.dim == 6));
    CHECK(is_irreducible(m, seed + 10));
    CHECK(is_faithful(m, fg));
    CHECK(oracle::kernel_order(m) == 1);
    CHECK(homomorphism_spot_check(m, fg.table(), seed, 100));
    if (m.dim <= 3) {
      // 43 > 11: the exhaustive line scan is still cheap at dimension 3.
      CHECK_FALSE(oracle::has_invariant_subspace(m));
    }
  }
}

TEST_CASE("exhaustive scan on modules found over small fields") {
  struct Case {
    PermGroup g;
    std::uint32_t p;
  };
  const std::vector<Case> cases{{cyclic_group(2), 3},   {cyclic_group(3), 7},      {symmetric_group(3), 7},
                                {quaternion8(), 5},     {cyclic_group(5), 11},     {dihedral_group(5), 11},
                                {cyclic_group(4), 5}};
  for (const auto& c : cases) {
    const FiniteGroup fg(c.g);
    const auto m = find_faithful_irreducible(fg, c.p);
    REQUIRE(m.dim <= 3);
    CHECK_FALSE(oracle::has_invariant_subspace(m));
    CHECK(oracle::kernel_order(m) == 1);
  }
}

TEST_CASE("dimension accounting in full splits") {
  const FiniteGroup s3(symmetric_group(3));
  CHECK(sorted_dims(composition_factors(regular_module(s3, 7))) == std::vector<std::size_t>{1, 1, 2, 2});

  const FiniteGroup q8(quaternion8());
  CHECK(sorted_dims(composition_factors(regular_module(q8, 5))) == std::vector<std::size_t>{1, 1, 1, 1, 2, 2});

  for (const auto& g : {cyclic_group(6), dihedral_group(4), alternating_group(4), *build_tower(2, 1)[1].group,
                        dihedral_group(5)}) {
    const FiniteGroup fg(g);
    const auto p = static_cast<std::uint32_t>(next_prime_one_mod(exponent(fg)).p);
    const auto factors = composition_factors(regular_module(fg, p));
    std::size_t total = 0;
    for (const auto& f : factors) {
      total += f.dim;
      if (f.dim <= 3 && p <= 11) CHECK_FALSE(oracle::has_invariant_subspace(f));
    }
    CHECK(total == fg.order());
  }
}

TEST_CASE(".mod round trip") {
  const auto m = s3_standard();
  std::ostringstream out;
  write_module(out, m);
  std::istringstream in(out.str());
  const auto f = read_module(in);
  CHECK(f.p == 7);
  CHECK(f.dim == 2);
  REQUIRE(f.matrices.size() == 2);
  CHECK(f.matrices[1] == m.action[1]);
  const auto back = attach_group(f, symmetric_group(3));
  CHECK(is_irreducible(back));
  CHECK_THROWS_AS(attach_group(f, cyclic_group(3)), std::invalid_argument);

  std::istringstream bad("p 6\ndim 1\ngens 0\n");
  CHECK_THROWS_AS(read_module(bad), ParseError);
  std::istringstream unreduced("p 5\ndim 1\ngens 1\n7\n");
  CHECK_THROWS_AS(read_module(unreduced), ParseError);
  std::istringstream truncated("p 5\ndim 2\ngens 1\n1 0\n0\n");
  CHECK_THROWS_AS(read_module(truncated), ParseError);
}

}  // TEST_SUITE
