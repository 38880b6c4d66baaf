#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grpkit/limits.hpp"
#include "grpkit/modrep.hpp"
#include "grpkit/perm_group.hpp"
#include "grpkit/subgroups.hpp"

namespace grpkit {

// C_n on n points (n >= 1).
PermGroup cyclic_group(std::size_t n);
// S_n on n points (n >= 1).
PermGroup symmetric_group(std::size_t n);
// A_n on n points from a 3-cycle and an n-cycle (n odd) or (n-1)-cycle (n even).
PermGroup alternating_group(std::size_t n);
// Dihedral group of order 2n on n points (n >= 3).
PermGroup dihedral_group(std::size_t n);
// C_p^k acting on k disjoint blocks of p points.
PermGroup elementary_abelian_group(std::size_t p, std::size_t k);
// A x B acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
// Action of the group generated by the given invertible matrices on the
// nonzero row vectors of F_p^d (p^d - 1 points). Vector v is point
// (sum v_i p^i) - 1.
PermGroup matrix_group_on_vectors(std::uint32_t p, std::size_t dim, const std::vector<FpMatrix>& matrices);
// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
PermGroup sl23();
// Q_8 inside SL(2,3), on the same 8 points.
PermGroup quaternion8();

// S wr top on top.degree() blocks of S.degree() points each: block b holds
// points b*m .. b*m+m-1, the base generators act blockwise, and the top
// permutes whole blocks. Throws DegreeExceedsCap.
PermGroup wreath_imprimitive(const PermGroup& s, const PermGroup& top, std::uint64_t degree_cap = kDegreeCap);

// The affine group {x -> x*g + v} on the p^dim vectors of the module, using
// the same vector numbering as matrix_group_on_vectors (zero vector is point
// 0). Generators are the linear parts of the module generators, in order,
// followed by the dim unit translations. Throws DegreeExceedsCap.
PermGroup affine_semidirect(const MatModule& module, std::uint64_t degree_cap = kDegreeCap);
// Translation subgroup of a group returned by affine_semidirect.
SubgroupHandle translation_subgroup(const PermGroup& affine, std::size_t dim);

struct TowerLevel {
  unsigned n = 1;
  std::uint64_t p = 2;
  std::size_t module_dim = 0;          // 0 at level 1
  std::uint64_t order = 2;
  std::uint64_t exponent = 2;
  std::optional<PermGroup> group;      // absent once p^dim exceeds the degree cap
  std::optional<MatModule> module;     // action of the previous level, from level 2 on
  std::optional<bool> module_faithful;
  std::optional<bool> module_irreducible;
  std::optional<unsigned> fitting_height;
  // Exactly one minimal normal subgroup, and (from level 2 on) it is the
  // translation subgroup.
  std::optional<bool> unique_minimal_normal;
};

// G_1 = C_2; G_{n+1} = G_n acting affinely on a faithful irreducible
// F_p-module with p the smallest prime = 1 mod exp(G_n). A level whose group
// would exceed the degree cap keeps only its module; asking for a level
// beyond it throws DegreeExceedsCap.
std::vector<TowerLevel> build_tower(unsigned levels, std::uint64_t seed = 1, const Limits& limits = {});

struct CheckedFact {
  std::string statement;
  bool holds = false;
};

struct TheoremACertificate {
  std::uint64_t s_order = 0;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  std::vector<std::uint64_t> r_candidates;  // primes in ((p-1)/2, p)
  std::uint64_t normalizer_quotient_order = 0;
  std::vector<CheckedFact> facts;
  bool all_hold() const;
};

// q: smallest prime above every prime divisor of s_order; p: smallest prime
// above 2q; r: smallest prime in ((p-1)/2, p). Throws SearchBoundExceeded.
TheoremACertificate theorem_a_certificate(std::uint64_t s_order, std::uint64_t bound = kPrimeSearchBound);

struct Fingerprint {
  std::uint64_t order = 0;
  std::map<std::uint64_t, std::uint64_t> element_orders;  // element order -> count
  unsigned derived_length = 0;
  std::uint64_t center_order = 0;
  auto operator<=>(const Fingerprint&) const = default;
};

// Derived length is only meaningful for solvable groups; nonsolvable groups
// get the number of strict drops before the series stabilizes.
Fingerprint fingerprint(const FiniteGroup& fg);

struct CorpusEntry {
  std::string recipe;
  PermGroup group;
  FiniteGroup finite;
  Fingerprint fingerprint;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::size_t draws = 0;
  std::size_t shortfall = 0;  // requested minus delivered
};

// Fingerprint-distinct solvable groups of order <= max_order: the fixed
// anchors first, then seeded random recipes. Throws PreconditionError when
// max_order exceeds the lattice cap or count is 0.
Corpus corpus_generate(std::uint64_t seed, std::size_t count, std::uint64_t max_order);

}  // namespace grpkit
