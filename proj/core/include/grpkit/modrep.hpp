#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "grpkit/fp_matrix.hpp"
#include "grpkit/group_table.hpp"
#include "grpkit/limits.hpp"
#include "grpkit/perm_group.hpp"
#include "grpkit/subgroups.hpp"

namespace grpkit {

// A right F_p G-module: action[i] is the matrix of group.generators()[i],
// acting on row vectors (v -> v * action[i]).
struct MatModule {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<FpMatrix> action;
  PermGroup group = PermGroup::trivial(1);
};

struct TowerPrimeChoice {
  std::uint64_t e = 1;
  std::uint64_t p = 2;
};

// Smallest prime p > e with p = 1 (mod e). Throws SearchBoundExceeded past bound.
TowerPrimeChoice next_prime_one_mod(std::uint64_t e, std::uint64_t bound = kPrimeSearchBound);

// F_p G with G acting by right multiplication on the basis indexed by the
// table's elements. Throws PDividesOrder.
MatModule regular_module(const FiniteGroup& fg, std::uint32_t p);

// Smallest subspace containing the seeds and invariant under every matrix.
EchelonBasis spin(std::span<const FpMatrix> action, std::uint32_t p, std::size_t dim,
                  std::span<const FpVector> seeds);
EchelonBasis spin(const MatModule& module, std::span<const FpVector> seeds);

// Action on an invariant subspace (coordinates w.r.t. the echelon rows) and on
// the quotient (coordinates on the non-pivot columns).
MatModule submodule(const MatModule& module, const EchelonBasis& sub);
MatModule quotient_module(const MatModule& module, const EchelonBasis& sub);

// Matrix of a word in generator positions, multiplied left to right.
FpMatrix word_matrix(const MatModule& module, std::span<const std::size_t> word);
// Matrix of a table element; the table must belong to module.group.
FpMatrix element_matrix(const MatModule& module, const GroupTable& table, Elem g);

// Compares random words in the generators with the table's word for the same
// element; true iff every pair of matrices agrees.
bool homomorphism_spot_check(const MatModule& module, const GroupTable& table, std::uint64_t seed,
                             int trials = 50);

struct NortonOutcome {
  enum class Verdict { Irreducible, Reducible, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::optional<EchelonBasis> submodule;  // proper nonzero invariant subspace when Reducible
};

// Norton's irreducibility test driven by random group-algebra elements (up to
// four random words with uniform coefficients). Irreducibility is certified
// only by an element whose chosen eigenvalue has a one-dimensional eigenspace.
NortonOutcome norton_test(const MatModule& module, std::mt19937_64& rng, int budget = 200);

// Throws Inconclusive when the budget runs out.
bool is_irreducible(const MatModule& module, std::uint64_t seed = 1, int budget = 200);

// Faithful iff every minimal normal subgroup has a generator acting nontrivially
// (a nontrivial kernel would contain a minimal normal subgroup).
bool is_faithful(const MatModule& module, const FiniteGroup& fg);
bool is_faithful(const MatModule& module);

// Splits the regular module (discarding non-faithful pieces) until an
// irreducible faithful constituent appears. Requires exp(G) | p - 1 and
// p not dividing |G|. Throws PDividesOrder, PreconditionError, SearchFailed.
MatModule find_faithful_irreducible(const FiniteGroup& fg, std::uint32_t p, std::uint64_t seed = 1,
                                    int budget = 200);

// Irreducible constituents of a full split, in discovery order.
std::vector<MatModule> composition_factors(const MatModule& module, std::uint64_t seed = 1,
                                           int budget = 200);

// ".mod" text format: "p <p>", "dim <d>", "gens <k>", then k row-major d x d
// integer matrices. Blank lines and '#' comments are ignored on input.
struct ModuleFile {
  std::uint32_t p = 2;
  std::size_t dim = 0;
  std::vector<FpMatrix> matrices;
};

void write_module(std::ostream& os, const MatModule& module);
// Throws ParseError.
ModuleFile read_module(std::istream& is);
// Attaches a group; throws std::invalid_argument on generator-count mismatch.
MatModule attach_group(ModuleFile file, PermGroup group);

}  // namespace grpkit
