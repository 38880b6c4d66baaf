#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpkit/constructions.hpp"
#include "grpkit/limits.hpp"
#include "grpkit/subgroups.hpp"

namespace grpkit {

struct MonakhovReport {
  struct FullSpectrumMaximal {
    std::uint64_t order = 0;
    bool supersolvable = false;
  };

  std::string group_id;
  std::uint64_t order = 0;
  PrimeSet pi_g;
  std::vector<std::uint64_t> maximal_orders;
  std::vector<FullSpectrumMaximal> full_spectrum_maximals;
  bool property_holds = true;
  bool vacuous = false;  // no maximal subgroup has the full prime spectrum
  std::optional<SubgroupHandle> witness;
};

// Every maximal M with pi(M) = pi(G) must be supersolvable.
MonakhovReport monakhov_check(const FiniteGroup& fg, std::string group_id = {});
MonakhovReport monakhov_check(const PermGroup& group, std::string group_id = {},
                              std::uint64_t cap = kLatticeCap);

struct NormalizerQuotientResult {
  std::uint64_t p = 0;
  std::uint64_t group_order = 0;
  std::uint64_t normal_order = 0;
  std::uint64_t lhs_order = 0;  // |N_{G/N}(PN/N)|
  std::uint64_t rhs_order = 0;  // |N_G(P)N/N|
  bool holds = false;           // equality as subgroups of G/N
};

NormalizerQuotientResult verify_lemma_normalizer_quotient(const FiniteGroup& fg, const TableSubgroup& normal,
                                                          std::uint64_t p);
// Throws NotNormal.
NormalizerQuotientResult verify_lemma_normalizer_quotient(const PermGroup& group, const SubgroupHandle& normal,
                                                          std::uint64_t p, std::uint64_t cap = kLatticeCap);

struct NormalizerQuotientTrial {
  std::string recipe;
  NormalizerQuotientResult result;
};

// Random (G, N, p) triples: G from the corpus, N among its normal subgroups,
// p in pi(G).
std::vector<NormalizerQuotientTrial> normalizer_quotient_suite(const Corpus& corpus, std::size_t trials,
                                                               std::uint64_t seed);

struct SylowNormalizerResult {
  std::uint64_t p = 0;
  std::uint64_t computed = 0;
  std::uint64_t formula = 0;
  bool agree = false;
};

// |N_{A_p}(P)| for a Sylow p-subgroup P, against p(p-1)/2. Throws
// OrderExceedsCap when |A_p| > cap.
SylowNormalizerResult verify_sylow_normalizer_alternating(std::uint64_t p, std::uint64_t cap = kNormalizerCap,
                                                          std::uint64_t seed = 1);

struct TowerLevelCheck {
  unsigned n = 0;
  std::uint64_t p = 0;
  std::size_t module_dim = 0;
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  bool built = false;
  bool prime_admissible = true;  // p = 1 mod exp of the previous level, and increasing
  std::optional<unsigned> fitting_height;
  std::optional<bool> unique_minimal_normal;
  std::optional<MonakhovReport> monakhov;
  std::optional<bool> module_faithful;
  std::optional<bool> module_irreducible;
  bool passed = false;
};

struct TowerReport {
  std::vector<TowerLevelCheck> levels;
  bool all_passed = false;
};

TowerReport verify_theorem_b(unsigned levels, std::uint64_t seed = 1, const Limits& limits = {});

struct PLengthEntry {
  std::string recipe;
  std::uint64_t order = 0;
  bool solvable = false;
  bool has_property = false;
  bool vacuous = false;
  std::vector<std::pair<std::uint64_t, unsigned>> p_lengths;  // over pi(G)
};

struct PLengthSweepReport {
  std::size_t corpus_size = 0;
  std::vector<PLengthEntry> entries;
  std::vector<std::string> violations;  // property holds but some l_p >= 2
  PLengthEntry control;                 // S_4
  bool control_as_expected = false;     // property false and l_2 = 2
};

PLengthEntry plength_entry(const FiniteGroup& fg, std::string recipe);
PLengthSweepReport verify_theorem_c(const Corpus& corpus);

struct SylowFactReport {
  std::size_t supersolvable_checked = 0;
  std::vector<std::string> failures;
  bool holds() const { return failures.empty(); }
};

// Supersolvable groups have a normal Sylow subgroup for their largest prime.
SylowFactReport verify_supersolvable_sylow_fact(const Corpus& corpus);

struct QuotientStabilityReport {
  std::size_t quotients_checked = 0;
  std::vector<std::string> failures;
  bool holds() const { return failures.empty(); }
};

// For every property-holding corpus group and every proper nontrivial
// normal N, the coset-action image of G/N also has the property.
QuotientStabilityReport verify_quotient_stability(const Corpus& corpus);

}  // namespace grpkit
