#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "grpkit/group_table.hpp"
#include "grpkit/limits.hpp"
#include "grpkit/subgroup.hpp"
#include "grpkit/subgroups.hpp"

namespace grpkit {

enum class SeriesKind { Derived, LowerCentral, Chief, Fitting, PSeries };

std::string_view to_string(SeriesKind kind);

// Derived and lower central series are listed from G downwards; chief,
// Fitting and p-series from 1 upwards. factor_orders[i] is the order of the
// factor between terms[i] and terms[i + 1].
struct SeriesReport {
  SeriesKind kind = SeriesKind::Derived;
  std::vector<SubgroupHandle> terms;
  std::vector<std::uint64_t> factor_orders;
};

// Upper p-series 1 <= O_p' <= O_p',p <= O_p',p,p' <= ... ; terms alternate
// p'-steps and p-steps (repeated terms allowed), so length counts the
// nontrivial factors at odd positions.
struct PLengthResult {
  std::uint64_t p = 0;
  unsigned length = 0;
  SeriesReport series;
};

// Table-level series, as subgroups of fg's table.
std::vector<TableSubgroup> derived_series_terms(const FiniteGroup& fg);
std::vector<TableSubgroup> lower_central_terms(const FiniteGroup& fg);
std::vector<TableSubgroup> fitting_series_terms(const FiniteGroup& fg);
std::vector<TableSubgroup> chief_series_terms(const FiniteGroup& fg);
std::vector<TableSubgroup> upper_p_series_terms(const FiniteGroup& fg, std::uint64_t p);

SeriesReport derived_series(const FiniteGroup& fg);
SeriesReport derived_series(const PermGroup& group, std::uint64_t cap = kLatticeCap);
unsigned derived_length(const FiniteGroup& fg);
bool is_solvable(const PermGroup& group, std::uint64_t cap = kLatticeCap);

SeriesReport lower_central_series(const FiniteGroup& fg);
bool is_nilpotent(const FiniteGroup& fg);
bool is_nilpotent(const PermGroup& group, std::uint64_t cap = kLatticeCap);

// Throws NotSolvable. The trivial group has height 0.
SeriesReport fitting_series(const FiniteGroup& fg);
unsigned fitting_height(const FiniteGroup& fg);
unsigned fitting_height(const PermGroup& group, std::uint64_t cap = kLatticeCap);

// Largest normal p-subgroup / largest normal p'-subgroup.
TableSubgroup o_p(const FiniteGroup& fg, std::uint64_t p);
TableSubgroup o_pprime(const FiniteGroup& fg, std::uint64_t p);
// O_p(G) as the intersection of the conjugates of a Sylow p-subgroup.
TableSubgroup o_p_sylow_core(const FiniteGroup& fg, std::uint64_t p);
SubgroupHandle big_o_p(const PermGroup& group, std::uint64_t p, std::uint64_t cap = kLatticeCap);
SubgroupHandle big_o_pprime(const PermGroup& group, std::uint64_t p, std::uint64_t cap = kLatticeCap);

// Throws NotSolvable.
PLengthResult p_length(const FiniteGroup& fg, std::uint64_t p);
PLengthResult p_length(const PermGroup& group, std::uint64_t p, std::uint64_t cap = kLatticeCap);

// Chief series choosing, at each step, the smallest (then lexicographically
// smallest) minimal normal subgroup of the current quotient.
SeriesReport chief_series(const FiniteGroup& fg);
SeriesReport chief_series(const PermGroup& group, std::uint64_t cap = kLatticeCap);

enum class SupersolvableCriterion {
  ChiefFactors,      // every chief factor has prime order
  PrimeIndexMaximals,  // every maximal subgroup has prime index (Huppert)
  Both,              // evaluates both; throws Error if they disagree
};

#ifdef NDEBUG
inline constexpr SupersolvableCriterion kDefaultSupersolvableCriterion =
    SupersolvableCriterion::ChiefFactors;
#else
inline constexpr SupersolvableCriterion kDefaultSupersolvableCriterion = SupersolvableCriterion::Both;
#endif

bool is_supersolvable(const FiniteGroup& fg,
                      SupersolvableCriterion criterion = kDefaultSupersolvableCriterion);
bool is_supersolvable(const PermGroup& group, std::uint64_t cap = kLatticeCap);

std::uint64_t exponent(const FiniteGroup& fg);

std::vector<TableSubgroup> minimal_normal_terms(const FiniteGroup& fg);
std::vector<SubgroupHandle> minimal_normal_subgroups(const FiniteGroup& fg);
std::vector<SubgroupHandle> minimal_normal_subgroups(const PermGroup& group,
                                                     std::uint64_t cap = kLatticeCap);

// A small generating set for an arbitrary subgroup given by its elements.
TableSubgroup with_generators(const GroupTable& table, const ElementSet& elements);

}  // namespace grpkit
