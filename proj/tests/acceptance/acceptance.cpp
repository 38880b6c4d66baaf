// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "grpkit/constructions.hpp"
#include "grpkit/structure.hpp"
#include "grpkit/subgroups.hpp"
#include "grpkit/verify.hpp"

using namespace grpkit;

namespace {

constexpr double kBudgetLemma2 = 5.0;
constexpr double kBudgetLemma2Stretch = 300.0;
constexpr double kBudgetLemma1 = 60.0;
constexpr double kBudgetTower = 120.0;
constexpr double kBudgetLevel4 = 300.0;
constexpr double kBudgetTheoremA = 1.0;
constexpr double kBudgetSweep = 600.0;
constexpr double kBudgetEngine = 600.0;

constexpr std::uint64_t kCorpusSeed = 1;
constexpr std::size_t kCorpusSize = 220;
constexpr std::size_t kCorpusMinimum = 200;
constexpr std::uint64_t kCorpusMaxOrder = 2000;
constexpr std::size_t kLemma1Trials = 50;
constexpr std::uint64_t kLemma1Seed = 7;
constexpr std::uint64_t kStretchNormalizerCap = 25'000'000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool run(const std::string& label, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= budget;
  const bool pass = out.pass && in_time;
  std::ostringstream line;
  line << (pass ? "PASS " : "FAIL ") << label << ": " << out.detail << " [" << std::fixed << std::setprecision(2)
       << secs << " s / budget " << budget << " s" << (in_time ? "" : ", over budget") << "]";
  std::cout << line.str() << std::endl;
  return pass;
}

const Corpus& corpus() {
  static const Corpus c = corpus_generate(kCorpusSeed, kCorpusSize, kCorpusMaxOrder);
  return c;
}

Outcome lemma2() {
  std::ostringstream d;
  bool ok = true;
  const char* sep = "";
  for (const auto& [p, expected] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{5, 10}, {7, 21}}) {
    const auto r = verify_sylow_normalizer_alternating(p);
    ok = ok && r.agree && r.computed == expected && r.formula == expected;
    d << sep << "A_" << p << " computed " << r.computed << " formula " << r.formula;
    sep = "; ";
  }
  return {ok, d.str()};
}

Outcome lemma2_stretch() {
  const auto r = verify_sylow_normalizer_alternating(11, kStretchNormalizerCap);
  std::ostringstream d;
  d << "A_11 computed " << r.computed << " formula " << r.formula;
  return {r.agree && r.computed == 55, d.str()};
}

Outcome lemma1() {
  const auto trials = normalizer_quotient_suite(corpus(), kLemma1Trials, kLemma1Seed);
  std::size_t held = 0;
  for (const auto& t : trials) held += t.result.holds;
  std::ostringstream d;
  d << held << "/" << trials.size() << " triples satisfy subgroup equality";
  return {trials.size() == kLemma1Trials && held == trials.size(), d.str()};
}

Outcome tower() {
  const auto r = verify_theorem_b(3);
  const std::vector<std::uint64_t> orders{2, 6, 294}, primes{2, 3, 7};
  const std::vector<std::size_t> dims{0, 1, 2};
  bool ok = r.levels.size() == 3;
  std::ostringstream d;
  d << "orders";
  for (std::size_t i = 0; ok && i < 3; ++i) {
    const auto& l = r.levels[i];
    d << " " << l.order;
    ok = ok && l.built && l.order == orders[i] && l.p == primes[i] && l.module_dim == dims[i];
    ok = ok && l.fitting_height == static_cast<unsigned>(i + 1);
    ok = ok && l.unique_minimal_normal == true;
    ok = ok && l.monakhov && l.monakhov->property_holds;
  }
  d << "; fitting heights 1,2,3, unique minimal normal, property true at every level";
  return {ok && r.all_passed, d.str()};
}

Outcome level4() {
  const auto t = build_tower(4);
  const auto& g3 = t.at(2);
  const auto& l4 = t.at(3);
  std::ostringstream d;
  d << "exp(G_3) = " << g3.exponent << ", p_4 = " << l4.p << ", module dim " << l4.module_dim
    << ", faithful " << (l4.module_faithful.value_or(false) ? "yes" : "no") << ", irreducible "
    << (l4.module_irreducible.value_or(false) ? "yes" : "no");
  const bool ok = g3.exponent == 42 && l4.p == 43 && l4.module && l4.module->p == 43 &&
                  l4.module_faithful == true && l4.module_irreducible == true;
  return {ok, d.str()};
}

Outcome theorem_a() {
  const auto c = theorem_a_certificate(60);
  std::ostringstream d;
  d << "q = " << c.q << ", p = " << c.p << ", r = " << c.r << ", quotient order " << c.normalizer_quotient_order
    << ", " << c.facts.size() << " facts";
  const bool ok = c.q == 7 && c.p == 17 && (c.r == 11 || c.r == 13) && c.normalizer_quotient_order == 136 &&
                  60 % c.r != 0 && 136 % c.r != 0 && c.r < 17 && c.all_hold();
  return {ok, d.str()};
}

Outcome sweep() {
  const auto& c = corpus();
  const auto r = verify_theorem_c(c);
  std::size_t with_property = 0;
  for (const auto& e : r.entries) with_property += e.has_property;
  unsigned control_l2 = 0;
  for (const auto& [p, l] : r.control.p_lengths) {
    if (p == 2) control_l2 = l;
  }
  std::ostringstream d;
  d << c.entries.size() << " groups, " << with_property << " with the property, " << r.violations.size()
    << " violations; S_4 property " << (r.control.has_property ? "true" : "false") << ", l_2 = " << control_l2;
  const bool ok = c.entries.size() >= kCorpusMinimum && r.violations.empty() && !r.control.has_property &&
                  control_l2 == 2 && r.control_as_expected;
  return {ok, d.str()};
}

Outcome structure() {
  std::size_t checked = 0, disagreements = 0, chain_breaks = 0;
  for (const auto& e : corpus().entries) {
    if (e.finite.order() > kCorpusMaxOrder) continue;
    ++checked;
    const bool chief = is_supersolvable(e.finite, SupersolvableCriterion::ChiefFactors);
    const bool huppert = is_supersolvable(e.finite, SupersolvableCriterion::PrimeIndexMaximals);
    disagreements += chief != huppert;
    const bool nil = is_nilpotent(e.finite);
    if ((nil && !chief) || (chief && !e.finite.is_solvable())) ++chain_breaks;
  }
  const auto sylow = verify_supersolvable_sylow_fact(corpus());
  std::ostringstream d;
  d << checked << " groups, " << disagreements << " criterion disagreements, " << chain_breaks
    << " hierarchy breaks; largest-prime Sylow normal in " << sylow.supersolvable_checked - sylow.failures.size()
    << "/" << sylow.supersolvable_checked << " supersolvable groups";
  return {checked > 0 && disagreements == 0 && chain_breaks == 0 && sylow.holds(), d.str()};
}

// Maximal members of a subgroup list, by brute-force containment.
std::set<std::vector<Elem>> brute_maximal(const std::vector<TableSubgroup>& subs, std::size_t order) {
  std::set<std::vector<Elem>> out;
  for (const auto& h : subs) {
    if (h.order() == order) continue;
    bool maximal = true;
    for (const auto& k : subs) {
      if (k.order() <= h.order() || k.order() == order || k.order() % h.order() != 0) continue;
      if (h.elements.is_subset_of(k.elements)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(h.elements.members());
  }
  return out;
}

Outcome engine() {
  std::size_t checked = 0, order_mismatch = 0, maximal_mismatch = 0;
  for (const auto& e : corpus().entries) {
    if (e.group.order() > kCorpusMaxOrder) continue;
    ++checked;
    if (oracle::elements_of(e.group).size() != e.group.order()) ++order_mismatch;

    std::vector<TableSubgroup> subs;
    for (const auto& h : all_subgroups(e.group)) subs.push_back(e.finite.tabulate(h));
    std::set<std::vector<Elem>> reported;
    for (const auto& m : maximal_subgroups(e.group)) reported.insert(e.finite.tabulate(m).elements.members());
    if (reported != brute_maximal(subs, e.finite.order())) ++maximal_mismatch;
  }
  std::ostringstream d;
  d << checked << " groups, " << order_mismatch << " order mismatches, " << maximal_mismatch
    << " maximal-subgroup mismatches";
  return {checked > 0 && order_mismatch == 0 && maximal_mismatch == 0, d.str()};
}

}  // namespace

int main() {
  bool all = true;
  all &= run("1 Sylow normalizers in A_5, A_7", kBudgetLemma2, lemma2);
  all &= run("2 normalizer-quotient suite", kBudgetLemma1, lemma1);
  all &= run("3 tower levels 1-3", kBudgetTower, tower);
  all &= run("4 tower level 4 module", kBudgetLevel4, level4);
  all &= run("5 prime certificate for |S| = 60", kBudgetTheoremA, theorem_a);
  all &= run("6 p-length sweep", kBudgetSweep, sweep);
  all &= run("7 structure oracle agreement", kBudgetSweep, structure);
  all &= run("8 engine ground truth", kBudgetEngine, engine);
  run("stretch Sylow normalizer in A_11", kBudgetLemma2Stretch, lemma2_stretch);
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
