#include "report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace grpkit::report {

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace

Json envelope(const std::string& command, std::uint64_t seed, const Limits& caps, Json results) {
  Json j;
  j["artifact_version"] = kArtifactVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["caps"] = {{"order", caps.lattice},
               {"enumeration", caps.enumeration},
               {"normalizer", caps.normalizer},
               {"degree", caps.degree}};
  j["results"] = std::move(results);
  j["timestamp"] = utc_timestamp();
  return j;
}

Json tri(const std::optional<bool>& b) {
  if (!b) return "skipped";
  return *b;
}

Json to_json(const PrimeSet& s) { return s.primes; }

Json to_json(const SubgroupHandle& h) {
  Json gens = Json::array();
  for (const auto& g : h.generators()) gens.push_back(to_cycle_string(g));
  return {{"order", h.order()}, {"generators", std::move(gens)}};
}

Json to_json(const SeriesReport& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms) terms.push_back(t.order());
  return {{"kind", std::string(to_string(s.kind))}, {"term_orders", std::move(terms)},
          {"factor_orders", s.factor_orders}};
}

Json to_json(const PLengthResult& r) {
  return {{"p", r.p}, {"length", r.length}, {"series", to_json(r.series)}};
}

Json to_json(const MonakhovReport& r) {
  Json fs = Json::array();
  for (const auto& m : r.full_spectrum_maximals) fs.push_back({{"order", m.order}, {"supersolvable", m.supersolvable}});
  Json j = {{"group_id", r.group_id},
            {"order", r.order},
            {"pi", to_json(r.pi_g)},
            {"maximal_orders", r.maximal_orders},
            {"full_spectrum_maximals", std::move(fs)},
            {"property_holds", r.property_holds},
            {"vacuous", r.vacuous}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const NormalizerQuotientResult& r) {
  return {{"p", r.p},
          {"group_order", r.group_order},
          {"normal_order", r.normal_order},
          {"lhs_order", r.lhs_order},
          {"rhs_order", r.rhs_order},
          {"holds", r.holds}};
}

Json to_json(const SylowNormalizerResult& r) {
  return {{"p", r.p}, {"computed", r.computed}, {"formula", r.formula}, {"agree", r.agree}};
}

Json to_json(const TowerReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json j = {{"n", l.n},
              {"p", l.p},
              {"module_dim", l.n == 1 ? Json(nullptr) : Json(l.module_dim)},
              {"order", l.order},
              {"exponent", l.exponent},
              {"group_built", l.built},
              {"prime_admissible", l.prime_admissible},
              {"fitting_height", l.fitting_height ? Json(*l.fitting_height) : Json("skipped")},
              {"unique_minimal_normal", tri(l.unique_minimal_normal)},
              {"module_faithful", tri(l.module_faithful)},
              {"module_irreducible", tri(l.module_irreducible)}};
    j["monakhov"] = l.monakhov ? to_json(*l.monakhov) : Json("skipped");
    j["passed"] = l.passed;
    levels.push_back(std::move(j));
  }
  Json orders = Json::array();
  for (const auto& l : r.levels) orders.push_back(l.order);
  return {{"orders", std::move(orders)}, {"levels", std::move(levels)}, {"all_passed", r.all_passed}};
}

Json to_json(const TheoremACertificate& c) {
  Json facts = Json::array();
  for (const auto& f : c.facts) facts.push_back({{"statement", f.statement}, {"holds", f.holds}});
  return {{"s_order", c.s_order},
          {"q", c.q},
          {"p", c.p},
          {"r", c.r},
          {"r_candidates", c.r_candidates},
          {"normalizer_quotient_order", c.normalizer_quotient_order},
          {"facts", std::move(facts)},
          {"all_hold", c.all_hold()},
          {"wreath_product_instantiated", false}};
}

Json to_json(const PLengthEntry& e) {
  Json pl = Json::object();
  for (const auto& [p, l] : e.p_lengths) pl[std::to_string(p)] = l;
  return {{"recipe", e.recipe},
          {"order", e.order},
          {"solvable", e.solvable},
          {"has_property", e.has_property},
          {"vacuous", e.vacuous},
          {"p_lengths", std::move(pl)}};
}

Json to_json(const PLengthSweepReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  return {{"corpus_size", r.corpus_size},
          {"violations", r.violations},
          {"control", to_json(r.control)},
          {"control_as_expected", r.control_as_expected},
          {"entries", std::move(entries)}};
}

Json to_json(const Fingerprint& f) {
  Json hist = Json::object();
  for (const auto& [o, c] : f.element_orders) hist[std::to_string(o)] = c;
  return {{"order", f.order},
          {"element_orders", std::move(hist)},
          {"derived_length", f.derived_length},
          {"center_order", f.center_order}};
}

}  // namespace grpkit::report
