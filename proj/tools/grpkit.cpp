#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "grpkit/constructions.hpp"
#include "grpkit/errors.hpp"
#include "grpkit/group_io.hpp"
#include "grpkit/modrep.hpp"
#include "grpkit/primes.hpp"
#include "grpkit/structure.hpp"
#include "grpkit/verify.hpp"
#include "report.hpp"

namespace {

using grpkit::report::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::uint64_t seed = 1;
  grpkit::Limits caps;
  std::string out;
  bool json = false;
};

struct Outcome {
  int code = kOk;
  std::string command;
  Json results;
  std::string summary;
};

void env_override(const char* name, std::uint64_t& target) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(v, &end, 10);
  if (*end != '\0' || parsed == 0) throw UsageError(std::string(name) + " must be a positive integer");
  target = parsed;
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void require_prime(std::uint64_t p) {
  if (!grpkit::is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
}

Outcome check_monakhov(const RunConfig& cfg, const std::string& file) {
  const auto g = grpkit::load_group(file, cfg.caps.degree);
  const auto r = grpkit::monakhov_check(g, std::filesystem::path(file).filename().string(), cfg.caps.lattice);
  std::ostringstream os;
  os << "group " << r.group_id << ": order " << r.order << ", pi = {" << join(r.pi_g.primes) << "}\n";
  os << "maximal subgroup orders: " << join(r.maximal_orders, " ") << "\n";
  os << "full-spectrum maximal subgroups: " << r.full_spectrum_maximals.size() << "\n";
  if (!r.property_holds) {
    os << "property: false (witness order " << r.witness->order() << ", not supersolvable)\n";
  } else if (r.vacuous) {
    os << "property: true (vacuous: no maximal subgroup has the full prime spectrum)\n";
  } else {
    os << "property: true\n";
  }
  return {kOk, "check monakhov", Json::array({grpkit::report::to_json(r)}), os.str()};
}

Outcome check_plength(const RunConfig& cfg, const std::string& file, std::uint64_t p) {
  require_prime(p);
  const auto g = grpkit::load_group(file, cfg.caps.degree);
  const auto r = grpkit::p_length(g, p, cfg.caps.lattice);
  std::vector<std::uint64_t> orders;
  for (const auto& t : r.series.terms) orders.push_back(t.order());
  std::ostringstream os;
  os << "l_" << p << "(G) = " << r.length << "\n";
  os << "upper " << p << "-series orders: " << join(orders, " ") << "\n";
  return {kOk, "check plength", Json::array({grpkit::report::to_json(r)}), os.str()};
}

Outcome build_tower(const RunConfig& cfg, unsigned levels, const std::string& export_dir) {
  const auto report = grpkit::verify_theorem_b(levels, cfg.seed, cfg.caps);
  std::ostringstream os;
  for (const auto& l : report.levels) {
    os << "G_" << l.n << ": p = " << l.p;
    if (l.n > 1) os << ", module dim " << l.module_dim;
    os << ", order " << l.order << ", exponent " << l.exponent;
    if (l.built) {
      os << ", fitting height " << *l.fitting_height << ", unique minimal normal "
         << yes_no(*l.unique_minimal_normal) << ", property " << (l.monakhov->property_holds ? "true" : "false")
         << (l.monakhov->vacuous ? " (vacuous)" : "");
    } else {
      os << ", group not built (module only: faithful " << yes_no(l.module_faithful.value_or(false))
         << ", irreducible " << yes_no(l.module_irreducible.value_or(false)) << ")";
    }
    os << (l.passed ? "" : "  [CHECK FAILED]") << "\n";
  }
  if (!export_dir.empty()) {
    const auto tower = grpkit::build_tower(levels, cfg.seed, cfg.caps);
    std::filesystem::create_directories(export_dir);
    for (const auto& l : tower) {
      const std::string stem = export_dir + "/G_" + std::to_string(l.n);
      if (l.group) {
        std::ofstream f(stem + ".grp");
        grpkit::write_group(f, *l.group);
      }
      if (l.module) {
        std::ofstream f(export_dir + "/V_" + std::to_string(l.n) + ".mod");
        grpkit::write_module(f, *l.module);
      }
    }
    os << "exported groups and modules to " << export_dir << "\n";
  }
  return {report.all_passed ? kOk : kCheckFailed, "build tower", grpkit::report::to_json(report), os.str()};
}

Outcome build_wreath(const RunConfig& cfg, const std::string& base_file, const std::string& top_file,
                     const std::string& write) {
  const auto s = grpkit::load_group(base_file, cfg.caps.degree);
  const auto top = grpkit::load_group(top_file, cfg.caps.degree);
  const auto w = grpkit::wreath_imprimitive(s, top, cfg.caps.degree);
  std::uint64_t expected = top.order();
  for (std::size_t i = 0; i < top.degree(); ++i) expected *= s.order();
  const bool ok = w.order() == expected;
  if (!write.empty()) {
    std::ofstream f(write);
    grpkit::write_group(f, w);
  }
  std::ostringstream os;
  os << "wreath product: degree " << w.degree() << ", order " << w.order() << " (|S|^k |top| = " << expected << ")\n";
  Json j = {{"degree", w.degree()}, {"order", w.order()}, {"formula_order", expected}, {"agree", ok}};
  return {ok ? kOk : kCheckFailed, "build wreath", Json::array({j}), os.str()};
}

Outcome verify_lemma2(const RunConfig& cfg, std::uint64_t p) {
  require_prime(p);
  const auto r = grpkit::verify_sylow_normalizer_alternating(p, cfg.caps.normalizer, cfg.seed);
  std::ostringstream os;
  os << "|N_A" << p << "(P)|: computed " << r.computed << " / formula " << r.formula << "\n";
  return {r.agree ? kOk : kCheckFailed, "verify lemma2", Json::array({grpkit::report::to_json(r)}), os.str()};
}

Outcome verify_lemma1(const RunConfig& cfg, std::size_t trials, std::size_t count, std::uint64_t max_order) {
  const auto corpus = grpkit::corpus_generate(cfg.seed, count, max_order);
  const auto suite = grpkit::normalizer_quotient_suite(corpus, trials, cfg.seed);
  Json results = Json::array();
  std::size_t holds = 0;
  for (const auto& t : suite) {
    holds += t.result.holds;
    Json j = grpkit::report::to_json(t.result);
    j["recipe"] = t.recipe;
    results.push_back(std::move(j));
  }
  std::ostringstream os;
  os << holds << "/" << suite.size() << " triples satisfy N_{G/N}(PN/N) = N_G(P)N/N\n";
  return {holds == suite.size() ? kOk : kCheckFailed, "verify lemma1", std::move(results), os.str()};
}

Outcome verify_theorem_a(std::uint64_t s_order) {
  const auto c = grpkit::theorem_a_certificate(s_order);
  std::ostringstream os;
  os << "|S| = " << c.s_order << ": q = " << c.q << ", p = " << c.p << ", r = " << c.r
     << ", p(p-1)/2 = " << c.normalizer_quotient_order << "\n";
  for (const auto& f : c.facts) os << (f.holds ? "  ok    " : "  FAIL  ") << f.statement << "\n";
  os << "S wr A_p is not instantiated; the certificate checks the arithmetic only\n";
  return {c.all_hold() ? kOk : kCheckFailed, "verify theorem-a", Json::array({grpkit::report::to_json(c)}), os.str()};
}

Outcome verify_theorem_c(const RunConfig& cfg, std::size_t count, std::uint64_t max_order) {
  const auto corpus = grpkit::corpus_generate(cfg.seed, count, max_order);
  const auto r = grpkit::verify_theorem_c(corpus);
  std::size_t with_property = 0, vacuous = 0;
  for (const auto& e : r.entries) {
    with_property += e.has_property;
    vacuous += e.has_property && e.vacuous;
  }
  std::ostringstream os;
  os << "corpus: " << r.corpus_size << " groups (" << corpus.shortfall << " short of request), " << with_property
     << " with the property (" << vacuous << " vacuously)\n";
  os << "violations: " << r.violations.size() << "\n";
  for (const auto& v : r.violations) os << "  " << v << "\n";
  os << "control S_4: property " << (r.control.has_property ? "true" : "false") << ", l_2 = "
     << (r.control.p_lengths.empty() ? 0 : r.control.p_lengths.front().second) << "\n";
  const bool ok = r.violations.empty() && r.control_as_expected;
  return {ok ? kOk : kCheckFailed, "verify theorem-c", grpkit::report::to_json(r), os.str()};
}

Outcome census(const RunConfig& cfg, std::size_t count, std::uint64_t max_order) {
  const auto corpus = grpkit::corpus_generate(cfg.seed, count, max_order);
  Json results = Json::array();
  std::size_t nilpotent = 0, supersolvable = 0, with_property = 0;
  for (const auto& e : corpus.entries) {
    const auto& fg = e.finite;
    const bool nil = grpkit::is_nilpotent(fg);
    const bool ss = grpkit::is_supersolvable(fg, grpkit::SupersolvableCriterion::Both);
    const auto pl = grpkit::plength_entry(fg, e.recipe);
    nilpotent += nil;
    supersolvable += ss;
    with_property += pl.has_property;
    Json j = grpkit::report::to_json(pl);
    j["fingerprint"] = grpkit::report::to_json(e.fingerprint);
    j["nilpotent"] = nil;
    j["supersolvable"] = ss;
    j["fitting_height"] = grpkit::fitting_height(fg);
    results.push_back(std::move(j));
  }
  std::ostringstream os;
  os << corpus.entries.size() << " groups from " << corpus.draws << " draws: " << nilpotent << " nilpotent, "
     << supersolvable << " supersolvable, " << with_property << " with the property\n";
  return {kOk, "census", std::move(results), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grpkit: finite permutation group toolkit"};
  app.require_subcommand(1);
  app.footer(
      "Environment:\n"
      "  GRPKIT_ORDER_CAP       largest group order for tables and lattices (default 5000)\n"
      "  GRPKIT_DEGREE_CAP      largest permutation degree or index (default 50000)\n"
      "  GRPKIT_NORMALIZER_CAP  largest group for streaming normalizers (default 10000000)\n"
      "  GRPKIT_ENUM_CAP        largest group for element enumeration (default 10000)\n"
      "Flags override the environment.\n\n"
      "Exit status: 0 checks ran (a false property is a verdict, not an error),\n"
      "1 a mathematical check failed, 2 usage or cap error.");

  RunConfig cfg;
  std::uint64_t order_cap = 0, degree_cap = 0;
  app.add_option("--out", cfg.out, "Write the JSON report to this path");
  app.add_flag("--json", cfg.json, "Print the JSON report instead of the summary");
  app.add_option("--order-cap", order_cap, "Override GRPKIT_ORDER_CAP");
  app.add_option("--degree-cap", degree_cap, "Override GRPKIT_DEGREE_CAP");

  std::function<Outcome()> action;

  auto* check = app.add_subcommand("check", "Check a property of a group file");
  check->require_subcommand(1);
  std::string file;
  std::uint64_t p = 0;
  auto* monakhov = check->add_subcommand("monakhov", "Full-spectrum maximal subgroups are supersolvable?");
  monakhov->add_option("file", file, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  monakhov->callback([&] { action = [&] { return check_monakhov(cfg, file); }; });
  auto* plength = check->add_subcommand("plength", "p-length of a solvable group");
  plength->add_option("file", file, "Group file (.grp)")->required()->check(CLI::ExistingFile);
  plength->add_option("--p", p, "Prime")->required();
  plength->callback([&] { action = [&] { return check_plength(cfg, file, p); }; });

  auto* build = app.add_subcommand("build", "Construct groups");
  build->require_subcommand(1);
  unsigned levels = 3;
  std::string export_dir, base_file, top_file, write;
  auto* tower = build->add_subcommand("tower", "Tower of affine groups with growing Fitting height");
  tower->add_option("--levels", levels, "Number of levels")->check(CLI::Range(1u, 64u));
  tower->add_option("--seed", cfg.seed, "Seed for the module search");
  tower->add_option("--export", export_dir, "Directory for G_n.grp and V_n.mod files");
  tower->callback([&] { action = [&] { return build_tower(cfg, levels, export_dir); }; });
  auto* wreath = build->add_subcommand("wreath", "Imprimitive wreath product");
  wreath->add_option("--base", base_file, "Base group file")->required()->check(CLI::ExistingFile);
  wreath->add_option("--top", top_file, "Top group file")->required()->check(CLI::ExistingFile);
  wreath->add_option("--write", write, "Write the product as a .grp file");
  wreath->callback([&] { action = [&] { return build_wreath(cfg, base_file, top_file, write); }; });

  auto* verify = app.add_subcommand("verify", "Run a verifier");
  verify->require_subcommand(1);
  std::size_t trials = 50, count = 200;
  std::uint64_t max_order = 2000, s_order = 60;
  auto* lemma2 = verify->add_subcommand("lemma2", "|N_{A_p}(P)| = p(p-1)/2");
  lemma2->add_option("--p", p, "Prime")->required();
  lemma2->callback([&] { action = [&] { return verify_lemma2(cfg, p); }; });
  auto* lemma1 = verify->add_subcommand("lemma1", "N_{G/N}(PN/N) = N_G(P)N/N on random corpus triples");
  lemma1->add_option("--trials", trials, "Number of triples");
  lemma1->add_option("--seed", cfg.seed, "Seed");
  lemma1->add_option("--count", count, "Corpus size");
  lemma1->add_option("--max-order", max_order, "Largest corpus group order");
  lemma1->callback([&] { action = [&] { return verify_lemma1(cfg, trials, count, max_order); }; });
  auto* theorem_a = verify->add_subcommand("theorem-a", "Prime certificate for S wr A_p");
  theorem_a->add_option("--s-order", s_order, "|S|")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  theorem_a->callback([&] { action = [&] { return verify_theorem_a(s_order); }; });
  auto* theorem_b = verify->add_subcommand("theorem-b", "Fitting height of the tower levels");
  theorem_b->add_option("--levels", levels, "Number of levels")->check(CLI::Range(1u, 64u));
  theorem_b->add_option("--seed", cfg.seed, "Seed");
  theorem_b->callback([&] {
    action = [&] {
      auto o = build_tower(cfg, levels, "");
      o.command = "verify theorem-b";
      return o;
    };
  });
  auto* theorem_c = verify->add_subcommand("theorem-c", "p-length <= 1 for groups with the property");
  theorem_c->add_option("--count", count, "Corpus size");
  theorem_c->add_option("--seed", cfg.seed, "Seed");
  theorem_c->add_option("--max-order", max_order, "Largest corpus group order");
  theorem_c->callback([&] { action = [&] { return verify_theorem_c(cfg, count, max_order); }; });

  auto* census_cmd = app.add_subcommand("census", "Structure table for a seeded corpus");
  census_cmd->add_option("--seed", cfg.seed, "Seed");
  census_cmd->add_option("--count", count, "Corpus size");
  census_cmd->add_option("--max-order", max_order, "Largest group order");
  census_cmd->callback([&] { action = [&] { return census(cfg, count, max_order); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    env_override("GRPKIT_ORDER_CAP", cfg.caps.lattice);
    env_override("GRPKIT_DEGREE_CAP", cfg.caps.degree);
    env_override("GRPKIT_NORMALIZER_CAP", cfg.caps.normalizer);
    env_override("GRPKIT_ENUM_CAP", cfg.caps.enumeration);
    if (order_cap) cfg.caps.lattice = order_cap;
    if (degree_cap) cfg.caps.degree = degree_cap;

    Outcome o = action();
    const Json doc = grpkit::report::envelope(o.command, cfg.seed, cfg.caps, std::move(o.results));
    if (!cfg.out.empty()) {
      std::ofstream f(cfg.out);
      if (!f) throw UsageError("cannot write " + cfg.out);
      f << doc.dump(2) << '\n';
    }
    if (cfg.json) {
      std::cout << doc.dump(2) << '\n';
    } else {
      std::cout << o.summary;
    }
    return o.code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const grpkit::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const grpkit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const grpkit::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const grpkit::NotSolvable& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const grpkit::PDividesOrder& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  }
}
