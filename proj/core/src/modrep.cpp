#include "grpkit/modrep.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"
#include "grpkit/structure.hpp"

namespace grpkit {

TowerPrimeChoice next_prime_one_mod(std::uint64_t e, std::uint64_t bound) {
  if (e == 0) throw std::invalid_argument("e must be positive");
  // Candidates e*k + 1 for k >= 1 are exactly the integers > e congruent to 1.
  for (std::uint64_t c = e + 1; c <= bound; c += e) {
    if (is_prime(c)) return {e, c};
  }
  throw SearchBoundExceeded(bound);
}

MatModule regular_module(const FiniteGroup& fg, std::uint32_t p) {
  const GroupTable& t = fg.table();
  if (t.size() % p == 0) throw PDividesOrder(p, t.size());
  const PrimeField field(p);
  MatModule m;
  m.p = p;
  m.dim = t.size();
  m.group = fg.group();
  for (const auto& g : fg.group().generators()) {
    const Elem s = *t.index_of(g);
    FpMatrix a(p, m.dim, m.dim);
    for (std::size_t x = 0; x < m.dim; ++x) a.at(x, t.mul(static_cast<Elem>(x), s)) = 1;
    m.action.push_back(std::move(a));
  }
  return m;
}

EchelonBasis spin(std::span<const FpMatrix> action, std::uint32_t p, std::size_t dim,
                  std::span<const FpVector> seeds) {
  EchelonBasis basis(p, dim);
  std::vector<FpVector> queue;
  for (const auto& s : seeds) {
    if (basis.add(s)) queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size() && basis.dim() < dim; ++head) {
    for (const auto& a : action) {
      FpVector w = std::span<const std::uint32_t>(queue[head]) * a;
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  }
  return basis;
}

EchelonBasis spin(const MatModule& module, std::span<const FpVector> seeds) {
  return spin(module.action, module.p, module.dim, seeds);
}

MatModule submodule(const MatModule& module, const EchelonBasis& sub) {
  MatModule out;
  out.p = module.p;
  out.dim = sub.dim();
  out.group = module.group;
  for (const auto& a : module.action) {
    FpMatrix m(module.p, sub.dim(), sub.dim());
    for (std::size_t i = 0; i < sub.dim(); ++i) {
      const FpVector img = std::span<const std::uint32_t>(sub.rows()[i]) * a;
      const FpVector c = sub.coordinates(img);
      for (std::size_t j = 0; j < c.size(); ++j) m.at(i, j) = c[j];
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

MatModule quotient_module(const MatModule& module, const EchelonBasis& sub) {
  std::vector<bool> is_pivot(module.dim, false);
  for (std::size_t c : sub.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < module.dim; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  MatModule out;
  out.p = module.p;
  out.dim = free.size();
  out.group = module.group;
  for (const auto& a : module.action) {
    FpMatrix m(module.p, free.size(), free.size());
    for (std::size_t i = 0; i < free.size(); ++i) {
      FpVector img(a.row(free[i]).begin(), a.row(free[i]).end());
      sub.reduce(img);
      for (std::size_t j = 0; j < free.size(); ++j) m.at(i, j) = img[free[j]];
    }
    out.action.push_back(std::move(m));
  }
  return out;
}

FpMatrix word_matrix(const MatModule& module, std::span<const std::size_t> word) {
  FpMatrix acc = FpMatrix::identity(module.p, module.dim);
  for (std::size_t s : word) acc = acc * module.action.at(s);
  return acc;
}

FpMatrix element_matrix(const MatModule& module, const GroupTable& table, Elem g) {
  const auto w = table.word(g);
  return word_matrix(module, w);
}

bool homomorphism_spot_check(const MatModule& module, const GroupTable& table, std::uint64_t seed,
                             int trials) {
  std::mt19937_64 rng(seed);
  const auto gens = module.group.generators();
  for (int t = 0; t < trials; ++t) {
    const std::size_t len = 1 + rng() % 8;
    std::vector<std::size_t> word;
    Permutation g = module.group.identity();
    for (std::size_t i = 0; i < len; ++i) {
      word.push_back(rng() % gens.size());
      g = compose(g, gens[word.back()]);
    }
    const auto idx = table.index_of(g);
    if (!idx) return false;
    if (word_matrix(module, word) != element_matrix(module, table, *idx)) return false;
  }
  return true;
}

namespace {

// Polynomial (coefficients of x^0..x^m) annihilating v under right
// multiplication by a, found from the first linear dependency of the Krylov
// sequence v, va, va^2, ...
FpVector krylov_relation(const FpMatrix& a, FpVector v) {
  const std::size_t d = a.rows();
  const PrimeField f(a.p());
  struct Row {
    FpVector vec;
    FpVector comb;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  for (std::size_t m = 0; m <= d; ++m) {
    FpVector vec = v;
    FpVector comb(d + 1, 0);
    comb[m] = 1;
    for (const Row& r : rows) {
      const std::uint32_t c = vec[r.pivot];
      if (c == 0) continue;
      for (std::size_t j = 0; j < d; ++j) vec[j] = f.sub(vec[j], f.mul(c, r.vec[j]));
      for (std::size_t j = 0; j <= d; ++j) comb[j] = f.sub(comb[j], f.mul(c, r.comb[j]));
    }
    std::size_t piv = 0;
    while (piv < d && vec[piv] == 0) ++piv;
    if (piv == d) {
      comb.resize(m + 1);
      return comb;
    }
    const std::uint32_t li = f.inv(vec[piv]);
    for (auto& x : vec) x = f.mul(x, li);
    for (auto& x : comb) x = f.mul(x, li);
    rows.push_back({std::move(vec), std::move(comb), piv});
    v = std::span<const std::uint32_t>(v) * a;
  }
  throw Error("Krylov sequence failed to become dependent");
}

std::vector<std::uint32_t> roots_in_field(const FpVector& poly, std::uint32_t p, std::mt19937_64& rng) {
  const PrimeField f(p);
  auto eval = [&](std::uint32_t x) {
    std::uint32_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
    return acc;
  };
  std::vector<std::uint32_t> roots;
  if (p <= (1u << 16)) {
    for (std::uint32_t x = 0; x < p; ++x) {
      if (eval(x) == 0) roots.push_back(x);
    }
  } else {
    for (int i = 0; i < 4096; ++i) {
      const auto x = static_cast<std::uint32_t>(rng() % p);
      if (eval(x) == 0) roots.push_back(x);
    }
  }
  return roots;
}

FpMatrix random_algebra_element(const MatModule& m, std::mt19937_64& rng) {
  FpMatrix theta(m.p, m.dim, m.dim);
  const std::size_t terms = 1 + rng() % 4;
  bool nonzero = false;
  for (std::size_t t = 0; t < terms; ++t) {
    std::uint32_t c = static_cast<std::uint32_t>(rng() % m.p);
    if (t + 1 == terms && !nonzero && c == 0) c = 1;
    if (c == 0) continue;
    nonzero = true;
    const std::size_t len = 1 + rng() % 4;
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < len; ++i) word.push_back(rng() % m.action.size());
    theta = theta + scaled(word_matrix(m, word), c);
  }
  return theta;
}

std::vector<FpMatrix> transposes(const MatModule& m) {
  std::vector<FpMatrix> out;
  for (const auto& a : m.action) out.push_back(a.transpose());
  return out;
}

// Annihilator {x : x . w = 0 for all w in dual} of a subspace of the dual.
EchelonBasis annihilator(const EchelonBasis& dual) {
  const std::size_t d = dual.ambient_dim();
  FpMatrix cols(dual.p(), d, dual.dim());
  for (std::size_t j = 0; j < dual.dim(); ++j) {
    for (std::size_t i = 0; i < d; ++i) cols.at(i, j) = dual.rows()[j][i];
  }
  EchelonBasis out(dual.p(), d);
  for (auto& v : cols.left_nullspace()) out.add(std::move(v));
  return out;
}

}  // namespace

NortonOutcome norton_test(const MatModule& module, std::mt19937_64& rng, int budget) {
  NortonOutcome out;
  if (module.dim == 0) return out;
  if (module.dim == 1) {
    out.verdict = NortonOutcome::Verdict::Irreducible;
    return out;
  }
  const std::size_t d = module.dim;
  const PrimeField f(module.p);
  const std::vector<FpMatrix> dual_action = transposes(module);
  for (int attempt = 0; attempt < budget; ++attempt) {
    const FpMatrix theta = random_algebra_element(module, rng);
    FpVector v(d);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % module.p);
    const auto roots = roots_in_field(krylov_relation(theta, v), module.p, rng);
    for (std::uint32_t lambda : roots) {
      FpMatrix shifted = theta;
      for (std::size_t i = 0; i < d; ++i) shifted.at(i, i) = f.sub(shifted.at(i, i), lambda);
      const auto kernel = shifted.left_nullspace();
      if (kernel.empty()) continue;

      const FpVector seed[] = {kernel.front()};
      EchelonBasis s = spin(module, seed);
      if (s.dim() < d) {
        out.verdict = NortonOutcome::Verdict::Reducible;
        out.submodule = std::move(s);
        return out;
      }
      const auto dual_kernel = shifted.transpose().left_nullspace();
      const FpVector dual_seed[] = {dual_kernel.front()};
      EchelonBasis w = spin(dual_action, module.p, d, dual_seed);
      if (w.dim() < d) {
        out.verdict = NortonOutcome::Verdict::Reducible;
        out.submodule = annihilator(w);
        return out;
      }
      if (kernel.size() == 1) {
        out.verdict = NortonOutcome::Verdict::Irreducible;
        return out;
      }
    }
  }
  return out;
}

bool is_irreducible(const MatModule& module, std::uint64_t seed, int budget) {
  if (module.dim == 0) throw std::invalid_argument("zero module");
  std::mt19937_64 rng(seed);
  const auto r = norton_test(module, rng, budget);
  if (r.verdict == NortonOutcome::Verdict::Inconclusive) {
    throw Inconclusive("irreducibility test exhausted its budget");
  }
  return r.verdict == NortonOutcome::Verdict::Irreducible;
}

bool is_faithful(const MatModule& module, const FiniteGroup& fg) {
  for (const auto& n : minimal_normal_terms(fg)) {
    bool acts = false;
    for (Elem g : n.generators) {
      if (!element_matrix(module, fg.table(), g).is_identity()) {
        acts = true;
        break;
      }
    }
    if (!acts) return false;
  }
  return true;
}

bool is_faithful(const MatModule& module) { return is_faithful(module, FiniteGroup(module.group)); }

MatModule find_faithful_irreducible(const FiniteGroup& fg, std::uint32_t p, std::uint64_t seed, int budget) {
  if (fg.order() % p == 0) throw PDividesOrder(p, fg.order());
  if ((p - 1) % exponent(fg) != 0) throw PreconditionError("exp(G) does not divide p - 1");
  std::mt19937_64 rng(seed);
  std::vector<MatModule> stack{regular_module(fg, p)};
  while (!stack.empty()) {
    MatModule m = std::move(stack.back());
    stack.pop_back();
    if (!is_faithful(m, fg)) continue;
    auto r = norton_test(m, rng, budget);
    switch (r.verdict) {
      case NortonOutcome::Verdict::Irreducible: return m;
      case NortonOutcome::Verdict::Reducible:
        stack.push_back(quotient_module(m, *r.submodule));
        stack.push_back(submodule(m, *r.submodule));
        break;
      case NortonOutcome::Verdict::Inconclusive:
        throw SearchFailed("split budget exhausted at dimension " + std::to_string(m.dim));
    }
  }
  throw SearchFailed("no faithful irreducible constituent in the regular module");
}

std::vector<MatModule> composition_factors(const MatModule& module, std::uint64_t seed, int budget) {
  std::mt19937_64 rng(seed);
  std::vector<MatModule> out;
  std::vector<MatModule> stack{module};
  while (!stack.empty()) {
    MatModule m = std::move(stack.back());
    stack.pop_back();
    auto r = norton_test(m, rng, budget);
    switch (r.verdict) {
      case NortonOutcome::Verdict::Irreducible: out.push_back(std::move(m)); break;
      case NortonOutcome::Verdict::Reducible:
        stack.push_back(quotient_module(m, *r.submodule));
        stack.push_back(submodule(m, *r.submodule));
        break;
      case NortonOutcome::Verdict::Inconclusive:
        throw Inconclusive("split budget exhausted at dimension " + std::to_string(m.dim));
    }
  }
  return out;
}

void write_module(std::ostream& os, const MatModule& module) {
  os << "p " << module.p << '\n' << "dim " << module.dim << '\n' << "gens " << module.action.size() << '\n';
  for (const auto& a : module.action) {
    os << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (j) os << ' ';
        os << a.at(i, j);
      }
      os << '\n';
    }
  }
}

ModuleFile read_module(std::istream& is) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  std::size_t pos = 0;
  auto number = [&](const char* what) -> std::uint64_t {
    if (pos >= tokens.size()) throw ParseError(std::string("unexpected end of module file reading ") + what);
    const std::string& t = tokens[pos++];
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("expected integer for " + std::string(what) + ", got \"" + t + "\"");
    }
    return std::stoull(t);
  };
  auto keyword = [&](const char* kw) {
    if (pos >= tokens.size() || tokens[pos] != kw) throw ParseError(std::string("expected keyword ") + kw);
    ++pos;
  };
  ModuleFile f;
  keyword("p");
  const std::uint64_t p = number("p");
  if (!is_prime(p) || p >= (1u << 31)) throw ParseError("p must be a prime < 2^31");
  f.p = static_cast<std::uint32_t>(p);
  keyword("dim");
  f.dim = number("dim");
  if (f.dim == 0) throw ParseError("dim must be positive");
  keyword("gens");
  const std::uint64_t k = number("gens");
  for (std::uint64_t g = 0; g < k; ++g) {
    FpMatrix m(f.p, f.dim, f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) {
      for (std::size_t j = 0; j < f.dim; ++j) {
        const std::uint64_t v = number("matrix entry");
        if (v >= p) throw ParseError("matrix entry not reduced mod p");
        m.at(i, j) = static_cast<std::uint32_t>(v);
      }
    }
    f.matrices.push_back(std::move(m));
  }
  if (pos != tokens.size()) throw ParseError("trailing data in module file");
  return f;
}

MatModule attach_group(ModuleFile file, PermGroup group) {
  if (file.matrices.size() != group.generators().size()) {
    throw std::invalid_argument("module has " + std::to_string(file.matrices.size()) +
                                " matrices but the group has " +
                                std::to_string(group.generators().size()) + " generators");
  }
  MatModule m;
  m.p = file.p;
  m.dim = file.dim;
  m.action = std::move(file.matrices);
  m.group = std::move(group);
  return m;
}

}  // namespace grpkit
