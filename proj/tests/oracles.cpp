#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

Perm mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
  return c;
}

Perm inv(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<std::uint32_t>(x);
  return c;
}

Perm identity(std::size_t n) {
  Perm c(n);
  std::iota(c.begin(), c.end(), 0u);
  return c;
}

Elements closure(const std::vector<Perm>& gens, std::size_t degree) {
  Elements seen{identity(degree)};
  std::deque<Perm> queue{identity(degree)};
  while (!queue.empty()) {
    const Perm x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm y = mul(x, g);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

Elements elements_of(const grpkit::PermGroup& g) {
  std::vector<Perm> gens;
  for (const auto& s : g.generators()) gens.emplace_back(s.images().begin(), s.images().end());
  return closure(gens, g.degree());
}

namespace {

Elements join(const Elements& a, const Elements& b) {
  std::vector<Perm> gens(a.begin(), a.end());
  gens.insert(gens.end(), b.begin(), b.end());
  return closure(gens, a.begin()->size());
}

}  // namespace

std::vector<Elements> all_subgroups(const Elements& g) {
  const std::size_t n = g.begin()->size();
  std::set<Elements> cyclic;
  for (const auto& x : g) cyclic.insert(closure({x}, n));
  std::set<Elements> found(cyclic.begin(), cyclic.end());
  std::vector<Elements> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Elements> next;
    for (const auto& h : frontier) {
      for (const auto& c : cyclic) {
        if (std::includes(h.begin(), h.end(), c.begin(), c.end())) continue;
        Elements j = join(h, c);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

std::vector<Elements> maximal_filter(const std::vector<Elements>& subgroups, const Elements& g) {
  std::vector<Elements> out;
  for (const auto& h : subgroups) {
    if (h.size() == g.size()) continue;
    bool maximal = true;
    for (const auto& k : subgroups) {
      if (k.size() <= h.size() || k.size() == g.size()) continue;
      if (std::includes(k.begin(), k.end(), h.begin(), h.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

bool is_normal(const Elements& h, const Elements& g) {
  for (const auto& x : g) {
    const Perm xi = inv(x);
    for (const auto& y : h) {
      if (!h.count(mul(mul(xi, y), x))) return false;
    }
  }
  return true;
}

Elements derived(const Elements& h) {
  std::vector<Perm> comms;
  std::set<Perm> seen;
  for (const auto& a : h) {
    for (const auto& b : h) {
      Perm c = mul(mul(inv(a), inv(b)), mul(a, b));
      if (seen.insert(c).second) comms.push_back(std::move(c));
    }
  }
  return closure(comms, h.begin()->size());
}

Elements largest_normal(const Elements& g, bool (*accept)(std::uint64_t, std::uint64_t), std::uint64_t p) {
  Elements best{identity(g.begin()->size())};
  for (const auto& h : all_subgroups(g)) {
    if (h.size() > best.size() && accept(h.size(), p) && is_normal(h, g)) best = h;
  }
  return best;
}

Elements quotient(const Elements& g, const Elements& n) {
  std::map<Perm, std::size_t> coset_of;
  std::vector<Perm> reps;
  for (const auto& x : g) {
    if (coset_of.count(x)) continue;
    const std::size_t idx = reps.size();
    reps.push_back(x);
    for (const auto& y : n) coset_of[mul(y, x)] = idx;
  }
  Elements out;
  for (const auto& x : g) {
    Perm img(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) img[i] = static_cast<std::uint32_t>(coset_of.at(mul(reps[i], x)));
    out.insert(std::move(img));
  }
  return out;
}

namespace {

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool coprime_to(std::uint64_t n, std::uint64_t p) { return n % p != 0; }

}  // namespace

unsigned p_length(const Elements& g0, std::uint64_t p) {
  Elements g = g0;
  unsigned length = 0;
  for (;;) {
    g = quotient(g, largest_normal(g, coprime_to, p));
    if (g.size() == 1) return length;
    const Elements o = largest_normal(g, is_p_power, p);
    if (o.size() == 1) throw std::runtime_error("oracle: not p-solvable");
    ++length;
    g = quotient(g, o);
    if (g.size() == 1) return length;
  }
}

std::uint64_t exponent(const Elements& g) {
  std::uint64_t e = 1;
  for (const auto& x : g) {
    std::uint64_t k = 1;
    Perm y = x;
    const Perm id = identity(x.size());
    while (y != id) {
      y = mul(y, x);
      ++k;
    }
    e = std::lcm(e, k);
  }
  return e;
}

std::uint64_t kernel_order(const grpkit::MatModule& m) {
  // BFS over (permutation, matrix) pairs keyed by permutation.
  std::map<Perm, grpkit::FpMatrix> seen;
  std::deque<Perm> queue;
  const Perm id = identity(m.group.degree());
  seen.emplace(id, grpkit::FpMatrix::identity(m.p, m.dim));
  queue.push_back(id);
  const auto gens = m.group.generators();
  while (!queue.empty()) {
    const Perm x = queue.front();
    queue.pop_front();
    const grpkit::FpMatrix mx = seen.at(x);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Perm y = mul(x, Perm(gens[i].images().begin(), gens[i].images().end()));
      if (seen.count(y)) continue;
      seen.emplace(y, mx * m.action[i]);
      queue.push_back(std::move(y));
    }
  }
  std::uint64_t k = 0;
  for (const auto& [x, mat] : seen) k += mat.is_identity();
  return k;
}

namespace {

// All nonzero vectors of F_p^d with first nonzero coordinate 1.
std::vector<grpkit::FpVector> projective_points(std::uint32_t p, std::size_t d) {
  std::vector<grpkit::FpVector> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= p;
  for (std::size_t idx = 1; idx < total; ++idx) {
    grpkit::FpVector v(d);
    std::size_t x = idx;
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    std::size_t first = 0;
    while (v[first] == 0) ++first;
    if (v[first] == 1) out.push_back(std::move(v));
  }
  return out;
}

bool line_invariant(const grpkit::FpVector& v, const std::vector<grpkit::FpMatrix>& mats) {
  for (const auto& a : mats) {
    const grpkit::FpVector w = std::span<const std::uint32_t>(v) * a;
    // w must be a multiple of v: all 2x2 minors vanish.
    const std::uint32_t p = a.p();
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        const std::uint64_t l = std::uint64_t{v[i]} * w[j] % p;
        const std::uint64_t r = std::uint64_t{v[j]} * w[i] % p;
        if (l != r) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool has_invariant_subspace(const grpkit::MatModule& m) {
  if (m.dim > 3) throw std::invalid_argument("oracle: dim > 3");
  if (m.dim <= 1) return false;
  const auto points = projective_points(m.p, m.dim);
  for (const auto& v : points) {
    if (line_invariant(v, m.action)) return true;
  }
  if (m.dim == 3) {
    // A plane is invariant iff its annihilator line is invariant under the transposes.
    std::vector<grpkit::FpMatrix> t;
    for (const auto& a : m.action) t.push_back(a.transpose());
    for (const auto& v : points) {
      if (line_invariant(v, t)) return true;
    }
  }
  return false;
}

}  // namespace oracle
