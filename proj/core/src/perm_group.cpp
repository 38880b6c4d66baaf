#include "grpkit/perm_group.hpp"

#include <deque>
#include <limits>

#include "grpkit/errors.hpp"
#include "grpkit/primes.hpp"

namespace grpkit {

std::uint64_t StabilizerChain::order() const {
  std::uint64_t ord = 1;
  for (const auto& lvl : levels) {
    const std::uint64_t t = lvl.orbit.size();
    if (ord > std::numeric_limits<std::uint64_t>::max() / t) {
      throw OrderExceedsCap(std::numeric_limits<std::uint64_t>::max(),
                            std::numeric_limits<std::uint64_t>::max());
    }
    ord *= t;
  }
  return ord;
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(levels.size());
  for (const auto& lvl : levels) out.push_back(lvl.orbit.size());
  return out;
}

Permutation StabilizerChain::transversal_inverse(std::size_t level, Point beta) const {
  const Level& lvl = levels[level];
  Permutation acc(degree);
  Point cur = beta;
  while (lvl.schreier[cur] != kBasePoint) {
    const auto s = static_cast<std::size_t>(lvl.schreier[cur]);
    acc = compose(acc, strong_inverses[s]);
    cur = strong_inverses[s](cur);
  }
  return acc;
}

Permutation StabilizerChain::transversal_element(std::size_t level, Point beta) const {
  return transversal_inverse(level, beta).inverse();
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from) const {
  Permutation tmp;
  for (std::size_t i = from; i < levels.size(); ++i) {
    const Level& lvl = levels[i];
    Point beta = g(lvl.base_point);
    if (lvl.schreier[beta] == kNotInOrbit) return {std::move(g), i};
    while (lvl.schreier[beta] != kBasePoint) {
      const auto s = static_cast<std::size_t>(lvl.schreier[beta]);
      compose_into(g, strong_inverses[s], tmp);
      std::swap(g, tmp);
      beta = g(lvl.base_point);
    }
  }
  return {std::move(g), levels.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
  auto [residue, level] = sift(g);
  return level == levels.size() && residue.is_identity();
}

namespace {

class ChainBuilder {
 public:
  ChainBuilder(std::span<const Permutation> gens, std::size_t degree) {
    chain_.degree = degree;
    for (const auto& g : gens) {
      if (g.degree() != degree) throw DegreeMismatch(g.degree(), degree);
      if (!g.is_identity()) add_strong(g);
    }
    for (std::size_t s = 0; s < chain_.strong_generators.size(); ++s) {
      const auto& g = chain_.strong_generators[s];
      bool fixes_base = true;
      for (Point b : chain_.base) {
        if (g(b) != b) {
          fixes_base = false;
          break;
        }
      }
      if (fixes_base) chain_.base.push_back(g.first_moved_point());
    }
    for (std::size_t i = 0; i < chain_.base.size(); ++i) {
      StabilizerChain::Level lvl;
      lvl.base_point = chain_.base[i];
      for (std::size_t s = 0; s < chain_.strong_generators.size(); ++s) {
        if (fixes_prefix(chain_.strong_generators[s], i)) lvl.generators.push_back(s);
      }
      chain_.levels.push_back(std::move(lvl));
      rebuild_orbit(i);
    }
  }

  StabilizerChain run() {
    std::size_t k = chain_.levels.size();
    std::size_t i = k;
    while (i > 0) {
      const std::size_t lv = i - 1;
      auto jump = check_level(lv);
      if (jump) {
        i = *jump + 1;
      } else {
        --i;
      }
    }
    return std::move(chain_);
  }

 private:
  bool fixes_prefix(const Permutation& g, std::size_t count) const {
    for (std::size_t j = 0; j < count; ++j) {
      if (g(chain_.base[j]) != chain_.base[j]) return false;
    }
    return true;
  }

  std::size_t add_strong(const Permutation& g) {
    chain_.strong_generators.push_back(g);
    chain_.strong_inverses.push_back(g.inverse());
    return chain_.strong_generators.size() - 1;
  }

  void rebuild_orbit(std::size_t i) {
    auto& lvl = chain_.levels[i];
    lvl.schreier.assign(chain_.degree, StabilizerChain::kNotInOrbit);
    lvl.orbit.clear();
    lvl.schreier[lvl.base_point] = StabilizerChain::kBasePoint;
    lvl.orbit.push_back(lvl.base_point);
    for (std::size_t head = 0; head < lvl.orbit.size(); ++head) {
      const Point x = lvl.orbit[head];
      for (std::size_t s : lvl.generators) {
        const Point y = chain_.strong_generators[s](x);
        if (lvl.schreier[y] == StabilizerChain::kNotInOrbit) {
          lvl.schreier[y] = static_cast<std::int32_t>(s);
          lvl.orbit.push_back(y);
        }
      }
    }
  }

  // Tests every Schreier generator of level i. On the first one that fails to
  // sift, extends the strong generating set and returns the level to resume at.
  std::optional<std::size_t> check_level(std::size_t i) {
    const auto& lvl = chain_.levels[i];
    const std::vector<Point> orbit = lvl.orbit;
    const std::vector<std::size_t> gens = lvl.generators;
    for (Point beta : orbit) {
      const Permutation u = chain_.transversal_element(i, beta);
      for (std::size_t s : gens) {
        const Permutation& x = chain_.strong_generators[s];
        const Point image = x(beta);
        Permutation h = compose(compose(u, x), chain_.transversal_inverse(i, image));
        if (h.is_identity()) continue;
        auto [residue, j] = chain_.sift(std::move(h), i + 1);
        if (j == chain_.levels.size() && residue.is_identity()) continue;

        if (j == chain_.levels.size()) {
          StabilizerChain::Level fresh;
          fresh.base_point = residue.first_moved_point();
          chain_.base.push_back(fresh.base_point);
          chain_.levels.push_back(std::move(fresh));
        }
        const std::size_t idx = add_strong(residue);
        for (std::size_t l = i + 1; l <= j; ++l) {
          chain_.levels[l].generators.push_back(idx);
          rebuild_orbit(l);
        }
        return j;
      }
    }
    return std::nullopt;
  }

  StabilizerChain chain_;
};

}  // namespace

StabilizerChain schreier_sims(std::span<const Permutation> generators, std::size_t degree) {
  return ChainBuilder(generators, degree).run();
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<ChainCache>()) {
  if (degree_ == 0) throw std::invalid_argument("degree must be positive");
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw DegreeMismatch(g.degree(), degree_);
  }
  if (generators_.empty()) generators_.emplace_back(degree_);
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] { cache_->chain = schreier_sims(generators_, degree_); });
  return *cache_->chain;
}

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  const auto& ch = chain();
  Permutation acc(degree_);
  for (std::size_t i = ch.levels.size(); i-- > 0;) {
    const auto& orbit = ch.levels[i].orbit;
    const Point beta = orbit[rng() % orbit.size()];
    acc = compose(acc, ch.transversal_element(i, beta));
  }
  return acc;
}

void PermGroup::for_each_element(const std::function<void(const Permutation&)>& visit,
                                 std::uint64_t cap) const {
  const auto& ch = chain();
  const std::uint64_t ord = ch.order();
  if (ord > cap) throw OrderExceedsCap(ord, cap);

  // Every element factors uniquely as u_{k-1} ... u_1 u_0 with u_i a coset
  // representative of level i.
  std::vector<std::vector<Permutation>> reps(ch.levels.size());
  for (std::size_t i = 0; i < ch.levels.size(); ++i) {
    for (Point beta : ch.levels[i].orbit) reps[i].push_back(ch.transversal_element(i, beta));
  }
  const std::size_t k = ch.levels.size();
  if (k == 0) {
    visit(Permutation(degree_));
    return;
  }
  std::vector<Permutation> partial(k + 1);
  partial[k] = Permutation(degree_);
  std::vector<std::size_t> choice(k, 0);
  // Iterative odometer over (choice[k-1], ..., choice[0]).
  std::size_t level = k;
  while (true) {
    while (level > 0) {
      --level;
      compose_into(partial[level + 1], reps[level][choice[level]], partial[level]);
    }
    visit(partial[0]);
    // advance
    std::size_t l = 0;
    while (l < k && ++choice[l] == reps[l].size()) {
      choice[l] = 0;
      ++l;
    }
    if (l == k) break;
    level = l + 1;
  }
}

const StabilizerChain& build_chain(const PermGroup& group) { return group.chain(); }

bool contains(const PermGroup& group, const Permutation& g) { return group.contains(g); }

std::vector<Permutation> elements(const PermGroup& group, std::uint64_t cap) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(group.order(), cap)));
  group.for_each_element([&](const Permutation& g) { out.push_back(g); }, cap);
  return out;
}

std::uint64_t exponent(const PermGroup& group, std::uint64_t cap) {
  std::uint64_t e = 1;
  group.for_each_element([&](const Permutation& g) { e = lcm(e, g.order()); }, cap);
  return e;
}

}  // namespace grpkit
