#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "grpkit/limits.hpp"
#include "grpkit/perm.hpp"

namespace grpkit {

// Base and strong generating set produced by deterministic Schreier-Sims.
//
// Each level keeps a Schreier vector: for a point beta in the basic orbit,
// schreier[beta] is the index (into strong_generators) of the generator that
// first reached beta during the orbit BFS. Coset representatives are
// recovered by tracing this vector back to the base point.
struct StabilizerChain {
  static constexpr std::int32_t kNotInOrbit = -1;
  static constexpr std::int32_t kBasePoint = -2;

  struct Level {
    Point base_point = 0;
    std::vector<std::size_t> generators;  // indices into strong_generators fixing earlier base points
    std::vector<Point> orbit;             // BFS order, orbit[0] == base_point
    std::vector<std::int32_t> schreier;   // size degree
  };

  std::size_t degree = 0;
  std::vector<Point> base;
  std::vector<Permutation> strong_generators;
  std::vector<Permutation> strong_inverses;
  std::vector<Level> levels;

  std::uint64_t order() const;
  std::vector<std::size_t> transversal_sizes() const;

  bool in_orbit(std::size_t level, Point beta) const {
    return levels[level].schreier[beta] != kNotInOrbit;
  }

  // u_beta: maps the level's base point to beta.
  Permutation transversal_element(std::size_t level, Point beta) const;
  // u_beta^-1.
  Permutation transversal_inverse(std::size_t level, Point beta) const;

  // Strips g through levels [from, end). Returns the residue and the first level
  // where sifting stopped (levels.size() when all levels were passed).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  bool contains(const Permutation& g) const;
};

// Deterministic Schreier-Sims; base points are chosen as smallest moved points.
StabilizerChain schreier_sims(std::span<const Permutation> generators, std::size_t degree);

// A permutation group given by generators. The stabilizer chain is built on
// first use; copies share the cache, and concurrent first use builds it once.
class PermGroup {
 public:
  // An empty generator list is replaced by the identity.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  Permutation identity() const { return Permutation(degree_); }

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool is_trivial() const { return order() == 1; }

  // Throws DegreeMismatch.
  bool contains(const Permutation& g) const;

  // Uniformly random element (product of random coset representatives).
  Permutation random_element(std::mt19937_64& rng) const;

  // Visits every element exactly once, in a deterministic order, without
  // materializing the element list. Throws OrderExceedsCap when order() > cap.
  void for_each_element(const std::function<void(const Permutation&)>& visit,
                        std::uint64_t cap) const;

 private:
  struct ChainCache {
    std::once_flag once;
    std::optional<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

// Returns the cached chain (building it if needed).
const StabilizerChain& build_chain(const PermGroup& group);

bool contains(const PermGroup& group, const Permutation& g);

// All elements in deterministic order. Throws OrderExceedsCap.
std::vector<Permutation> elements(const PermGroup& group, std::uint64_t cap = kEnumerationCap);

// Exponent: lcm of element orders. Throws OrderExceedsCap.
std::uint64_t exponent(const PermGroup& group, std::uint64_t cap = kEnumerationCap);

}  // namespace grpkit
