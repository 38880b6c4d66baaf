#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grpkit {

using Point = std::uint32_t;

// A bijection on {0, ..., degree-1}.
//
// Composition is left-to-right throughout the library: compose(a, b) maps
// x to b(a(x)), i.e. "apply a, then b". The same convention fixes the
// meaning of group words, conjugation (h^g = g^-1 h g) and module actions.
class Permutation {
 public:
  Permutation() = default;

  // Identity of the given degree.
  explicit Permutation(std::size_t degree);

  // Throws std::invalid_argument unless images is a bijection on its index range.
  explicit Permutation(std::vector<Point> images);

  // Skips the bijection check; callers guarantee validity.
  static Permutation from_images_unchecked(std::vector<Point> images);

  // Builds a permutation from 0-based disjoint cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;

  // Least common multiple of cycle lengths.
  std::uint64_t order() const;
  bool is_even() const;

  // Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  // Smallest point not fixed, or degree() for the identity.
  Point first_moved_point() const noexcept;

  std::size_t hash() const noexcept;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

// a then b. Throws DegreeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

// Writes a then b into out (resized as needed); no degree check.
void compose_into(const Permutation& a, const Permutation& b, Permutation& out);

// g^-1 h g.
Permutation conjugate(const Permutation& h, const Permutation& g);

// 1-based cycle notation, "()" for the identity, e.g. "(1,2)(3,4)".
std::string to_cycle_string(const Permutation& p);

// Parses 1-based cycle notation ("(1,2)(3,4)", "(1 2 3)", "()") of the given degree.
// Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace grpkit
