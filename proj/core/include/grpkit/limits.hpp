#pragma once

#include <cstdint>

namespace grpkit {

// Default limits. Every brute-force routine refuses beyond its cap instead of degrading.
inline constexpr std::uint64_t kEnumerationCap = 10'000;
inline constexpr std::uint64_t kLatticeCap = 5'000;
inline constexpr std::uint64_t kNormalizerCap = 10'000'000;
inline constexpr std::uint64_t kDegreeCap = 50'000;
inline constexpr std::uint64_t kPrimeSearchBound = 1'000'000;

struct Limits {
  std::uint64_t enumeration = kEnumerationCap;
  std::uint64_t lattice = kLatticeCap;
  std::uint64_t normalizer = kNormalizerCap;
  std::uint64_t degree = kDegreeCap;
};

}  // namespace grpkit
