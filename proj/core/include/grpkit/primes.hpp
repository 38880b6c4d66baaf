#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace grpkit {

bool is_prime(std::uint64_t n);

// Prime factorization as (prime, exponent) pairs in increasing prime order. 1 -> {}.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

// True iff n = p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

// Primes r with lo < r < hi.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

}  // namespace grpkit
