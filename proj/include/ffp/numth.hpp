#ifndef FFP_NUMTH_HPP
#define FFP_NUMTH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ffp {

bool is_prime(std::uint64_t n);

// Ascending list of (prime, multiplicity) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);

// If q = p^r for a prime p and r >= 1, returns (p, r).
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q);

// Largest s with s*s <= n.
std::uint64_t isqrt(std::uint64_t n);

bool is_perfect_square(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// Odd prime powers q with 3 <= q <= bound, ascending.
std::vector<std::uint64_t> odd_prime_powers_upto(std::uint64_t bound);

// All prime powers q with 2 <= q <= bound, ascending.
std::vector<std::uint64_t> prime_powers_upto(std::uint64_t bound);

}  // namespace ffp

#endif
