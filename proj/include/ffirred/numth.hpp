#pragma once

// Integer number theory used by the irreducibility pipeline: factorization,
// divisor enumeration, Euler phi, Moebius mu and the multiplicative order of
// q modulo m. All routines work on unsigned 64-bit integers below 2^63 and use
// plain trial division.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ffirred::numth {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization, ascending by prime. Empty for m = 1.
using Factorization = std::vector<PrimePower>;

bool is_prime(std::uint64_t n);

Factorization factorize(std::uint64_t m);

/// All positive divisors of m, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t m);

std::uint64_t euler_phi(std::uint64_t m);

int moebius(std::uint64_t m);

/// Smallest e >= 1 with q^e = 1 (mod m). Defined as 1 for m = 1.
/// Throws NotCoprime when gcd(q, m) != 1.
std::uint64_t mult_order_mod(std::uint64_t q, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// base^exp if the result is at most `limit`, otherwise nullopt.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit = (std::uint64_t{1} << 63));

/// lcm(a, b) if it fits below 2^63, otherwise nullopt.
std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b);

/// q^d - 1, throwing CapacityExceeded when q^d exceeds 2^63.
std::uint64_t group_order(std::uint64_t q, unsigned d);

}  // namespace ffirred::numth
