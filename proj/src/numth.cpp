#include "ffirred/numth.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ffirred/error.hpp"

namespace ffirred::numth {

namespace {
constexpr std::uint64_t kLimit63 = std::uint64_t{1} << 63;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k <= n / k; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t m) {
  Factorization out;
  for (std::uint64_t k = 2; k <= m / k; k += (k == 2 ? 1 : 2)) {
    if (m % k != 0) continue;
    unsigned e = 0;
    while (m % k == 0) {
      m /= k;
      ++e;
    }
    out.push_back({k, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [prime, exponent] : factorize(m)) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t phi = m;
  for (const auto& pp : factorize(m)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

int moebius(std::uint64_t m) {
  int mu = 1;
  for (const auto& pp : factorize(m)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mult_order_mod(std::uint64_t q, std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::NotCoprime, "modulus must be positive");
  if (m == 1) return 1;
  if (std::gcd(q, m) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
  }
  const std::uint64_t base = q % m;
  std::uint64_t power = base;
  for (std::uint64_t e = 1; e <= m; ++e) {
    if (power == 1) return e;
    power = mul_mod(power, base, m);
  }
  // Unreachable for coprime inputs: e <= phi(m) < m.
  throw Error(ErrorCode::CapExceeded, "multiplicative order not found within m steps");
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit) {
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > limit) return std::nullopt;
    if (base <= 1) break;
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<std::uint64_t> checked_lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  const unsigned __int128 l = static_cast<unsigned __int128>(a / std::gcd(a, b)) * b;
  if (l >= kLimit63) return std::nullopt;
  return static_cast<std::uint64_t>(l);
}

std::uint64_t group_order(std::uint64_t q, unsigned d) {
  const auto qd = checked_pow(q, d, kLimit63);
  if (!qd) {
    throw Error(ErrorCode::CapacityExceeded,
                std::to_string(q) + "^" + std::to_string(d) + " - 1 does not fit in 63 bits");
  }
  return *qd - 1;
}

}  // namespace ffirred::numth
