#pragma once

// Irreducibility and primitivity of monic polynomials over F_q decided from
// the multiplicative order of the companion matrix.
//
// For f of degree d with f(0) != 0 and m = ord f = order of [f]:
//   step 2  m = q^d - 1                 -> irreducible and primitive
//   step 3  p | m                       -> reducible
//   step 4  e = ord_m(q) != d           -> reducible
//   step 5  rank([f]^l - E) < d for a
//           proper divisor l of m       -> reducible, otherwise irreducible
// The same conditions decide the characteristic polynomial of any
// nonsingular matrix (test_matrix).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffirred/matrix.hpp"
#include "ffirred/poly.hpp"

namespace ffirred::irred {

enum class Outcome { Irreducible, Reducible };

std::string to_string(Outcome outcome);

/// Which proper divisors of m the rank step inspects.
enum class DivisorScan {
  /// Every proper divisor, ascending; the witness is the smallest failing l.
  All,
  /// Only the maximal proper divisors m / rho for primes rho | m, ascending.
  Maximal,
};

struct Options {
  OrderMethod order_method = OrderMethod::Iterate;
  DivisorScan divisor_scan = DivisorScan::All;
};

struct RankWitness {
  std::uint64_t l;
  std::size_t rank;

  bool operator==(const RankWitness&) const = default;
};

struct Verdict {
  Outcome outcome = Outcome::Reducible;
  /// Meaningful only for irreducible outcomes.
  bool primitive = false;
  /// ord f; 0 when undefined (f divisible by t).
  std::uint64_t order_m = 0;
  /// 2..5, or 0 for the f(0) = 0 short-circuit.
  int decided_at_step = 0;
  std::size_t degree = 0;
  /// q^d - 1.
  std::uint64_t group_order = 0;
  /// Set when step 4 (or later) computed e = ord_m(q).
  std::optional<std::uint64_t> witness_e;
  /// Set when step 5 found a deficient rank.
  std::optional<RankWitness> witness_rank;

  bool irreducible() const noexcept { return outcome == Outcome::Irreducible; }
};

/// Throws NotMonic, DegreeZero, CapacityExceeded.
Verdict test_irreducible(const Poly& f, const Options& options = {});

/// Decides the characteristic polynomial of a nonsingular matrix.
/// Throws Singular, CapacityExceeded.
Verdict test_matrix(const Mat& a, const Options& options = {});

struct Factor {
  Poly g;
  std::uint64_t multiplicity;
};

/// Order of prod g_i^{s_i}: p^r * lcm(ord g_1, ..., ord g_k) where r is the
/// largest r_i, and r_i is the least integer with p^{r_i} >= s_i.
/// Throws NotIrreducibleFactor, FieldMismatch, CapacityExceeded.
std::uint64_t predicted_order(const std::vector<Factor>& factors, const Field& field);

/// Order of the companion matrix of g^s (a single generalized Jordan block).
std::uint64_t jordan_block_order(const Poly& g, std::uint64_t s);

}  // namespace ffirred::irred
