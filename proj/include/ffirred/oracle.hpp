#pragma once

// Brute-force ground truth for the irreducibility pipeline. Nothing here
// depends on the companion-matrix machinery: only polynomial division and
// integer counting.

#include <cstdint>
#include <vector>

#include "ffirred/poly.hpp"

namespace ffirred::oracle {

/// Walks all q^d monic polynomials of degree d. The low coefficients
/// (a_0, ..., a_{d-1}) form a base-q counter with a_0 least significant,
/// digits ordered by packed element value. This is the canonical
/// enumeration order used throughout the library.
class EnumCursor {
 public:
  EnumCursor(Field field, std::size_t degree);

  bool done() const noexcept { return done_; }
  void advance();
  Poly current() const;
  /// Counter value sum a_i q^i of the current polynomial.
  std::uint64_t index() const noexcept { return index_; }

 private:
  Field field_;
  std::vector<Elem> low_;
  std::uint64_t index_ = 0;
  bool done_ = false;
};

/// True iff no monic polynomial of degree 1 .. floor(d/2) divides f.
/// Throws NotMonic and DegreeZero.
bool brute_force_irreducible(const Poly& f);

/// All monic irreducibles of degree d in counter order. Throws
/// CapacityExceeded when q^d exceeds 2^24.
std::vector<Poly> enumerate_irreducibles(const Field& field, std::size_t d);

/// (1/d) sum_{e | d} mu(e) q^(d/e). Throws CapacityExceeded past 2^63.
std::uint64_t necklace_count(const Field& field, std::size_t d);

/// Whether the product of every monic irreducible of degree dividing d
/// equals t^(q^d) - t. Throws CapacityExceeded when q^d exceeds 2^16.
bool binomial_product_check(const Field& field, std::size_t d);

}  // namespace ffirred::oracle
