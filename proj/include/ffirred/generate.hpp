#pragma once

// All monic irreducibles of degree d' | d from one primitive polynomial f of
// degree d: for every admissible order m' and every l <= m' coprime to m',
// B = [f]^((q^d - 1) / m' * l) has characteristic polynomial g^(d/d') for an
// irreducible g of order m'. Each such g arises exactly d' times.

#include <cstdint>
#include <vector>

#include "ffirred/irred.hpp"
#include "ffirred/poly.hpp"

namespace ffirred::generate {

/// Divisors m' of q^d' - 1 with ord_{m'}(q) = d', ascending.
std::vector<std::uint64_t> admissible_orders(const Field& field, std::size_t dprime);

/// phi(m) / d when ord_m(q) = d, otherwise 0.
std::uint64_t count_by_order(const Field& field, std::size_t d, std::uint64_t m);

struct Generated {
  Poly g;
  /// Exponent multipliers l that produced g.
  std::vector<std::uint64_t> ls;
  std::uint64_t multiplicity() const noexcept { return ls.size(); }
};

struct OrderBucket {
  std::uint64_t order;
  /// Distinct polynomials, sorted by canonical counter order.
  std::vector<Generated> polys;
};

struct GenerationReport {
  Poly source;
  std::size_t target_degree = 0;
  std::vector<OrderBucket> buckets;

  /// char_poly(B) == min_poly(B)^(d/d') for every B.
  bool char_poly_consistent = true;
  /// Every distinct g arose exactly d' times.
  bool multiplicity_ok = true;
  /// Every g is irreducible of degree d' with ord g = m'.
  bool orders_ok = true;
  /// Bucket sizes equal phi(m')/d'.
  bool counts_ok = true;

  bool passed() const noexcept { return char_poly_consistent && multiplicity_ok && orders_ok && counts_ok; }
  std::size_t total() const noexcept;
};

/// Throws NotPrimitive when f is not a primitive irreducible and NotADivisor
/// when dprime does not divide deg f.
GenerationReport generate_from_primitive(const Poly& f, std::size_t dprime,
                                         const irred::Options& options = {});

/// Position of a monic polynomial in the canonical enumeration order
/// (degree first, then the base-q counter on a_0 .. a_{d-1}).
bool canonical_less(const Poly& a, const Poly& b);

}  // namespace ffirred::generate
