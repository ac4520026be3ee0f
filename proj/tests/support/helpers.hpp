#pragma once

#include <random>
#include <string>
#include <vector>

#include "ffirred/oracle.hpp"
#include "ffirred/poly.hpp"

namespace testing_support {

inline ffirred::Poly poly(const ffirred::Field& field, const std::string& text) {
  return ffirred::parse_poly(text, field);
}

inline ffirred::Elem random_elem(const ffirred::Field& field, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<ffirred::Elem> dist(nonzero ? 1 : 0, static_cast<ffirred::Elem>(field.q() - 1));
  return dist(rng);
}

inline ffirred::Poly random_poly(const ffirred::Field& field, std::size_t max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<ffirred::Elem> c(deg(rng) + 1);
  for (auto& x : c) x = random_elem(field, rng);
  return ffirred::Poly(field, c);
}

inline ffirred::Poly random_monic(const ffirred::Field& field, std::size_t degree, std::mt19937_64& rng,
                                  bool nonzero_constant = true) {
  std::vector<ffirred::Elem> low(degree);
  for (auto& x : low) x = random_elem(field, rng);
  if (nonzero_constant && degree > 0) low[0] = random_elem(field, rng, true);
  return ffirred::Poly::monic(field, low);
}

/// Every monic polynomial of the degree with f(0) != 0, in counter order.
inline std::vector<ffirred::Poly> monic_units(const ffirred::Field& field, std::size_t degree) {
  std::vector<ffirred::Poly> out;
  for (ffirred::oracle::EnumCursor c(field, degree); !c.done(); c.advance()) {
    auto f = c.current();
    if (f.raw(0) != 0) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace testing_support
