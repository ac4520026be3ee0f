#pragma once

// Dense univariate polynomials over a finite field. Coefficient i is the
// coefficient of t^i. The zero polynomial is the single coefficient {0}.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ffirred/gf.hpp"

namespace ffirred {

using gf::Elem;
using gf::Field;
using gf::FieldElement;

class Poly {
 public:
  /// The zero polynomial.
  explicit Poly(Field field);
  /// Packed coefficients a_0, a_1, ...; trailing zeros are trimmed.
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly zero(const Field& field) { return Poly(field); }
  static Poly one(const Field& field) { return Poly(field, {1}); }
  /// c * t^k.
  static Poly monomial(const Field& field, std::size_t k, Elem c = 1);
  /// t^d + a_{d-1} t^{d-1} + ... + a_0 from the d low-order coefficients.
  static Poly monic(const Field& field, std::span<const Elem> low_coeffs);
  static Poly from_elements(std::span<const FieldElement> coeffs);

  const Field& field() const noexcept { return field_; }
  /// len - 1; 0 for constants including zero.
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  bool is_monic() const noexcept { return coeffs_.back() == 1; }
  Elem leading() const noexcept { return coeffs_.back(); }
  /// Packed coefficient of t^i (0 past the degree).
  Elem raw(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  FieldElement coeff(std::size_t i) const { return field_.element(raw(i)); }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }

  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator*(const Poly& b) const;
  Poly scaled(Elem c) const;
  Poly pow(std::uint64_t k) const;

  bool operator==(const Poly& b) const noexcept {
    return field_ == b.field_ && coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  Field field_;
  std::vector<Elem> coeffs_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b (or remainder = 0).
/// Throws DivisionByZero for b = 0, FieldMismatch for mixed fields.
DivRem divrem(const Poly& a, const Poly& b);

/// Accepts the coefficient-list grammar ("1,1,0,1", "[1 0],[0 1]") and the
/// symbolic grammar ("t^3 + t + 1", "2*t^2 - t", "[1 1]*t + 1").
/// Throws ParseError (with position) and CoefficientOutOfRange.
Poly parse_poly(std::string_view text, const Field& field);

/// Human form, highest power first: "t^3 + t + 1".
std::string format_poly(const Poly& p);
/// Machine form, constant term first: "1,1,0,1".
std::string format_poly_list(const Poly& p);
/// Single coefficient in list notation: "3" or "[1 1]".
std::string format_coeff(const Field& field, Elem c);

}  // namespace ffirred
