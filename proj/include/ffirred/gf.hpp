#pragma once

// Finite fields F_p and F_{p^n}. An element is stored as a single integer in
// [0, q): the base-p digits of that integer are the coefficients c_0, c_1, ...
// of the element's polynomial-basis representation c_0 + c_1 x + ... over the
// defining modulus. For n = 1 the integer is simply the residue mod p.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffirred::gf {

using Residue = std::uint32_t;
/// Packed element value in [0, q).
using Elem = std::uint32_t;

class FieldElement;

/// FieldSpec: the field F_q with q = p^n. Cheap to copy; immutable.
class Field {
 public:
  /// make_prime_field. Throws NotPrime.
  static Field prime(std::uint64_t p);

  /// make_extension_field. With no modulus the lexicographically smallest
  /// monic irreducible of degree n (ascending on a_0, ..., a_{n-1}) is used.
  /// `modulus` lists a_0 .. a_n, constant term first.
  /// Throws NotPrime, ModulusReducible, CapacityExceeded.
  static Field extension(std::uint64_t p, unsigned n,
                         std::optional<std::vector<Residue>> modulus = std::nullopt);

  /// "p" or "p^n" with the smallest modulus; throws ParseError on bad text.
  static Field parse(const std::string& text,
                     std::optional<std::vector<Residue>> modulus = std::nullopt);

  std::uint32_t p() const noexcept;
  unsigned n() const noexcept;
  std::uint64_t q() const noexcept;
  bool is_prime_field() const noexcept { return n() == 1; }

  /// Monic modulus a_0 .. a_n over F_p; {0, 1} (the polynomial t) for prime fields.
  std::span<const Residue> modulus() const noexcept;

  /// "7" or "2^4".
  std::string to_string() const;

  bool operator==(const Field& other) const noexcept;

  // Raw arithmetic on packed values. Callers guarantee values lie in [0, q).
  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const;
  /// Throws DivisionByZero for 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;

  std::vector<Residue> digits(Elem a) const;
  /// Throws CoefficientOutOfRange if a digit is >= p or too many digits are given.
  Elem from_digits(std::span<const Residue> digits) const;
  /// Maps an integer into the prime subfield (reduced mod p).
  Elem from_integer(std::int64_t v) const noexcept;

  FieldElement element(Elem value) const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Throws FieldMismatch when the fields differ.
  void require_same(const Field& other) const;

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// An element tagged with its field. Mixed-field arithmetic throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Elem value);

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }
  /// Residues c_0 .. c_{n-1}; length n.
  std::vector<Residue> coeffs() const { return field_.digits(value_); }

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator/(const FieldElement& b) const;
  FieldElement operator-() const;

  bool operator==(const FieldElement& b) const noexcept {
    return value_ == b.value_ && field_ == b.field_;
  }

 private:
  Field field_;
  Elem value_;
};

FieldElement inverse(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t k);

}  // namespace ffirred::gf
