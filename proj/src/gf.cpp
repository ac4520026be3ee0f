#include "ffirred/gf.hpp"

#include <string>
#include <utility>

#include "ffirred/error.hpp"
#include "ffirred/numth.hpp"
#include "ffirred/oracle.hpp"
#include "ffirred/poly.hpp"

namespace ffirred::gf {

namespace {

// Fields with q up to this size get a precomputed multiplication table.
constexpr std::uint64_t kMulTableMax = 256;
// Packed values are 32-bit, inverse tables are built up to 2^16 elements.
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
constexpr std::uint64_t kInvTableMax = std::uint64_t{1} << 16;

}  // namespace

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned n = 1;
  std::uint64_t q = 0;
  std::vector<Residue> modulus;        // a_0 .. a_n, monic
  std::vector<std::uint32_t> p_pow;    // p^0 .. p^{n-1}
  std::vector<Elem> mul_table;         // q*q entries when q <= kMulTableMax, n > 1
  std::vector<Elem> inv_table;         // q entries when n > 1 and q <= kInvTableMax

  Residue digit(Elem a, unsigned i) const { return (a / p_pow[i]) % p; }

  Elem mul_slow(Elem a, Elem b) const {
    if (n == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
      const Residue ai = digit(a, i);
      if (ai == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ai} * digit(b, j)) % p;
    }
    // Reduce by the monic modulus from the top down.
    for (unsigned k = 2 * n - 2; k >= n; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < n; ++i) {
        prod[k - n + i] = (prod[k - n + i] + (p - c) * modulus[i]) % p;
      }
    }
    Elem out = 0;
    for (unsigned i = 0; i < n; ++i) out += static_cast<Elem>(prod[i]) * p_pow[i];
    return out;
  }

  Elem pow_slow(Elem a, std::uint64_t k) const {
    Elem result = 1;
    while (k > 0) {
      if (k & 1) result = mul_slow(result, a);
      a = mul_slow(a, a);
      k >>= 1;
    }
    return result;
  }
};

namespace {

std::shared_ptr<Field::Impl> base_impl(std::uint64_t p, unsigned n) {
  if (!numth::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 16)) {
    throw Error(ErrorCode::CapacityExceeded, "characteristic must be below 2^16");
  }
  const auto q = numth::checked_pow(p, n, kMaxOrder - 1);
  if (!q) throw Error(ErrorCode::CapacityExceeded, "field order p^n must be below 2^32");
  auto impl = std::make_shared<Field::Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->n = n;
  impl->q = *q;
  std::uint32_t pw = 1;
  for (unsigned i = 0; i < n; ++i) {
    impl->p_pow.push_back(pw);
    if (i + 1 < n) pw *= impl->p;
  }
  return impl;
}

void build_tables(Field::Impl& impl) {
  if (impl.n == 1) return;
  if (impl.q <= kMulTableMax) {
    impl.mul_table.resize(impl.q * impl.q);
    for (Elem a = 0; a < impl.q; ++a) {
      for (Elem b = 0; b < impl.q; ++b) impl.mul_table[a * impl.q + b] = impl.mul_slow(a, b);
    }
  }
  if (impl.q <= kInvTableMax) {
    impl.inv_table.resize(impl.q, 0);
    for (Elem a = 1; a < impl.q; ++a) impl.inv_table[a] = impl.pow_slow(a, impl.q - 2);
  }
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  auto impl = base_impl(p, 1);
  impl->modulus = {0, 1};
  return Field(std::move(impl));
}

Field Field::extension(std::uint64_t p, unsigned n, std::optional<std::vector<Residue>> modulus) {
  if (n == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be at least 1");
  if (n == 1 && !modulus) return prime(p);
  auto impl = base_impl(p, n);
  const Field base = prime(p);

  if (modulus) {
    if (modulus->size() != n + 1 || modulus->back() != 1) {
      throw Error(ErrorCode::NotMonic, "modulus must be monic of degree " + std::to_string(n));
    }
    std::vector<Elem> coeffs;
    for (Residue r : *modulus) {
      if (r >= p) throw Error(ErrorCode::CoefficientOutOfRange, "modulus residue " + std::to_string(r));
      coeffs.push_back(r);
    }
    if (!oracle::brute_force_irreducible(Poly(base, coeffs))) {
      throw Error(ErrorCode::ModulusReducible, "modulus is reducible over F_" + std::to_string(p));
    }
    impl->modulus = *modulus;
  } else {
    // Base-p counter on (a_0, ..., a_{n-1}), a_0 least significant.
    oracle::EnumCursor cursor(base, n);
    bool found = false;
    for (; !cursor.done(); cursor.advance()) {
      const Poly candidate = cursor.current();
      if (oracle::brute_force_irreducible(candidate)) {
        impl->modulus.assign(candidate.coeffs().begin(), candidate.coeffs().end());
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorCode::ModulusReducible, "no irreducible modulus found");
  }
  if (n == 1) {
    // Degree-1 modulus t - c just relabels F_p; keep the canonical prime field.
    return prime(p);
  }
  build_tables(*impl);
  return Field(std::move(impl));
}

Field Field::parse(const std::string& text, std::optional<std::vector<Residue>> modulus) {
  std::size_t pos = 0;
  auto read_int = [&](std::size_t& at) -> std::uint64_t {
    const std::size_t start = at;
    std::uint64_t v = 0;
    while (at < text.size() && text[at] >= '0' && text[at] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text[at] - '0');
      if (v > (std::uint64_t{1} << 40)) throw ParseError(start, "integer too large");
      ++at;
    }
    if (at == start) throw ParseError(at, "expected integer in field spec '" + text + "'");
    return v;
  };
  const std::uint64_t p = read_int(pos);
  unsigned n = 1;
  if (pos < text.size() && text[pos] == '^') {
    ++pos;
    n = static_cast<unsigned>(read_int(pos));
  }
  if (pos != text.size()) throw ParseError(pos, "unexpected character in field spec '" + text + "'");
  if (n == 1 && !modulus) return prime(p);
  return extension(p, n, std::move(modulus));
}

std::uint32_t Field::p() const noexcept { return impl_->p; }
unsigned Field::n() const noexcept { return impl_->n; }
std::uint64_t Field::q() const noexcept { return impl_->q; }
std::span<const Residue> Field::modulus() const noexcept { return impl_->modulus; }

std::string Field::to_string() const {
  if (n() == 1) return std::to_string(p());
  return std::to_string(p()) + "^" + std::to_string(n());
}

bool Field::operator==(const Field& other) const noexcept {
  if (impl_ == other.impl_) return true;
  return impl_->p == other.impl_->p && impl_->n == other.impl_->n &&
         impl_->modulus == other.impl_->modulus;
}

void Field::require_same(const Field& other) const {
  if (!(*this == other)) {
    throw Error(ErrorCode::FieldMismatch, "F_" + to_string() + " vs F_" + other.to_string());
  }
}

Elem Field::add(Elem a, Elem b) const noexcept {
  const auto& f = *impl_;
  if (f.n == 1) {
    const std::uint32_t s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  if (f.p == 2) return a ^ b;
  Elem out = 0;
  for (unsigned i = 0; i < f.n; ++i) {
    const Residue s = f.digit(a, i) + f.digit(b, i);
    out += (s >= f.p ? s - f.p : s) * f.p_pow[i];
  }
  return out;
}

Elem Field::neg(Elem a) const noexcept {
  const auto& f = *impl_;
  if (f.n == 1) return a == 0 ? 0 : f.p - a;
  if (f.p == 2) return a;
  Elem out = 0;
  for (unsigned i = 0; i < f.n; ++i) {
    const Residue d = f.digit(a, i);
    out += (d == 0 ? 0 : f.p - d) * f.p_pow[i];
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  const auto& f = *impl_;
  if (f.n == 1) return static_cast<Elem>(std::uint64_t{a} * b % f.p);
  if (!f.mul_table.empty()) return f.mul_table[a * f.q + b];
  return f.mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in F_" + to_string());
  const auto& f = *impl_;
  if (f.n == 1) {
    // Extended Euclid on (a, p).
    std::int64_t r0 = f.p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t k = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - k * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - k * s1);
    }
    return static_cast<Elem>((s0 % static_cast<std::int64_t>(f.p) + f.p) % f.p);
  }
  if (!f.inv_table.empty()) return f.inv_table[a];
  return f.pow_slow(a, f.q - 2);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem result = 1;
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

std::vector<Residue> Field::digits(Elem a) const {
  std::vector<Residue> out(n());
  for (unsigned i = 0; i < n(); ++i) out[i] = impl_->digit(a, i);
  return out;
}

Elem Field::from_digits(std::span<const Residue> digits) const {
  if (digits.size() > n()) {
    throw Error(ErrorCode::CoefficientOutOfRange,
                "element of F_" + to_string() + " has at most " + std::to_string(n()) + " digits");
  }
  Elem out = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= p()) {
      throw Error(ErrorCode::CoefficientOutOfRange,
                  "digit " + std::to_string(digits[i]) + " is not below p = " + std::to_string(p()));
    }
    out += digits[i] * impl_->p_pow[i];
  }
  return out;
}

Elem Field::from_integer(std::int64_t v) const noexcept {
  const std::int64_t pp = p();
  return static_cast<Elem>(((v % pp) + pp) % pp);
}

FieldElement Field::element(Elem value) const { return FieldElement(*this, value); }
FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_.q()) {
    throw Error(ErrorCode::CoefficientOutOfRange,
                std::to_string(value) + " is not an element of F_" + field_.to_string());
  }
}

FieldElement FieldElement::operator+(const FieldElement& b) const {
  field_.require_same(b.field_);
  return FieldElement(field_, field_.add(value_, b.value_));
}

FieldElement FieldElement::operator-(const FieldElement& b) const {
  field_.require_same(b.field_);
  return FieldElement(field_, field_.sub(value_, b.value_));
}

FieldElement FieldElement::operator*(const FieldElement& b) const {
  field_.require_same(b.field_);
  return FieldElement(field_, field_.mul(value_, b.value_));
}

FieldElement FieldElement::operator/(const FieldElement& b) const {
  field_.require_same(b.field_);
  return FieldElement(field_, field_.mul(value_, field_.inv(b.value_)));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(value_)); }

FieldElement inverse(const FieldElement& a) { return a.field().element(a.field().inv(a.value())); }

FieldElement pow(const FieldElement& a, std::uint64_t k) {
  return a.field().element(a.field().pow(a.value(), k));
}

}  // namespace ffirred::gf
