#include "ffirred/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ffirred/error.hpp"

namespace ffirred {

Poly::Poly(Field field) : field_(std::move(field)), coeffs_{0} {}

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) {
    if (c >= field_.q()) {
      throw Error(ErrorCode::CoefficientOutOfRange,
                  std::to_string(c) + " is not an element of F_" + field_.to_string());
    }
  }
  trim();
}

Poly Poly::monomial(const Field& field, std::size_t k, Elem c) {
  std::vector<Elem> coeffs(k + 1, 0);
  coeffs[k] = c;
  return Poly(field, std::move(coeffs));
}

Poly Poly::monic(const Field& field, std::span<const Elem> low_coeffs) {
  std::vector<Elem> coeffs(low_coeffs.begin(), low_coeffs.end());
  coeffs.push_back(1);
  return Poly(field, std::move(coeffs));
}

Poly Poly::from_elements(std::span<const FieldElement> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::DegreeZero, "no coefficients given");
  const Field& field = coeffs.front().field();
  std::vector<Elem> raw;
  raw.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    field.require_same(c.field());
    raw.push_back(c.value());
  }
  return Poly(field, std::move(raw));
}

void Poly::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0);
}

Poly Poly::operator+(const Poly& b) const {
  field_.require_same(b.field_);
  std::vector<Elem> out(std::max(coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(raw(i), b.raw(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator-(const Poly& b) const {
  field_.require_same(b.field_);
  std::vector<Elem> out(std::max(coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(raw(i), b.raw(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& b) const {
  field_.require_same(b.field_);
  if (is_zero() || b.is_zero()) return Poly(field_);
  std::vector<Elem> out(coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(field_, std::move(out));
}

Poly Poly::scaled(Elem c) const {
  std::vector<Elem> out(coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
  return Poly(field_, std::move(out));
}

Poly Poly::pow(std::uint64_t k) const {
  Poly result = one(field_);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

DivRem divrem(const Poly& a, const Poly& b) {
  a.field().require_same(b.field());
  const Field& field = a.field();
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");

  std::vector<Elem> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.degree();
  if (a.is_zero() || a.degree() < db) return {Poly::zero(field), a};

  std::vector<Elem> quot(a.degree() - db + 1, 0);
  const Elem lead_inv = field.inv(b.leading());
  for (std::size_t k = a.degree() + 1; k-- > db;) {
    const Elem c = field.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) {
      rem[k - db + i] = field.sub(rem[k - db + i], field.mul(c, b.raw(i)));
    }
  }
  rem.resize(db == 0 ? 1 : db);
  return {Poly(field, std::move(quot)), Poly(field, std::move(rem))};
}

// ---------------------------------------------------------------------------
// Text forms.

std::string format_coeff(const Field& field, Elem c) {
  if (field.is_prime_field()) return std::to_string(c);
  std::string out = "[";
  const auto digits = field.digits(c);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits[i]);
  }
  return out + "]";
}

std::string format_poly_list(const Poly& p) {
  std::string out;
  for (std::size_t i = 0; i <= p.degree(); ++i) {
    if (i) out += ',';
    out += format_coeff(p.field(), p.raw(i));
  }
  return out;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    const Elem c = p.raw(k);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += format_coeff(p.field(), c);
      continue;
    }
    if (c != 1) out += format_coeff(p.field(), c) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    // A lone unbracketed constant over F_{p^n} can only mean a prime-subfield value.
    const bool bare_constant = field_.n() > 1 && text_.find_first_of(",[") == std::string_view::npos;
    const bool symbolic = bare_constant || text_.find_first_of("t+-*^") != std::string_view::npos;
    return symbolic ? parse_symbolic() : parse_list();
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected integer");
    return v;
  }

  // "[" digit (" " digit)* "]"; digits must already be residues mod p.
  Elem bracket() {
    const std::size_t start = pos_;
    ++pos_;  // '['
    std::vector<gf::Residue> digits;
    skip_ws();
    while (peek() != ']') {
      if (at_end()) throw ParseError(pos_, "unterminated '['");
      const std::uint64_t d = integer();
      if (d >= field_.p()) {
        throw Error(ErrorCode::CoefficientOutOfRange,
                    "digit " + std::to_string(d) + " at position " + std::to_string(start) +
                        " is not below p = " + std::to_string(field_.p()));
      }
      digits.push_back(static_cast<gf::Residue>(d));
      skip_ws();
    }
    ++pos_;  // ']'
    if (digits.empty()) throw ParseError(start, "empty bracketed coefficient");
    if (digits.size() > field_.n()) {
      throw ParseError(start, "bracketed coefficient has more than " + std::to_string(field_.n()) + " digits");
    }
    return field_.from_digits(digits);
  }

  Elem list_coeff() {
    skip_ws();
    if (peek() == '[') {
      if (field_.is_prime_field()) throw ParseError(pos_, "bracketed coefficient in a prime field");
      return bracket();
    }
    if (!field_.is_prime_field()) throw ParseError(pos_, "extension-field coefficients must be bracketed");
    const std::size_t start = pos_;
    const std::uint64_t v = integer();
    if (v >= field_.p()) {
      throw Error(ErrorCode::CoefficientOutOfRange,
                  "coefficient " + std::to_string(v) + " at position " + std::to_string(start) +
                      " is not below p = " + std::to_string(field_.p()));
    }
    return static_cast<Elem>(v);
  }

  Poly parse_list() {
    std::vector<Elem> coeffs{list_coeff()};
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      coeffs.push_back(list_coeff());
      skip_ws();
    }
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + peek() + "'");
    return Poly(field_, std::move(coeffs));
  }

  // Symbolic coefficient: integer reduced mod p, or a bracketed element.
  Elem symbolic_coeff() {
    if (peek() == '[') return bracket();
    return field_.from_integer(static_cast<std::int64_t>(integer() % field_.p()));
  }

  Poly parse_symbolic() {
    std::map<std::size_t, Elem> terms;
    bool first = true;
    while (true) {
      skip_ws();
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        if (at_end()) break;
        throw ParseError(pos_, std::string("expected '+' or '-', found '") + peek() + "'");
      }
      if (at_end()) throw ParseError(pos_, "dangling sign");
      first = false;

      Elem c = 1;
      std::size_t power = 0;
      bool has_coeff = false;
      if (peek() != 't') {
        c = symbolic_coeff();
        has_coeff = true;
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          if (peek() != 't') throw ParseError(pos_, "expected 't' after '*'");
        }
      }
      if (peek() == 't') {
        ++pos_;
        power = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          power = static_cast<std::size_t>(integer());
          if (power > (1u << 20)) throw ParseError(pos_, "exponent too large");
        }
      } else if (!has_coeff) {
        throw ParseError(pos_, "expected a term");
      }
      if (negate) c = field_.neg(c);
      auto& slot = terms[power];
      slot = field_.add(slot, c);
    }
    std::vector<Elem> coeffs(terms.empty() ? 1 : terms.rbegin()->first + 1, 0);
    for (const auto& [k, c] : terms) coeffs[k] = c;
    return Poly(field_, std::move(coeffs));
  }

  std::string_view text_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Field& field) { return PolyParser(text, field).parse(); }

}  // namespace ffirred
