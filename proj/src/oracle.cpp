#include "ffirred/oracle.hpp"

#include <string>

#include "ffirred/error.hpp"
#include "ffirred/numth.hpp"

namespace ffirred::oracle {

namespace {

constexpr std::uint64_t kEnumerateLimit = std::uint64_t{1} << 24;
constexpr std::uint64_t kBinomialLimit = std::uint64_t{1} << 16;

std::uint64_t checked_qd(const Field& field, std::size_t d, std::uint64_t limit) {
  const auto qd = numth::checked_pow(field.q(), d, limit);
  if (!qd) {
    throw Error(ErrorCode::CapacityExceeded,
                field.to_string() + "^" + std::to_string(d) + " exceeds " + std::to_string(limit));
  }
  return *qd;
}

}  // namespace

EnumCursor::EnumCursor(Field field, std::size_t degree) : field_(std::move(field)), low_(degree, 0) {}

void EnumCursor::advance() {
  for (auto& digit : low_) {
    if (++digit < field_.q()) {
      ++index_;
      return;
    }
    digit = 0;
  }
  done_ = true;
}

Poly EnumCursor::current() const { return Poly::monic(field_, low_); }

bool brute_force_irreducible(const Poly& f) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "irreducibility needs degree >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, format_poly(f) + " is not monic");
  for (std::size_t k = 1; k <= f.degree() / 2; ++k) {
    for (EnumCursor cursor(f.field(), k); !cursor.done(); cursor.advance()) {
      if (divrem(f, cursor.current()).remainder.is_zero()) return false;
    }
  }
  return true;
}

std::vector<Poly> enumerate_irreducibles(const Field& field, std::size_t d) {
  if (d == 0) throw Error(ErrorCode::DegreeZero, "degree must be at least 1");
  checked_qd(field, d, kEnumerateLimit);
  std::vector<Poly> out;
  for (EnumCursor cursor(field, d); !cursor.done(); cursor.advance()) {
    Poly candidate = cursor.current();
    if (brute_force_irreducible(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

std::uint64_t necklace_count(const Field& field, std::size_t d) {
  if (d == 0) throw Error(ErrorCode::DegreeZero, "degree must be at least 1");
  checked_qd(field, d, std::uint64_t{1} << 63);
  __int128 sum = 0;
  for (std::uint64_t e : numth::divisors(d)) {
    const int mu = numth::moebius(e);
    if (mu == 0) continue;
    sum += static_cast<__int128>(mu) * static_cast<__int128>(*numth::checked_pow(field.q(), d / e));
  }
  return static_cast<std::uint64_t>(sum / static_cast<__int128>(d));
}

bool binomial_product_check(const Field& field, std::size_t d) {
  if (d == 0) throw Error(ErrorCode::DegreeZero, "degree must be at least 1");
  const std::uint64_t qd = checked_qd(field, d, kBinomialLimit);
  Poly product = Poly::one(field);
  for (std::uint64_t dprime : numth::divisors(d)) {
    for (const Poly& g : enumerate_irreducibles(field, dprime)) product = product * g;
  }
  const Poly binomial = Poly::monomial(field, qd) - Poly::monomial(field, 1);
  return product == binomial;
}

}  // namespace ffirred::oracle
