#include "ffirred/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ffirred/companion.hpp"
#include "ffirred/error.hpp"
#include "ffirred/numth.hpp"

namespace ffirred::generate {

std::vector<std::uint64_t> admissible_orders(const Field& field, std::size_t dprime) {
  if (dprime == 0) throw Error(ErrorCode::DegreeZero, "target degree must be at least 1");
  const std::uint64_t n = numth::group_order(field.q(), static_cast<unsigned>(dprime));
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : numth::divisors(n)) {
    if (numth::mult_order_mod(field.q(), m) == dprime) out.push_back(m);
  }
  return out;
}

std::uint64_t count_by_order(const Field& field, std::size_t d, std::uint64_t m) {
  if (d == 0) throw Error(ErrorCode::DegreeZero, "degree must be at least 1");
  numth::group_order(field.q(), static_cast<unsigned>(d));  // capacity check
  if (m == 0 || std::gcd(field.q(), m) != 1) return 0;
  if (numth::mult_order_mod(field.q(), m) != d) return 0;
  return numth::euler_phi(m) / d;
}

std::size_t GenerationReport::total() const noexcept {
  std::size_t n = 0;
  for (const auto& b : buckets) n += b.polys.size();
  return n;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.degree() + 1; i-- > 0;) {
    if (a.raw(i) != b.raw(i)) return a.raw(i) < b.raw(i);
  }
  return false;
}

GenerationReport generate_from_primitive(const Poly& f, std::size_t dprime, const irred::Options& options) {
  const Field& field = f.field();
  const irred::Verdict verdict = irred::test_irreducible(f, options);
  if (!verdict.irreducible() || !verdict.primitive) {
    throw Error(ErrorCode::NotPrimitive, format_poly(f) + " is not a primitive irreducible polynomial");
  }
  const std::size_t d = f.degree();
  if (dprime == 0 || d % dprime != 0) {
    throw Error(ErrorCode::NotADivisor, std::to_string(dprime) + " does not divide " + std::to_string(d));
  }
  const std::uint64_t s = d / dprime;
  const std::uint64_t group = verdict.group_order;
  const Mat companion = companion_matrix(f);

  GenerationReport report{f, dprime, {}};
  for (std::uint64_t order : admissible_orders(field, dprime)) {
    std::vector<Generated> found;
    const Mat step = mat_pow(companion, group / order);
    for (std::uint64_t l = 1; l <= order; ++l) {
      if (std::gcd(l, order) != 1) continue;
      const Mat b = mat_pow(step, l);
      Poly g = min_poly(b);
      if (!(char_poly(b) == g.pow(s))) report.char_poly_consistent = false;
      auto it = std::find_if(found.begin(), found.end(), [&](const Generated& x) { return x.g == g; });
      if (it == found.end()) {
        found.push_back({std::move(g), {l}});
      } else {
        it->ls.push_back(l);
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Generated& a, const Generated& b) { return canonical_less(a.g, b.g); });

    for (const auto& gen : found) {
      if (gen.multiplicity() != dprime) report.multiplicity_ok = false;
      const bool shape_ok = gen.g.degree() == dprime && gen.g.raw(0) != 0;
      if (!shape_ok || !irred::test_irreducible(gen.g, options).irreducible() ||
          poly_order(gen.g, numth::group_order(field.q(), static_cast<unsigned>(dprime))) != order) {
        report.orders_ok = false;
      }
    }
    if (found.size() != count_by_order(field, dprime, order)) report.counts_ok = false;
    report.buckets.push_back({order, std::move(found)});
  }
  return report;
}

}  // namespace ffirred::generate
