#include "ffirred/irred.hpp"

#include <algorithm>
#include <string>

#include "ffirred/companion.hpp"
#include "ffirred/error.hpp"
#include "ffirred/numth.hpp"

namespace ffirred::irred {

std::string to_string(Outcome outcome) {
  return outcome == Outcome::Irreducible ? "IRREDUCIBLE" : "REDUCIBLE";
}

namespace {

std::vector<std::uint64_t> divisors_to_scan(std::uint64_t m, DivisorScan scan) {
  std::vector<std::uint64_t> out;
  if (scan == DivisorScan::All) {
    out = numth::divisors(m);
    out.pop_back();  // m itself
  } else {
    for (const auto& pp : numth::factorize(m)) out.push_back(m / pp.prime);
    std::sort(out.begin(), out.end());
  }
  return out;
}

// Steps 2-5 once m is known. `companion_of` is set only when a = [f].
Verdict decide_from_order(Verdict v, const Mat& a, const std::optional<Poly>& companion_of,
                          const Options& options) {
  const Field& field = a.field();
  const std::size_t d = a.dim();
  const std::uint64_t m = v.order_m;

  if (m == v.group_order) {
    v.outcome = Outcome::Irreducible;
    v.primitive = true;
    v.decided_at_step = 2;
    return v;
  }
  if (m % field.p() == 0) {
    v.outcome = Outcome::Reducible;
    v.decided_at_step = 3;
    return v;
  }
  const std::uint64_t e = numth::mult_order_mod(field.q(), m);
  v.witness_e = e;
  if (e != d) {
    v.outcome = Outcome::Reducible;
    v.decided_at_step = 4;
    return v;
  }

  v.decided_at_step = 5;
  const auto ls = divisors_to_scan(m, options.divisor_scan);
  const Mat identity = Mat::identity(field, d);
  auto deficient = [&](std::uint64_t l, const Mat& power) {
    const std::size_t r = mat_rank(power - identity);
    if (r < d) {
      v.outcome = Outcome::Reducible;
      v.witness_rank = RankWitness{l, r};
      return true;
    }
    return false;
  };

  // Dense divisor lists walk the strip one row at a time; sparse ones jump
  // with square-and-multiply.
  const bool use_strip = companion_of && !ls.empty() && ls.back() < 4 * d * d;
  if (use_strip) {
    StripState strip(*companion_of);
    for (std::uint64_t l : ls) {
      while (strip.power() < l) strip.advance();
      if (deficient(l, strip.window())) return v;
    }
  } else {
    for (std::uint64_t l : ls) {
      if (deficient(l, mat_pow(a, l))) return v;
    }
  }
  v.outcome = Outcome::Irreducible;
  v.primitive = false;
  return v;
}

}  // namespace

Verdict test_irreducible(const Poly& f, const Options& options) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "irreducibility needs degree >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, format_poly(f) + " is not monic");

  Verdict v;
  v.degree = f.degree();
  v.group_order = numth::group_order(f.field().q(), static_cast<unsigned>(v.degree));

  if (f.raw(0) == 0) {
    // t itself is irreducible; any other multiple of t is not. ord is undefined.
    v.outcome = f.degree() == 1 ? Outcome::Irreducible : Outcome::Reducible;
    v.decided_at_step = 0;
    return v;
  }

  const Mat companion = companion_matrix(f);
  v.order_m = poly_order(f, v.group_order, options.order_method);
  return decide_from_order(std::move(v), companion, f, options);
}

Verdict test_matrix(const Mat& a, const Options& options) {
  if (a.dim() == 0) throw Error(ErrorCode::DegreeZero, "empty matrix");
  Verdict v;
  v.degree = a.dim();
  v.group_order = numth::group_order(a.field().q(), static_cast<unsigned>(v.degree));
  v.order_m = mat_order(a, v.group_order + 1, options.order_method);
  if (v.order_m > v.group_order) {
    throw Error(ErrorCode::CapExceeded, "matrix order exceeds q^d - 1");
  }
  return decide_from_order(std::move(v), a, std::nullopt, options);
}

std::uint64_t predicted_order(const std::vector<Factor>& factors, const Field& field) {
  std::uint64_t lcm = 1;
  std::uint64_t p_power = 1;
  for (const auto& [g, s] : factors) {
    field.require_same(g.field());
    if (s == 0) throw Error(ErrorCode::NotIrreducibleFactor, "multiplicity must be positive");
    if (g.degree() == 0 || !g.is_monic() || g.raw(0) == 0 || !test_irreducible(g).irreducible()) {
      throw Error(ErrorCode::NotIrreducibleFactor,
                  format_poly(g) + " is not a monic irreducible with nonzero constant term");
    }
    const std::uint64_t cap = numth::group_order(field.q(), static_cast<unsigned>(g.degree()));
    const auto next = numth::checked_lcm(lcm, poly_order(g, cap));
    if (!next) throw Error(ErrorCode::CapacityExceeded, "LCM of factor orders overflows");
    lcm = *next;
    std::uint64_t pr = 1;
    if (s >= 2) {
      while (pr < s) pr *= field.p();
    }
    p_power = std::max(p_power, pr);
  }
  const auto out = numth::checked_lcm(lcm, p_power);  // coprime, so the product
  if (!out) throw Error(ErrorCode::CapacityExceeded, "predicted order overflows");
  return *out;
}

std::uint64_t jordan_block_order(const Poly& g, std::uint64_t s) {
  return predicted_order({Factor{g, s}}, g.field());
}

}  // namespace ffirred::irred
