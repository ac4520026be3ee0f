#include "ffirred/matrix.hpp"

#include <string>
#include <utility>

#include "ffirred/companion.hpp"
#include "ffirred/error.hpp"
#include "ffirred/numth.hpp"

namespace ffirred {

Mat::Mat(Field field, std::size_t d) : field_(std::move(field)), d_(d), a_(d * d, 0) {}

Mat::Mat(Field field, std::size_t d, std::vector<Elem> entries)
    : field_(std::move(field)), d_(d), a_(std::move(entries)) {
  if (a_.size() != d_ * d_) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a_.size()) + " entries for a " + std::to_string(d_) + "x" + std::to_string(d_) +
                    " matrix");
  }
  for (Elem e : a_) {
    if (e >= field_.q()) {
      throw Error(ErrorCode::CoefficientOutOfRange, std::to_string(e) + " is not an element of F_" + field_.to_string());
    }
  }
}

Mat Mat::identity(const Field& field, std::size_t d) {
  Mat out(field, d);
  for (std::size_t i = 0; i < d; ++i) out.at(i, i) = 1;
  return out;
}

Mat Mat::from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t d = rows.size();
  std::vector<Elem> entries;
  entries.reserve(d * d);
  for (const auto& r : rows) {
    if (r.size() != d) throw Error(ErrorCode::DimensionMismatch, "matrix rows must have length " + std::to_string(d));
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Mat(field, d, std::move(entries));
}

bool Mat::is_identity() const noexcept {
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) {
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

void Mat::require_compatible(const Mat& b) const {
  field_.require_same(b.field_);
  if (d_ != b.d_) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(d_) + " vs " + std::to_string(b.d_));
  }
}

Mat Mat::operator*(const Mat& b) const {
  require_compatible(b);
  Mat out(field_, d_);
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t k = 0; k < d_; ++k) {
      const Elem aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

Mat Mat::operator-(const Mat& b) const {
  require_compatible(b);
  Mat out(field_, d_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.sub(a_[i], b.a_[i]);
  return out;
}

Mat Mat::operator+(const Mat& b) const {
  require_compatible(b);
  Mat out(field_, d_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.add(a_[i], b.a_[i]);
  return out;
}

Mat mat_pow(const Mat& a, std::uint64_t k) {
  Mat result = Mat::identity(a.field(), a.dim());
  Mat base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::size_t mat_rank(const Mat& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  std::vector<Elem> m(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Elem& { return m[i * d + j]; };

  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < d; ++col) {
    std::size_t pivot = rank;
    while (pivot < d && at(pivot, col) == 0) ++pivot;
    if (pivot == d) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < d; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const Elem inv = f.inv(at(rank, col));
    for (std::size_t i = rank + 1; i < d; ++i) {
      const Elem factor = f.mul(at(i, col), inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < d; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(rank, j)));
    }
    ++rank;
  }
  return rank;
}

Poly char_poly(const Mat& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  std::vector<Elem> h(a.entries().begin(), a.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Elem& { return h[i * n + j]; };

  // Similarity transforms to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = j + 1;
    while (pivot < n && at(pivot, j) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pivot), at(r, j + 1));
    }
    const Elem inv = f.inv(at(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      const Elem u = f.mul(at(k, j), inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) at(k, c) = f.sub(at(k, c), f.mul(u, at(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) at(r, j + 1) = f.add(at(r, j + 1), f.mul(u, at(r, k)));
    }
  }

  // p_k = (t - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{i<j<=k} h_{j,j-1}) p_{i-1}  (1-based)
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::one(f));
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = p[k - 1] * Poly(f, {f.neg(at(k - 1, k - 1)), 1});
    Elem prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = f.mul(prod, at(i, i - 1));
      if (prod == 0) break;
      const Elem c = f.mul(at(i - 1, k - 1), prod);
      if (c != 0) next = next - p[i - 1].scaled(c);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Poly min_poly(const Mat& a) {
  const Field& f = a.field();
  const std::size_t d = a.dim();
  const std::size_t len = d * d;

  // Reduced Krylov vectors with their pivots, and for each one the combination
  // of powers E, a, a^2, ... it stands for.
  struct Row {
    std::vector<Elem> vec;
    std::size_t pivot;
    std::vector<Elem> combo;
  };
  std::vector<Row> basis;

  Mat power = Mat::identity(f, d);
  for (std::size_t k = 0; k <= len; ++k) {
    std::vector<Elem> v(power.entries().begin(), power.entries().end());
    std::vector<Elem> combo(k + 1, 0);
    combo[k] = 1;
    for (const Row& row : basis) {
      const Elem c = v[row.pivot];
      if (c == 0) continue;
      for (std::size_t i = row.pivot; i < len; ++i) v[i] = f.sub(v[i], f.mul(c, row.vec[i]));
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] = f.sub(combo[i], f.mul(c, row.combo[i]));
    }
    std::size_t pivot = 0;
    while (pivot < len && v[pivot] == 0) ++pivot;
    if (pivot == len) return Poly(f, std::move(combo));  // combo[k] == 1

    // Normalize so the pivot entry is 1.
    const Elem inv = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, inv);
    for (auto& x : combo) x = f.mul(x, inv);
    basis.push_back({std::move(v), pivot, std::move(combo)});
    power = power * a;
  }
  // Cayley-Hamilton bounds the degree by d.
  throw Error(ErrorCode::CapExceeded, "no Krylov dependence found");
}

Mat evaluate(const Poly& p, const Mat& a) {
  p.field().require_same(a.field());
  const Field& f = a.field();
  Mat acc(f, a.dim());
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    acc = acc * a;
    for (std::size_t i = 0; i < a.dim(); ++i) acc.at(i, i) = f.add(acc.at(i, i), p.raw(k));
  }
  return acc;
}

Conjugator random_conjugator(const Field& field, std::size_t d, std::mt19937_64& rng) {
  Conjugator c{Mat::identity(field, d), Mat::identity(field, d)};
  if (d == 0) return c;
  std::uniform_int_distribution<std::size_t> index(0, d - 1);
  std::uniform_int_distribution<Elem> nonzero(1, static_cast<Elem>(field.q() - 1));
  const std::size_t steps = 4 * d * d + 4;
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t i = index(rng);
    const std::size_t j = index(rng);
    const Elem k = nonzero(rng);
    if (i != j) {
      // P <- P (E + k e_i e_j^T): column j += k * column i.
      // P^-1 <- (E - k e_i e_j^T) P^-1: row i -= k * row j.
      for (std::size_t r = 0; r < d; ++r) c.p.at(r, j) = field.add(c.p.at(r, j), field.mul(k, c.p.at(r, i)));
      for (std::size_t col = 0; col < d; ++col) {
        c.p_inv.at(i, col) = field.sub(c.p_inv.at(i, col), field.mul(k, c.p_inv.at(j, col)));
      }
    } else {
      // Scale column i of P by k and row i of P^-1 by 1/k.
      const Elem k_inv = field.inv(k);
      for (std::size_t r = 0; r < d; ++r) c.p.at(r, i) = field.mul(c.p.at(r, i), k);
      for (std::size_t col = 0; col < d; ++col) c.p_inv.at(i, col) = field.mul(c.p_inv.at(i, col), k_inv);
    }
  }
  return c;
}

Mat companion_matrix(const Poly& f) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "companion matrix needs degree >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, format_poly(f) + " is not monic");
  const Field& field = f.field();
  const std::size_t d = f.degree();
  Mat out(field, d);
  for (std::size_t i = 0; i + 1 < d; ++i) out.at(i, i + 1) = 1;
  for (std::size_t j = 0; j < d; ++j) out.at(d - 1, j) = field.neg(f.raw(j));
  return out;
}

StripState::StripState(const Poly& f) : field_(f.field()), d_(f.degree()) {
  const Mat c = companion_matrix(f);
  neg_coeffs_.resize(d_);
  for (std::size_t i = 0; i < d_; ++i) neg_coeffs_[i] = field_.neg(f.raw(i));
  for (std::size_t i = 0; i < d_; ++i) rows_.emplace_back(c.row(i).begin(), c.row(i).end());
}

void StripState::advance() {
  std::vector<Elem> next(d_, 0);
  // rows_[i] is the (d - i)-th row from the end and is weighted by -a_i.
  for (std::size_t i = 0; i < d_; ++i) {
    const Elem w = neg_coeffs_[i];
    if (w == 0) continue;
    const auto& r = rows_[i];
    for (std::size_t j = 0; j < d_; ++j) next[j] = field_.add(next[j], field_.mul(w, r[j]));
  }
  rows_.pop_front();
  rows_.push_back(std::move(next));
  ++power_;
}

bool StripState::window_is_identity() const noexcept {
  // Check the newest row first; it rules out most windows.
  for (std::size_t i = d_; i-- > 0;) {
    const auto& r = rows_[i];
    for (std::size_t j = 0; j < d_; ++j) {
      if (r[j] != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

Mat StripState::window() const {
  std::vector<Elem> entries;
  entries.reserve(d_ * d_);
  for (const auto& r : rows_) entries.insert(entries.end(), r.begin(), r.end());
  return Mat(field_, d_, std::move(entries));
}

StripState strip_next(StripState s) {
  s.advance();
  return s;
}

namespace {

// An exponent of GL_d(F_q): p^r * lcm(q - 1, q^2 - 1, ..., q^d - 1) with
// p^r >= d. Every nonsingular d x d matrix satisfies a^L = E.
std::optional<std::uint64_t> group_exponent(const Field& field, std::size_t d) {
  std::uint64_t pr = 1;
  while (pr < d) pr *= field.p();
  std::uint64_t l = pr;
  for (std::size_t i = 1; i <= d; ++i) {
    const auto qi = numth::checked_pow(field.q(), i);
    if (!qi) return std::nullopt;
    const auto next = numth::checked_lcm(l, *qi - 1);
    if (!next) return std::nullopt;
    l = *next;
  }
  return l;
}

template <typename IsIdentityAt>
std::uint64_t reduce_exponent(std::uint64_t exponent, IsIdentityAt&& is_identity_at) {
  for (const auto& [prime, power] : numth::factorize(exponent)) {
    for (unsigned e = 0; e < power && exponent % prime == 0; ++e) {
      if (!is_identity_at(exponent / prime)) break;
      exponent /= prime;
    }
  }
  return exponent;
}

void check_cap(std::uint64_t order, std::uint64_t cap) {
  if (order > cap) {
    throw Error(ErrorCode::CapExceeded,
                "order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

std::uint64_t mat_order(const Mat& a, std::uint64_t cap, OrderMethod method) {
  const std::size_t d = a.dim();
  if (mat_rank(a) < d) throw Error(ErrorCode::Singular, "matrix has no multiplicative order");

  if (method == OrderMethod::Factored) {
    if (const auto exponent = group_exponent(a.field(), d)) {
      const std::uint64_t order =
          reduce_exponent(*exponent, [&](std::uint64_t k) { return mat_pow(a, k).is_identity(); });
      check_cap(order, cap);
      return order;
    }
    // Exponent does not fit in 63 bits: fall through to plain iteration.
  }

  Mat power = a;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * a;
  }
  throw Error(ErrorCode::CapExceeded, "no identity power within cap " + std::to_string(cap));
}

std::uint64_t poly_order(const Poly& f, std::uint64_t cap, OrderMethod method) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "order needs degree >= 1");
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, format_poly(f) + " is not monic");
  if (f.raw(0) == 0) throw Error(ErrorCode::Singular, "order of f is undefined when f(0) = 0");

  if (method == OrderMethod::Factored) return mat_order(companion_matrix(f), cap, method);

  StripState strip(f);
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (strip.window_is_identity()) return k;
    strip.advance();
  }
  throw Error(ErrorCode::CapExceeded, "no identity power within cap " + std::to_string(cap));
}

}  // namespace ffirred
