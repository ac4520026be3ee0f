#pragma once

// Dense square matrices over F_q and the exact linear algebra the
// irreducibility pipeline needs.

#include <cstdint>
#include <deque>
#include <random>
#include <span>
#include <vector>

#include "ffirred/gf.hpp"
#include "ffirred/poly.hpp"

namespace ffirred {

class Mat {
 public:
  /// d x d zero matrix.
  Mat(Field field, std::size_t d);
  /// Row-major packed entries; size must be d*d.
  Mat(Field field, std::size_t d, std::vector<Elem> entries);

  static Mat identity(const Field& field, std::size_t d);
  static Mat from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return d_; }

  Elem at(std::size_t i, std::size_t j) const noexcept { return a_[i * d_ + j]; }
  Elem& at(std::size_t i, std::size_t j) noexcept { return a_[i * d_ + j]; }
  FieldElement entry(std::size_t i, std::size_t j) const { return field_.element(at(i, j)); }
  std::span<const Elem> row(std::size_t i) const noexcept { return {a_.data() + i * d_, d_}; }
  std::span<const Elem> entries() const noexcept { return a_; }

  bool is_identity() const noexcept;

  Mat operator*(const Mat& b) const;
  Mat operator-(const Mat& b) const;
  Mat operator+(const Mat& b) const;

  bool operator==(const Mat& b) const noexcept {
    return d_ == b.d_ && field_ == b.field_ && a_ == b.a_;
  }

 private:
  void require_compatible(const Mat& b) const;

  Field field_;
  std::size_t d_;
  std::vector<Elem> a_;
};

/// Square-and-multiply; a^0 is the identity.
Mat mat_pow(const Mat& a, std::uint64_t k);

/// Row-echelon rank with exact field inverses.
std::size_t mat_rank(const Mat& a);

/// det(tE - a), monic of degree d, via Hessenberg reduction.
Poly char_poly(const Mat& a);

/// Least-degree monic mu with mu(a) = 0, from the first linear dependence
/// among vec(E), vec(a), vec(a^2), ...
Poly min_poly(const Mat& a);

/// A random invertible matrix together with its inverse, built as a product
/// of random elementary matrices so no inversion kernel is needed.
struct Conjugator {
  Mat p;
  Mat p_inv;

  /// p_inv * a * p.
  Mat apply(const Mat& a) const { return p_inv * a * p; }
};

Conjugator random_conjugator(const Field& field, std::size_t d, std::mt19937_64& rng);

/// p(a) evaluated by Horner's rule.
Mat evaluate(const Poly& p, const Mat& a);

/// Powers of a companion matrix computed on a vertical strip of rows. The
/// window holds the last d rows; after construction it is [f], and every
/// advance appends the row sum_i (-a_i) * row_{end-d+i} and drops the top row,
/// so the window is [f]^(k+1) after k advances.
class StripState {
 public:
  /// Throws NotMonic and DegreeZero.
  explicit StripState(const Poly& f);

  void advance();
  /// The exponent the window currently represents.
  std::uint64_t power() const noexcept { return power_; }
  std::size_t dim() const noexcept { return d_; }
  bool window_is_identity() const noexcept;
  Mat window() const;

 private:
  Field field_;
  std::size_t d_;
  std::vector<Elem> neg_coeffs_;           // -a_0 .. -a_{d-1}
  std::deque<std::vector<Elem>> rows_;     // top to bottom
  std::uint64_t power_ = 1;
};

/// Functional form of StripState::advance.
StripState strip_next(StripState s);

enum class OrderMethod {
  /// a, a^2, a^3, ... until the identity appears.
  Iterate,
  /// Reduce a known exponent of the matrix group by its prime factors.
  Factored,
};

/// Smallest m >= 1 with a^m = E. Throws Singular when rank(a) < d and
/// CapExceeded if no power up to `cap` is the identity.
std::uint64_t mat_order(const Mat& a, std::uint64_t cap, OrderMethod method = OrderMethod::Iterate);

/// ord f = mat_order([f]), using the strip for the Iterate method.
/// Throws Singular when f(0) = 0.
std::uint64_t poly_order(const Poly& f, std::uint64_t cap, OrderMethod method = OrderMethod::Iterate);

}  // namespace ffirred
