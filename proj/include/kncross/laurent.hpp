#pragma once

// Exact Laurent polynomials in x (and in x, y) with big-integer coefficients,
// and power series in t truncated at a fixed even order whose coefficients are
// Laurent polynomials in x.

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kncross/numeric.hpp"

namespace kncross {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms);

  static LaurentPoly constant(const BigInt& c) { return monomial(0, c); }
  static LaurentPoly monomial(int exponent, const BigInt& c = 1);

  const std::map<int, BigInt>& terms() const noexcept { return terms_; }
  BigInt coeff(int exponent) const;
  void add_term(int exponent, const BigInt& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  BigInt constant_term() const { return coeff(0); }
  /// Terms with positive exponent.
  LaurentPoly positive_part() const;
  /// Terms with negative exponent.
  LaurentPoly negative_part() const;
  /// Multiplication by x^shift.
  LaurentPoly shifted(int shift) const;
  bool has_nonnegative_coefficients() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BigInt& c);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const BigInt& c) { return lhs *= c; }
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly&) const = default;

  std::string to_string() const;

 private:
  std::map<int, BigInt> terms_;  // no zero coefficients
};

/// Series in t with LaurentPoly coefficients, retaining t-exponents <= order.
/// Only even t-exponents occur; order must be even.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, const LaurentPoly& constant);

  int order() const noexcept { return order_; }
  /// Coefficient of t^{t_exponent}; zero when odd or beyond the order.
  const LaurentPoly& coeff(int t_exponent) const;
  void set_coeff(int t_exponent, LaurentPoly value);

  bool is_zero() const;
  bool has_nonnegative_coefficients() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator*(const LaurentPoly& lhs, const TruncatedSeries& rhs);
  /// Multiplication by t^{2 * steps}, dropping what passes the order.
  TruncatedSeries times_t2(int steps = 1) const;
  TruncatedSeries pow(int exponent) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  int order_;
  std::vector<LaurentPoly> coeffs_;  // index m holds t^{2m}
};

/// Laurent polynomial in x and y.
class BivariateLaurent {
 public:
  using Exponent = std::pair<int, int>;

  BivariateLaurent() = default;
  BivariateLaurent(std::initializer_list<std::pair<const Exponent, BigInt>> terms);

  const std::map<Exponent, BigInt>& terms() const noexcept { return terms_; }
  void add_term(Exponent exponent, const BigInt& c);

  /// Substitutes x -> x^a y^b and y -> x^c y^d, given as {{a, b}, {c, d}}.
  BivariateLaurent substitute(const std::pair<Exponent, Exponent>& images) const;
  /// Multiplication by x^dx y^dy.
  BivariateLaurent shifted(int dx, int dy) const;

  BivariateLaurent& operator+=(const BivariateLaurent& rhs);
  friend BivariateLaurent operator+(BivariateLaurent lhs, const BivariateLaurent& rhs) { return lhs += rhs; }
  friend BivariateLaurent operator*(const BivariateLaurent& lhs, const BivariateLaurent& rhs);

  bool operator==(const BivariateLaurent&) const = default;

 private:
  std::map<Exponent, BigInt> terms_;
};

}  // namespace kncross
