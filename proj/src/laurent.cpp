#include "kncross/laurent.hpp"
#include "kncross/error.hpp"

#include <algorithm>

namespace kncross {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigInt& c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(int exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::precondition, "zero polynomial has no exponent range");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::precondition, "zero polynomial has no exponent range");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly p;
  p.terms_.insert(terms_.upper_bound(0), terms_.end());
  return p;
}

LaurentPoly LaurentPoly::negative_part() const {
  LaurentPoly p;
  p.terms_.insert(terms_.begin(), terms_.lower_bound(0));
  return p;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + shift, c);
  return p;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1 && e != 0;
    if (!unit) out += magnitude.get_str();
    if (e != 0) {
      if (!unit) out += "*";
      out += "x";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0 || order % 2 != 0) throw Error(ErrorCode::precondition, "series order must be even and nonnegative");
  coeffs_.resize(order / 2 + 1);
}

TruncatedSeries::TruncatedSeries(int order, const LaurentPoly& constant) : TruncatedSeries(order) {
  coeffs_[0] = constant;
}

const LaurentPoly& TruncatedSeries::coeff(int t_exponent) const {
  static const LaurentPoly zero;
  if (t_exponent < 0 || t_exponent > order_ || t_exponent % 2 != 0) return zero;
  return coeffs_[t_exponent / 2];
}

void TruncatedSeries::set_coeff(int t_exponent, LaurentPoly value) {
  if (t_exponent < 0 || t_exponent > order_ || t_exponent % 2 != 0) {
    throw Error(ErrorCode::precondition, "t-exponent " + std::to_string(t_exponent) + " outside the series");
  }
  coeffs_[t_exponent / 2] = std::move(value);
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

bool TruncatedSeries::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const LaurentPoly& p) { return p.has_nonnegative_coefficients(); });
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order_ != order_) throw Error(ErrorCode::precondition, "series orders differ");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += rhs.coeffs_[m];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.order_ != order_) throw Error(ErrorCode::precondition, "series orders differ");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= rhs.coeffs_[m];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  if (lhs.order_ != rhs.order_) throw Error(ErrorCode::precondition, "series orders differ");
  TruncatedSeries out(lhs.order_);
  const std::size_t size = out.coeffs_.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < size; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries operator*(const LaurentPoly& lhs, const TruncatedSeries& rhs) {
  TruncatedSeries out(rhs.order_);
  for (std::size_t m = 0; m < rhs.coeffs_.size(); ++m) out.coeffs_[m] = lhs * rhs.coeffs_[m];
  return out;
}

TruncatedSeries TruncatedSeries::times_t2(int steps) const {
  TruncatedSeries out(order_);
  for (std::size_t m = 0; m + steps < coeffs_.size(); ++m) out.coeffs_[m + steps] = coeffs_[m];
  return out;
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
  if (exponent < 0) throw Error(ErrorCode::precondition, "negative series power");
  TruncatedSeries result(order_, LaurentPoly::constant(1));
  TruncatedSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BivariateLaurent::BivariateLaurent(std::initializer_list<std::pair<const Exponent, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

void BivariateLaurent::add_term(Exponent exponent, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariateLaurent BivariateLaurent::substitute(const std::pair<Exponent, Exponent>& images) const {
  const auto [a, b] = images.first;
  const auto [c, d] = images.second;
  BivariateLaurent out;
  for (const auto& [e, coeff] : terms_) {
    out.add_term({a * e.first + c * e.second, b * e.first + d * e.second}, coeff);
  }
  return out;
}

BivariateLaurent BivariateLaurent::shifted(int dx, int dy) const {
  BivariateLaurent out;
  for (const auto& [e, c] : terms_) out.add_term({e.first + dx, e.second + dy}, c);
  return out;
}

BivariateLaurent& BivariateLaurent::operator+=(const BivariateLaurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BivariateLaurent operator*(const BivariateLaurent& lhs, const BivariateLaurent& rhs) {
  BivariateLaurent out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
  }
  return out;
}

}  // namespace kncross
