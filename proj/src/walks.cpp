#include "kncross/walks.hpp"
#include "kncross/error.hpp"

#include <algorithm>
#include <numeric>

namespace kncross {

const std::array<WalkStep, 8>& braid_walk_steps() {
  static const std::array<WalkStep, 8> steps{{
      {"x", 1, 0, false, false},
      {"y", 0, 1, false, false},
      {"xbar", -1, 0, true, false},
      {"ybar", 0, -1, false, true},
      {"x.xbar", 0, 0, false, false},
      {"y.ybar", 0, 0, false, false},
      {"x.ybar", 1, -1, false, true},
      {"xbar.y", -1, 1, true, false},
  }};
  return steps;
}

std::vector<WalkCounts> count_walks_table(int n_max) {
  if (n_max < 0) throw Error(ErrorCode::precondition, "walk length must be nonnegative");
  // x + y never exceeds 1 + length.
  const int side = n_max + 3;
  std::vector<BigInt> current(side * side), next(side * side);
  auto at = [side](std::vector<BigInt>& grid, int x, int y) -> BigInt& { return grid[x * side + y]; };
  at(current, 1, 0) = 1;
  std::vector<WalkCounts> table;
  table.reserve(n_max + 1);
  for (int length = 0;; ++length) {
    table.push_back({at(current, 1, 0), at(current, 0, 1)});
    if (length == n_max) break;
    std::fill(next.begin(), next.end(), BigInt(0));
    const int reach = length + 1;
    for (int x = 0; x <= reach; ++x) {
      for (int y = 0; x + y <= reach; ++y) {
        const BigInt& ways = at(current, x, y);
        if (ways == 0) continue;
        for (const WalkStep& s : braid_walk_steps()) {
          if ((s.needs_positive_x && x == 0) || (s.needs_positive_y && y == 0)) continue;
          at(next, x + s.dx, y + s.dy) += ways;
        }
      }
    }
    std::swap(current, next);
  }
  return table;
}

WalkCounts count_walks_dp(int n) { return count_walks_table(n).back(); }

Kernel braid_kernel() {
  Kernel k;
  k.constant = BivariateLaurent{{{1, 1}, 1}};
  k.t2_part = BivariateLaurent{{{2, 1}, -1}, {{1, 2}, -1}, {{0, 1}, -1}, {{1, 0}, -1},
                               {{2, 0}, -1}, {{0, 2}, -1}, {{1, 1}, -2}};
  return k;
}

TruncatedSeries kernel_at(const TruncatedSeries& y) {
  const int order = y.order();
  const Kernel kernel = braid_kernel();
  std::vector<TruncatedSeries> y_powers{TruncatedSeries(order, LaurentPoly::constant(1)), y, y * y};
  auto evaluate = [&](const BivariateLaurent& part) {
    TruncatedSeries sum(order);
    for (const auto& [e, c] : part.terms()) {
      if (e.second < 0 || e.second > 2) throw Error(ErrorCode::precondition, "kernel degree in y exceeds 2");
      sum += LaurentPoly::monomial(e.first, c) * y_powers[e.second];
    }
    return sum;
  };
  return evaluate(kernel.constant) + evaluate(kernel.t2_part).times_t2();
}

TruncatedSeries y0_series(int order) {
  if (order < 2 || order % 2 != 0) throw Error(ErrorCode::precondition, "Y0 order must be even and >= 2");
  const TruncatedSeries one(order, LaurentPoly::constant(1));
  const TruncatedSeries x(order, LaurentPoly::monomial(1));
  const LaurentPoly xbar_plus_one{{-1, 1}, {0, 1}};
  TruncatedSeries y(order);
  // Each round fixes one more t^2 coefficient.
  for (int round = 0; round < order / 2; ++round) {
    y = (xbar_plus_one * ((x + y) * (one + y))).times_t2();
  }
  return y;
}

namespace {

// Coefficient of t^{2n+2} in the constant-term expression, for n = 1..n_max.
std::vector<BigInt> kernel_ct_coefficients(int n_max) {
  const int order = 2 * n_max + 2;
  const TruncatedSeries y1 = y0_series(order);
  const TruncatedSeries y2 = y1 * y1;
  const TruncatedSeries y3 = y2 * y1;
  const LaurentPoly p1{{0, 1}, {1, -1}, {4, -1}, {3, 1}};
  const LaurentPoly p3{{-4, -1}, {-3, 1}, {0, 1}, {-1, -1}};
  const LaurentPoly p2{{-5, 1}, {-4, -1}, {-1, -1}, {-2, 1}};
  const TruncatedSeries expr = p1 * y1 + p3 * y3 + p2 * y2;
  std::vector<BigInt> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(expr.coeff(2 * n + 2).constant_term());
  return out;
}

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator, const char* what) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (r != 0) throw Error(ErrorCode::inexact_division, std::string(what) + ": non-integral quotient");
  return q;
}

BigInt y0_power_numerator(int k, int m, int n) {
  BigInt sum = 0;
  for (int s = std::max({0, -m, -k}); s <= n + 1; ++s) {
    sum += binomial(n + 1, s) * binomial(n + 1, k + s) * binomial(n + 1, s + m);
  }
  return sum * k;
}

}  // namespace

BigInt rho3_kernel_ct(int n) {
  if (n < 1) throw Error(ErrorCode::precondition, "rho3 kernel route needs n >= 1");
  return kernel_ct_coefficients(n).back();
}

std::vector<BigInt> rho3_kernel_ct_table(int n_max) {
  if (n_max < 1) return {};
  return kernel_ct_coefficients(n_max);
}

BigInt coeff_y0_pow(int k, int m, int n) {
  if (k < 1) throw Error(ErrorCode::precondition, "coeff_y0_pow needs k >= 1");
  if (n < 0) throw Error(ErrorCode::precondition, "coeff_y0_pow needs n >= 0");
  return exact_quotient(y0_power_numerator(k, m, n), n + 1, "Y0 power coefficient");
}

BigInt rho3_closed_form(int n) {
  if (n < 1) throw Error(ErrorCode::precondition, "rho3 closed form needs n >= 1");
  struct Term {
    int k, m, sign;
  };
  static constexpr std::array<Term, 12> terms{{
      {1, 0, 1}, {1, -1, -1}, {1, -4, -1}, {1, -3, 1},
      {3, 4, -1}, {3, 3, 1}, {3, 0, 1}, {3, 1, -1},
      {2, 5, 1}, {2, 4, -1}, {2, 1, -1}, {2, 2, 1},
  }};
  BigInt numerator = 0;
  for (const Term& t : terms) numerator += t.sign * y0_power_numerator(t.k, t.m, n);
  return exact_quotient(numerator, n + 1, "rho3 closed form");
}

namespace {

// Integer polynomial in n, lowest degree first.
using IntPoly = std::vector<long>;

IntPoly from_linear_factors(long scale, std::initializer_list<long> shifts) {
  IntPoly p{scale};
  for (long shift : shifts) {
    IntPoly q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * shift;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  return p;
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// The recurrence polynomials with their signs folded in:
// sum_k alpha[k](n) rho(n + k) = 0.
const std::array<IntPoly, 4>& signed_alphas() {
  static const std::array<IntPoly, 4> alphas{
      from_linear_factors(8, {1, 2, 3}),
      multiply(from_linear_factors(3, {2}), IntPoly{104, 47, 5}),
      multiply(from_linear_factors(3, {4, 7}), IntPoly{11, 2}),
      from_linear_factors(-1, {7, 8, 9}),
  };
  return alphas;
}

BigInt evaluate(const IntPoly& p, long n) {
  BigInt value = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) value = value * n + *it;
  return value;
}

}  // namespace

RecurrenceCoefficients recurrence_coefficients(long n) {
  const auto& a = signed_alphas();
  return {evaluate(a[0], n), evaluate(a[1], n), evaluate(a[2], n), -evaluate(a[3], n)};
}

CountTable rho3_recurrence(int n_max, std::span<const BigInt> seeds) {
  if (seeds.size() != 3) throw Error(ErrorCode::precondition, "recurrence needs exactly three seeds");
  for (int n = 1; n <= 3; ++n) {
    if (seeds[n - 1] != rho3_closed_form(n)) {
      throw Error(ErrorCode::seed_mismatch, "seed rho3(" + std::to_string(n) + ") disagrees with the closed form");
    }
  }
  CountTable table{ClassTag::braids_k_no_isolated, 3, Route::recurrence, {}};
  for (int n = 1; n <= std::min(n_max, 3); ++n) table.entries[n] = seeds[n - 1];
  for (int n = 1; n + 3 <= n_max; ++n) {
    const RecurrenceCoefficients a = recurrence_coefficients(n);
    const BigInt numerator = a.a1 * table.entries[n] + a.a2 * table.entries[n + 1] + a.a3 * table.entries[n + 2];
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numerator.get_mpz_t(), a.a4.get_mpz_t());
    if (r != 0) {
      throw Error(ErrorCode::inexact_division, "recurrence step to n = " + std::to_string(n + 3) + " is not integral");
    }
    table.entries[n + 3] = std::move(q);
  }
  return table;
}

CountTable rho3_recurrence(int n_max) {
  const std::array<BigInt, 3> seeds{rho3_closed_form(1), rho3_closed_form(2), rho3_closed_form(3)};
  return rho3_recurrence(n_max, seeds);
}

CountTable rho3_table(Route route, int n_max) {
  CountTable table{ClassTag::braids_k_no_isolated, 3, route, {}};
  switch (route) {
    case Route::brute:
      for (int n = 1; n <= n_max; ++n) table.entries[n] = brute_count(ClassTag::braids_k_no_isolated, 3, n);
      break;
    case Route::walk_dp: {
      const auto walks = count_walks_table(std::max(n_max, 0));
      for (int n = 1; n <= n_max; ++n) table.entries[n] = walks[n].returns - walks[n].reflected;
      break;
    }
    case Route::kernel_ct: {
      const auto values = rho3_kernel_ct_table(n_max);
      for (int n = 1; n <= n_max; ++n) table.entries[n] = values[n - 1];
      break;
    }
    case Route::closed_form:
      for (int n = 1; n <= n_max; ++n) table.entries[n] = rho3_closed_form(n);
      break;
    case Route::recurrence:
      table.entries = rho3_recurrence(n_max).entries;
      break;
  }
  return table;
}

// ---------------------------------------------------------------------------
// Asymptotics

namespace {

std::vector<Rational> rational_roots(const std::vector<BigInt>& coeffs) {
  // coeffs lowest degree first, integral; rational root theorem.
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  const BigInt constant = abs(coeffs[low]);
  const BigInt leading = abs(coeffs.back());
  auto divisors = [](const BigInt& v) {
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= v; ++d) {
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    }
    return out;
  };
  for (const BigInt& p : divisors(constant)) {
    for (const BigInt& q : divisors(leading)) {
      for (int sign : {1, -1}) {
        Rational candidate(sign * p, q);
        candidate.canonicalize();
        Rational value = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * candidate + Rational(*it);
        if (value == 0 && std::find(roots.begin(), roots.end(), candidate) == roots.end()) {
          roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Rational dominant(const std::vector<Rational>& roots) {
  if (roots.empty()) throw Error(ErrorCode::precondition, "characteristic polynomial has no rational root");
  return *std::max_element(roots.begin(), roots.end(),
                           [](const Rational& a, const Rational& b) { return abs(a) < abs(b); });
}

// Coefficients of the quoted characteristic polynomial, lowest degree first.
const std::array<Rational, 4>& quoted_characteristic() {
  static const std::array<Rational, 4> p{Rational(1), Rational(15, 8), Rational(3, 4), Rational(-1, 8)};
  return p;
}

// Truncated power series in u = 1/n with rational coefficients.
constexpr int kExpansionTerms = 5;
using USeries = std::array<Rational, kExpansionTerms>;

USeries multiply(const USeries& a, const USeries& b) {
  USeries out{};
  for (int i = 0; i < kExpansionTerms; ++i) {
    for (int j = 0; i + j < kExpansionTerms; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Rational generalized_binomial(const Rational& top, int j) {
  Rational value = 1;
  for (int i = 0; i < j; ++i) value = value * (top - i) / (i + 1);
  return value;
}

// (1 + k u)^e
USeries binomial_series(long k, const Rational& e) {
  USeries out{};
  BigInt k_pow = 1;
  for (int j = 0; j < kExpansionTerms; ++j) {
    out[j] = generalized_binomial(e, j) * Rational(k_pow);
    k_pow *= k;
  }
  return out;
}

// u^3 sum_k alpha_k(n) lambda^k (1 + k u)^theta S(n + k), S(m) = sum_i c_i m^-i.
USeries fss_residual(const Rational& lambda, const Rational& theta, const std::array<Rational, 4>& c) {
  USeries total{};
  Rational lambda_pow = 1;
  for (long k = 0; k < 4; ++k) {
    const IntPoly& alpha = signed_alphas()[k];
    USeries scaled_alpha{};
    for (std::size_t d = 0; d < alpha.size(); ++d) scaled_alpha[3 - d] = Rational(alpha[d]);
    USeries shifted_s{};
    for (int i = 0; i < 4; ++i) {
      const USeries part = binomial_series(k, Rational(-i));
      for (int j = 0; i + j < kExpansionTerms; ++j) shifted_s[i + j] += c[i] * part[j];
    }
    const USeries term = multiply(multiply(scaled_alpha, binomial_series(k, theta)), shifted_s);
    for (int j = 0; j < kExpansionTerms; ++j) total[j] += lambda_pow * term[j];
    lambda_pow *= lambda;
  }
  return total;
}

// Solves f(v) = 0 for f affine in v.
template <class F>
Rational solve_affine(F f) {
  const Rational at0 = f(Rational(0));
  const Rational slope = f(Rational(1)) - at0;
  if (slope == 0) throw Error(ErrorCode::precondition, "degenerate linear equation");
  return -at0 / slope;
}

}  // namespace

Rational characteristic_polynomial(const Rational& x) {
  Rational value = 0;
  const auto& p = quoted_characteristic();
  for (auto it = p.rbegin(); it != p.rend(); ++it) value = value * x + *it;
  return value;
}

std::vector<Rational> characteristic_roots() {
  BigInt scale = 1;
  for (const Rational& c : quoted_characteristic()) {
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigInt> integral;
  for (const Rational& c : quoted_characteristic()) integral.push_back(BigInt(c * scale));
  return rational_roots(integral);
}

AsymptoticParams characteristic_analysis() {
  AsymptoticParams params;
  params.lambda = dominant(characteristic_roots());
  const Rational& lambda = params.lambda;

  // Coefficient of n^-1:  sum_k p_k lambda^k (k theta + offset_k) = 0.
  struct ThetaTerm {
    Rational weight;
    int multiplicity;
    Rational offset;
  };
  const std::array<ThetaTerm, 3> theta_terms{{
      {Rational(15, 8), 1, Rational(27, 5)},
      {Rational(3, 4), 2, Rational(21, 2)},
      {Rational(-1, 8), 3, Rational(18)},
  }};
  params.theta = solve_affine([&](const Rational& theta) {
    Rational sum = 0;
    Rational lambda_pow = 1;
    for (const ThetaTerm& t : theta_terms) {
      lambda_pow *= lambda;
      sum += lambda_pow * t.weight * (t.multiplicity * theta + t.offset);
    }
    return sum;
  });

  // Coefficients of n^-2, n^-3, n^-4, lower triangular in (c1, c2, c3):
  //   2268 + 81 c1 = 0
  //   1683 c1 + 162 c2 - 26712 = 0
  //   -32547 c1 + 729 c2 + 129654 + 243 c3 = 0
  params.c1 = Rational(-2268, 81);
  params.c1.canonicalize();
  params.c2 = (Rational(26712) - 1683 * params.c1) / 162;
  params.c3 = (32547 * params.c1 - 729 * params.c2 - 129654) / 243;
  params.K = BigFloat(std::string(kQuotedK), kFloatPrecision);
  return params;
}

AsymptoticParams asymptotics_from_recurrence() {
  AsymptoticParams params;
  // Leading order: sum_k alpha_k[n^3] lambda^k = 0.
  std::vector<BigInt> leading;
  for (const IntPoly& alpha : signed_alphas()) leading.emplace_back(alpha.back());
  params.lambda = dominant(rational_roots(leading));

  std::array<Rational, 4> c{Rational(1), Rational(0), Rational(0), Rational(0)};
  params.theta = solve_affine([&](const Rational& theta) { return fss_residual(params.lambda, theta, c)[1]; });
  for (int j = 1; j <= 3; ++j) {
    c[j] = solve_affine([&](const Rational& v) {
      auto trial = c;
      trial[j] = v;
      return fss_residual(params.lambda, params.theta, trial)[j + 1];
    });
  }
  params.c1 = c[1];
  params.c2 = c[2];
  params.c3 = c[3];
  params.K = BigFloat(std::string(kQuotedK), kFloatPrecision);
  return params;
}

namespace {

BigFloat correction_factor(int n, const AsymptoticParams& params) {
  const Rational u(1, n);
  const Rational value = 1 + params.c1 * u + params.c2 * u * u + params.c3 * u * u * u;
  return BigFloat(value, kFloatPrecision);
}

BigFloat eight_pow_over_n7(int n) {
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 8, static_cast<unsigned long>(n));
  BigInt n7;
  mpz_ui_pow_ui(n7.get_mpz_t(), static_cast<unsigned long>(n), 7);
  BigFloat ratio(power, kFloatPrecision);
  ratio /= BigFloat(n7, kFloatPrecision);
  return ratio;
}

}  // namespace

BigFloat asymptotic_estimate(int n, const AsymptoticParams& params, const BigFloat& K) {
  if (n < 1) throw Error(ErrorCode::precondition, "asymptotic estimate needs n >= 1");
  BigFloat estimate(K, kFloatPrecision);
  estimate *= eight_pow_over_n7(n);
  estimate *= correction_factor(n, params);
  return estimate;
}

BigFloat fit_K(int n_probe, const AsymptoticParams& params) {
  if (n_probe < 50) throw Error(ErrorCode::precondition, "fit_K needs n_probe >= 50");
  const CountTable table = rho3_recurrence(n_probe);
  BigFloat k(table.entries.at(n_probe), kFloatPrecision);
  k /= eight_pow_over_n7(n_probe);
  k /= correction_factor(n_probe, params);
  return k;
}

BigFloat relative_error(const BigFloat& estimate, const BigInt& exact) {
  BigFloat ratio(estimate, kFloatPrecision);
  ratio /= BigFloat(exact, kFloatPrecision);
  ratio -= 1;
  return abs(ratio);
}

}  // namespace kncross
