#pragma once

// Counting 3-noncrossing braids without isolated points, rho3(n), four ways:
// quadrant walks with a reflection, constant-term extraction from the kernel
// root Y0, the closed binomial sum, and the order-three P-recurrence. Also the
// asymptotic expansion rho3(n) ~ K 8^n n^-7 (1 + c1/n + c2/n^2 + c3/n^3).

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "kncross/enumerate.hpp"
#include "kncross/laurent.hpp"
#include "kncross/numeric.hpp"

namespace kncross {

// ---------------------------------------------------------------------------
// Quadrant walks

/// One compound step (two half-steps of a braid tableau with two rows).
/// Steps that lower y are illegal on y = 0, steps that lower x on x = 0.
struct WalkStep {
  std::string_view name;
  int dx;
  int dy;
  bool needs_positive_x;
  bool needs_positive_y;
};

/// E, N, W, S, the two stays (x x̄ and y ȳ), x ȳ and x̄ y.
const std::array<WalkStep, 8>& braid_walk_steps();

struct WalkState {
  int x = 1;
  int y = 0;
};

struct WalkCounts {
  BigInt returns;    // a_n: (1,0) -> (1,0)
  BigInt reflected;  // b_n: (1,0) -> (0,1)
};

WalkCounts count_walks_dp(int n);
/// Entries 0..n_max.
std::vector<WalkCounts> count_walks_table(int n_max);

// ---------------------------------------------------------------------------
// Kernel and the root Y0

/// K(x,y;t) = constant + t^2 * t2_part with
/// constant = xy, t2_part = -(x^2 y + x y^2 + y + x + x^2 + y^2 + 2xy).
struct Kernel {
  BivariateLaurent constant;
  BivariateLaurent t2_part;
};

Kernel braid_kernel();

/// K(x, y; t) with y a series in t over Laurent polynomials in x.
TruncatedSeries kernel_at(const TruncatedSeries& y);

/// Power-series root of the kernel with nonnegative coefficients, from
/// Y <- t^2 (x̄ + 1)(x + Y)(1 + Y) started at 0. `order` is the largest
/// retained t-exponent, even and at least 2.
TruncatedSeries y0_series(int order);

// ---------------------------------------------------------------------------
// rho3 routes

/// [t^{2n+2}] CT_x((1-x-x^4+x^3) Y0 + (-x̄^4+x̄^3+1-x̄) Y0^3 + (x̄^5-x̄^4-x̄+x̄^2) Y0^2).
BigInt rho3_kernel_ct(int n);
/// Entries 1..n_max from a single series expansion.
std::vector<BigInt> rho3_kernel_ct_table(int n_max);

/// [x^m t^{2n+2}] Y0^k = k/(n+1) sum_s C(n+1,s) C(n+1,k+s) C(n+1,s+m).
BigInt coeff_y0_pow(int k, int m, int n);

/// Twelve-term alternating binomial sum.
BigInt rho3_closed_form(int n);

struct RecurrenceCoefficients {
  BigInt a1, a2, a3, a4;
};

/// a1 rho(n) + a2 rho(n+1) + a3 rho(n+2) - a4 rho(n+3) = 0 with
/// a1 = 8(n+1)(n+2)(n+3), a2 = 3(n+2)(5n^2+47n+104), a3 = 3(n+4)(2n+11)(n+7),
/// a4 = (n+7)(n+8)(n+9).
RecurrenceCoefficients recurrence_coefficients(long n);

/// Table of rho3(1..n_max) from the seeds rho3(1), rho3(2), rho3(3). Throws
/// inexact_division when a step does not divide exactly and seed_mismatch when
/// the seeds disagree with the closed form.
CountTable rho3_recurrence(int n_max, std::span<const BigInt> seeds);
/// Seeds taken from rho3_closed_form.
CountTable rho3_recurrence(int n_max);

/// rho3 over 1..n_max by one route; brute force enumerates braids.
CountTable rho3_table(Route route, int n_max);

// ---------------------------------------------------------------------------
// Asymptotics

/// The value printed alongside the expansion; see fit_K for the measured limit.
inline constexpr std::string_view kQuotedK = "6686.408973";

struct AsymptoticParams {
  Rational lambda;
  Rational theta;
  Rational c1, c2, c3;
  BigFloat K{0, kFloatPrecision};
};

/// P(X) = 1 + 15/8 X + 3/4 X^2 - 1/8 X^3.
Rational characteristic_polynomial(const Rational& x);
/// All rational roots of P, ascending.
std::vector<Rational> characteristic_roots();

/// Growth rate from the dominant root of P; theta, c1, c2, c3 solved exactly from
/// the linear equations obtained by equating the n^-1 .. n^-4 coefficients;
/// K set to the quoted value.
AsymptoticParams characteristic_analysis();

/// The same constants derived independently: substitute
/// lambda^n n^theta (1 + c1/n + c2/n^2 + c3/n^3) into the recurrence and solve
/// order by order in 1/n.
AsymptoticParams asymptotics_from_recurrence();

BigFloat asymptotic_estimate(int n, const AsymptoticParams& params, const BigFloat& K);
inline BigFloat asymptotic_estimate(int n, const AsymptoticParams& params) {
  return asymptotic_estimate(n, params, params.K);
}

/// rho3(n) 8^-n n^7 / (1 + c1/n + c2/n^2 + c3/n^3) at n = n_probe, with the
/// exact value from the recurrence.
BigFloat fit_K(int n_probe, const AsymptoticParams& params);

/// |estimate / exact - 1|.
BigFloat relative_error(const BigFloat& estimate, const BigInt& exact);

}  // namespace kncross
