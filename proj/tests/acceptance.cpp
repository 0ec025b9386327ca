// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "kncross/duality.hpp"
#include "kncross/enumerate.hpp"
#include "kncross/error.hpp"
#include "kncross/tableau.hpp"
#include "kncross/walks.hpp"

using namespace kncross;

namespace {

// Frozen tolerances.
constexpr double kRuntimeBudgetSeconds = 120.0;
constexpr double kEstimateTolerance200 = 1e-3;  // measured 7.40e-4
constexpr int kSignificantFiguresK = 4;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition && passed) detail << (detail.tellp() > 0 ? "; " : "") << "failed: " << what;
    passed = passed && condition;
  }
};

std::string seconds_since(std::chrono::steady_clock::time_point start) {
  std::ostringstream s;
  s.precision(3);
  s << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << "s";
  return s.str();
}

Outcome duality_cardinality() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (int k : {3, 4}) {
    for (int n = 2; n <= 9; ++n) {
      std::set<BraidDiagram> image;
      long partitions = 0;
      bool injective = true, contained = true;
      for_each_partition_k(n, k, [&](const PartitionDiagram& p) {
        ++partitions;
        const BraidDiagram b = theta_direct(p);
        contained = contained && b.size() == n - 1 && is_k_noncrossing(b, k);
        injective = image.insert(b).second && injective;
      });
      long braid_count = 0;
      for_each_braid(n - 1, k, [&](const BraidDiagram&) { ++braid_count; });
      const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      o.expect(injective, "injective " + at);
      o.expect(contained, "image in B_k(n-1) " + at);
      o.expect(partitions == braid_count, "|P_k(n)| = |B_k(n-1)| " + at);
    }
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(elapsed < kRuntimeBudgetSeconds, "runtime budget");
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << "k in {3,4}, 2 <= n <= 9 in " << seconds_since(start);
  return o;
}

Outcome route_agreement() {
  Outcome o;
  long checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for_each_partition_k(n, 3, [&](const PartitionDiagram& p) {
      ++checked;
      if (theta_tableau(p) != theta_direct(p)) o.expect(false, to_string(p));
    });
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << checked << " partitions, n <= 7";
  return o;
}

Outcome restriction() {
  Outcome o;
  for (int k : {3, 4}) {
    for (int n = 2; n <= 9; ++n) {
      std::set<BraidDiagram> image, target;
      for_each_two_regular_k(n, k, [&](const PartitionDiagram& p) { image.insert(theta_restricted(p, k)); });
      for_each_braid_no_isolated(n - 1, k, [&](const BraidDiagram& b) { target.insert(b); });
      o.expect(image == target, "k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  // At n = 2 the lone partition {1},{2} goes to the loop on [1].
  o.expect(theta_restricted(PartitionDiagram(2, {}), 3) == BraidDiagram(1, {{1, 1}}), "n=2 boundary");
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << "n <= 9, k in {3,4}; n=2: {1},{2} -> loop (1,1)";
  return o;
}

Outcome rho3_routes() {
  Outcome o;
  const auto brute = rho3_table(Route::brute, 8).entries;
  const auto closed = rho3_table(Route::closed_form, 8).entries;
  const auto kernel = rho3_table(Route::kernel_ct, 8).entries;
  const auto recurrence = rho3_table(Route::recurrence, 8).entries;
  o.expect(brute == closed, "brute = closed form");
  o.expect(brute == kernel, "brute = kernel constant term");
  o.expect(brute == recurrence, "brute = recurrence");
  const auto long_run = rho3_recurrence(300).entries;
  for (int n : {50, 150, 300}) o.expect(long_run.at(n) == rho3_closed_form(n), "closed = recurrence at " + std::to_string(n));
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << "rho3(8) = " << brute.at(8).get_str();
  return o;
}

Outcome reflection() {
  Outcome o;
  const auto walks = count_walks_table(12);
  for (int n = 1; n <= 12; ++n) {
    o.expect(walks[n].returns - walks[n].reflected == rho3_closed_form(n), "n=" + std::to_string(n));
  }
  const auto brute = rho3_table(Route::brute, 8).entries;
  for (const auto& [n, v] : brute) o.expect(walks[n].returns - walks[n].reflected == v, "brute n=" + std::to_string(n));
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << "a_12 - b_12 = " << BigInt(walks[12].returns - walks[12].reflected).get_str();
  return o;
}

Outcome row_bound() {
  Outcome o;
  long checked = 0;
  auto check = [&](const auto& d) {
    ++checked;
    const VacillatingTableau t = diagram_to_tableau(d);
    const int rows = max_row_count(t);
    for (int k : {3, 4}) {
      if (is_k_noncrossing(d, k) != (rows < k)) o.expect(false, "row bound " + to_string(d));
    }
    if (tableau_to_diagram(t) != decltype(tableau_to_diagram(t))(d)) o.expect(false, "round trip " + to_string(d));
  };
  for (int n = 0; n <= 8; ++n) {
    for_each_set_partition(n, check);
    for_each_braid(n, n + 2, check);  // no bound: every braid
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << checked << " diagrams, n <= 8";
  return o;
}

Outcome series_identities() {
  Outcome o;
  const TruncatedSeries y = y0_series(40);
  o.expect(kernel_at(y).is_zero(), "kernel vanishes to t^40");
  const Kernel kernel = braid_kernel();
  for (const BivariateLaurent* p : {&kernel.constant, &kernel.t2_part}) {
    o.expect(p->substitute({{-1, 1}, {0, 1}}).shifted(2, -1) == *p, "symmetry x -> x̄y");
    o.expect(p->substitute({{-1, 1}, {-1, 0}}).shifted(3, 0) == *p, "symmetry x -> x̄y, y -> x̄");
  }
  // (1+x) t^2 + x(x+1)(x̄+1)^2 t^4
  o.expect(y.coeff(2) == LaurentPoly{{0, 1}, {1, 1}}, "t^2 term");
  o.expect(y.coeff(4) == LaurentPoly{{-1, 1}, {0, 3}, {1, 3}, {2, 1}}, "t^4 term");
  const TruncatedSeries powers[3] = {y0_series(22), y0_series(22).pow(2), y0_series(22).pow(3)};
  for (int k = 1; k <= 3; ++k) {
    for (int n = 0; n <= 10; ++n) {
      for (int m = -5; m <= 5; ++m) {
        if (coeff_y0_pow(k, m, n) != powers[k - 1].coeff(2 * n + 2).coeff(m)) {
          o.expect(false, "coefficient formula k=" + std::to_string(k) + " m=" + std::to_string(m) +
                              " n=" + std::to_string(n));
        }
      }
    }
  }
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << "order 40; formula over k <= 3, |m| <= 5, n <= 10";
  return o;
}

Outcome asymptotics() {
  Outcome o;
  const AsymptoticParams p = characteristic_analysis();
  o.expect(p.theta == -7, "theta = -7");
  o.expect(p.c1 == -28, "c1 = -28");
  o.expect(to_fixed(p.c2, 5) == "455.77778" && to_fixed(p.c2, 3) == "455.778", "c2 decimals");
  o.expect(to_fixed(p.c3, 6) == "-5651.160494", "c3 decimals");

  const auto exact = rho3_recurrence(200).entries;
  const BigFloat e50 = relative_error(asymptotic_estimate(50, p), exact.at(50));
  const BigFloat e200 = relative_error(asymptotic_estimate(200, p), exact.at(200));
  o.expect(e200 < e50, "error decreases from 50 to 200");
  o.expect(e200 < kEstimateTolerance200, "error at 200 within tolerance");

  const BigFloat fitted = fit_K(200, p);
  o.expect(to_decimal(fitted, kSignificantFiguresK) == to_decimal(p.K, kSignificantFiguresK),
           "fit_K(200) = " + to_decimal(fitted, 10) + " vs K = " + std::string(kQuotedK) + " to " +
               std::to_string(kSignificantFiguresK) + " significant figures");
  o.detail << (o.detail.tellp() > 0 ? "; " : "") << "c2 = " << to_fraction(p.c2) << ", c3 = " << to_fraction(p.c3)
           << ", error(50) = " << to_decimal(e50, 4) << ", error(200) = " << to_decimal(e200, 4);
  return o;
}

Outcome exact_division() {
  Outcome o;
  try {
    const CountTable t = rho3_recurrence(1000);
    o.expect(t.entries.size() == 1000, "1000 terms");
    o.detail << "rho3(1000) has " << t.entries.at(1000).get_str().size() << " digits";
  } catch (const Error& e) {
    o.expect(false, e.what());
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"AC1", duality_cardinality}, {"AC2", route_agreement}, {"AC3", restriction},
      {"AC4", rho3_routes},         {"AC5", reflection},      {"AC6", row_bound},
      {"AC7", series_identities},   {"AC8", asymptotics},     {"AC9", exact_division},
  };
  int failures = 0;
  for (const auto& [name, criterion] : criteria) {
    Outcome o;
    try {
      o = criterion();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << name << " " << (o.passed ? "PASS" : "FAIL") << "  " << o.detail.str() << std::endl;
    failures += !o.passed;
  }
  return failures == 0 ? 0 : 1;
}
