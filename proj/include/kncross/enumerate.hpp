#pragma once

// Exhaustive generators for set partitions and braids, and brute-force count
// tables. These are the ground truth every closed formula is checked against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "kncross/diagram.hpp"
#include "kncross/numeric.hpp"

namespace kncross {

/// Visits every restricted growth string a_1..a_n (a_1 = 0,
/// a_i <= 1 + max(a_1..a_{i-1})) with the given prefix, in lexicographic order.
template <class Visit>
void for_each_restricted_growth_string(int n, std::span<const int> prefix, Visit&& visit) {
  const int fixed = static_cast<int>(prefix.size());
  if (fixed > n) return;
  std::vector<int> a(n, 0);
  std::vector<int> max_before(n, -1);  // max(a_0..a_{i-1}), -1 for i = 0
  int running = -1;
  for (int i = 0; i < n; ++i) {
    max_before[i] = running;
    if (i < fixed) a[i] = prefix[i];
    running = std::max(running, a[i]);
  }
  while (true) {
    visit(std::span<const int>(a));
    int i = n - 1;
    while (i >= fixed && a[i] > max_before[i]) --i;
    if (i < fixed) return;
    ++a[i];
    const int m = std::max(max_before[i], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      max_before[j] = m;
    }
  }
}

template <class Visit>
void for_each_restricted_growth_string(int n, Visit&& visit) {
  for_each_restricted_growth_string(n, std::span<const int>{}, std::forward<Visit>(visit));
}

/// Standard arcs of the set partition encoded by a restricted growth string.
PartitionDiagram partition_from_rgs(std::span<const int> rgs);

template <class Visit>
void for_each_set_partition(int n, Visit&& visit) {
  for_each_restricted_growth_string(n, [&](std::span<const int> rgs) { visit(partition_from_rgs(rgs)); });
}

template <class Visit>
void for_each_partition_k(int n, int k, Visit&& visit) {
  for_each_set_partition(n, [&](const PartitionDiagram& p) {
    if (is_k_noncrossing(p, k)) visit(p);
  });
}

template <class Visit>
void for_each_two_regular_k(int n, int k, Visit&& visit) {
  for_each_set_partition(n, [&](const PartitionDiagram& p) {
    if (is_two_regular(p) && is_k_noncrossing(p, k)) visit(p);
  });
}

/// Skeletons: set partitions of [n] without k mutually crossing arcs under the
/// braid convention (chains may share the middle endpoint).
template <class Visit>
void for_each_braid_skeleton(int n, int k, Visit&& visit) {
  for_each_set_partition(n, [&](const PartitionDiagram& p) {
    BraidDiagram skeleton(p.diagram());
    if (is_k_noncrossing(skeleton, k)) visit(p);
  });
}

/// Every k-noncrossing braid over [n]: each isolated skeleton vertex is either
/// left isolated or carries a loop.
template <class Visit>
void for_each_braid(int n, int k, Visit&& visit) {
  for_each_braid_skeleton(n, k, [&](const PartitionDiagram& skeleton) {
    std::vector<char> touched(n + 1, 0);
    for (const Arc& a : skeleton.arcs()) touched[a.left] = touched[a.right] = 1;
    std::vector<int> isolated;
    for (int v = 1; v <= n; ++v) {
      if (!touched[v]) isolated.push_back(v);
    }
    const std::uint64_t choices = std::uint64_t{1} << isolated.size();
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
      std::vector<Arc> arcs = skeleton.arcs();
      for (std::size_t b = 0; b < isolated.size(); ++b) {
        if (mask >> b & 1U) arcs.push_back({isolated[b], isolated[b]});
      }
      visit(BraidDiagram(n, std::move(arcs)));
    }
  });
}

template <class Visit>
void for_each_braid_no_isolated(int n, int k, Visit&& visit) {
  for_each_braid_skeleton(n, k, [&](const PartitionDiagram& skeleton) { visit(flat_partition_to_braid(skeleton)); });
}

std::vector<PartitionDiagram> set_partitions(int n);
std::vector<PartitionDiagram> partitions_k(int n, int k);
std::vector<PartitionDiagram> two_regular_k(int n, int k);
std::vector<BraidDiagram> braids(int n, int k);
std::vector<BraidDiagram> braids_no_isolated(int n, int k);

/// Bell numbers by B(m+1) = sum_j C(m,j) B(j).
BigInt bell_number(int n);

enum class ClassTag { partitions_k, two_regular_k, braids_k, braids_k_no_isolated };
enum class Route { brute, closed_form, recurrence, kernel_ct, walk_dp };

std::string_view to_string(ClassTag tag);
std::string_view to_string(Route route);
/// Accepts the CLI spellings partitions | 2regular | braids | braids-noiso.
ClassTag parse_class_tag(std::string_view text);
/// Accepts brute | closed | recurrence | kernel | walk (and the enum spellings).
Route parse_route(std::string_view text);

struct CountTable {
  ClassTag class_tag = ClassTag::partitions_k;
  int k = 3;
  Route route = Route::brute;
  std::map<int, BigInt> entries;
};

/// Brute-force enumeration is refused when Bell(n_max) exceeds this.
inline constexpr long kBruteForceLimit = 10'000'000;

/// Dense table for n in [n_min, n_max]. Brute force works for every class and
/// k and starts at n = 0; the other routes exist for k = 3 on the braid class
/// without isolated points (n >= 1) and, shifted by one, on 2-regular
/// partitions (n >= 2). `jobs` > 1 shards the brute-force enumeration.
CountTable count_table(ClassTag class_tag, int k, int n_max, Route route = Route::brute, int jobs = 1);

/// Brute-force count for a single n.
BigInt brute_count(ClassTag class_tag, int k, int n, int jobs = 1);

}  // namespace kncross
